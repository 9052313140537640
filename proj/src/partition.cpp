#include "shuffle_lab/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace shuffle_lab {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    if (!is_partition(parts))
        throw std::invalid_argument("not a partition: parts must be positive and non-increasing");
    parts_ = std::move(parts);
    for (int p : parts_) size_ += p;
}

int Partition::row(int i) const {
    if (i < 1 || i > length()) return 0;
    return parts_[static_cast<std::size_t>(i - 1)];
}

bool Partition::is_partition(const std::vector<int>& tuple) {
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (tuple[i] < 0) return false;
        if (i > 0 && tuple[i] > tuple[i - 1]) return false;
    }
    return true;
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

std::string BiPartition::to_string() const {
    return "(" + first_.to_string() + "," + second_.to_string() + ")";
}

}  // namespace shuffle_lab
