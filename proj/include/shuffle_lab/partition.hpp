#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace shuffle_lab {

// Non-increasing positive parts; trailing zeros are dropped on construction.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // Row lengths with 1-based row index; 0 beyond the last row.
    int row(int i) const;

    // True for tuples of non-negative, non-increasing integers.
    static bool is_partition(const std::vector<int>& tuple);

    std::string to_string() const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

class BiPartition {
public:
    BiPartition() = default;
    BiPartition(Partition first, Partition second)
        : first_(std::move(first)), second_(std::move(second)) {}

    const Partition& first() const { return first_; }
    const Partition& second() const { return second_; }
    const Partition& component(int k) const { return k == 1 ? first_ : second_; }
    int size() const { return first_.size() + second_.size(); }

    std::string to_string() const;

    auto operator<=>(const BiPartition&) const = default;

private:
    Partition first_;
    Partition second_;
};

}  // namespace shuffle_lab
