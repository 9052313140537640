#include "shuffle_lab/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace shuffle_lab {

namespace {

Partition shape_of(const std::vector<std::vector<int>>& rows) {
    std::vector<int> parts;
    for (const auto& r : rows) {
        if (r.empty()) throw std::invalid_argument("tableau rows must be non-empty");
        parts.push_back(static_cast<int>(r.size()));
    }
    if (!Partition::is_partition(parts)) throw std::invalid_argument("row lengths are not a partition");
    return Partition(std::move(parts));
}

void check_increasing(const std::vector<std::vector<int>>& rows) {
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            if (j > 0 && rows[i][j] <= rows[i][j - 1])
                throw std::invalid_argument("tableau rows must increase");
            if (i > 0 && rows[i][j] <= rows[i - 1][j])
                throw std::invalid_argument("tableau columns must increase");
        }
}

std::string rows_string(const std::vector<std::vector<int>>& rows) {
    std::string s;
    bool wide = false;
    for (const auto& r : rows)
        for (int v : r) wide = wide || v > 9;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) s += "/";
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            if (wide && j) s += ",";
            s += std::to_string(rows[i][j]);
        }
    }
    return s.empty() ? "()" : s;
}

std::vector<std::vector<int>> empty_rows(const Partition& lambda) {
    std::vector<std::vector<int>> rows;
    for (int p : lambda.parts()) rows.emplace_back(static_cast<std::size_t>(p), 0);
    return rows;
}

}  // namespace

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows)
    : rows_(std::move(rows)), shape_(shape_of(rows_)) {
    check_increasing(rows_);
    std::vector<int> all;
    for (const auto& r : rows_) all.insert(all.end(), r.begin(), r.end());
    std::sort(all.begin(), all.end());
    for (std::size_t k = 0; k < all.size(); ++k)
        if (all[k] != static_cast<int>(k) + 1) throw std::invalid_argument("tableau values must be 1..n");
}

StandardTableau StandardTableau::from_filling(std::vector<std::vector<int>> rows) {
    StandardTableau t = unchecked(std::move(rows));
    std::vector<int> all = t.reading_word();
    std::sort(all.begin(), all.end());
    for (std::size_t k = 0; k < all.size(); ++k)
        if (all[k] != static_cast<int>(k) + 1) throw std::invalid_argument("filling values must be 1..n");
    return t;
}

StandardTableau StandardTableau::unchecked(std::vector<std::vector<int>> rows) {
    StandardTableau t;
    t.shape_ = shape_of(rows);
    t.rows_ = std::move(rows);
    return t;
}

Box StandardTableau::box_of(int value) const {
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (std::size_t j = 0; j < rows_[i].size(); ++j)
            if (rows_[i][j] == value) return {static_cast<int>(i) + 1, static_cast<int>(j) + 1};
    throw std::out_of_range("value not in tableau");
}

std::vector<int> StandardTableau::reading_word() const {
    std::vector<int> w;
    for (const auto& r : rows_) w.insert(w.end(), r.begin(), r.end());
    return w;
}

std::string StandardTableau::to_string() const { return rows_string(rows_); }

BiTableau::BiTableau(std::vector<std::vector<int>> first, std::vector<std::vector<int>> second)
    : first_(std::move(first)), second_(std::move(second)) {
    shape_ = BiPartition(shape_of(first_), shape_of(second_));
    check_increasing(first_);
    check_increasing(second_);
    std::vector<int> all;
    for (const auto* comp : {&first_, &second_})
        for (const auto& r : *comp) all.insert(all.end(), r.begin(), r.end());
    std::sort(all.begin(), all.end());
    for (std::size_t k = 0; k < all.size(); ++k)
        if (all[k] != static_cast<int>(k) + 1) throw std::invalid_argument("bi-tableau values must be 1..n");
}

std::pair<int, Box> BiTableau::box_of(int value) const {
    for (int k = 1; k <= 2; ++k) {
        const auto& rows = component(k);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < rows[i].size(); ++j)
                if (rows[i][j] == value) return {k, {static_cast<int>(i) + 1, static_cast<int>(j) + 1}};
    }
    throw std::out_of_range("value not in bi-tableau");
}

std::string BiTableau::to_string() const {
    return "(" + rows_string(first_) + "," + rows_string(second_) + ")";
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("negative size");
    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            rec(remaining - p, p);
            current.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<BiPartition> bipartitions_of(int n) {
    std::vector<BiPartition> out;
    for (int k = n; k >= 0; --k)
        for (const auto& a : partitions_of(k))
            for (const auto& b : partitions_of(n - k)) out.emplace_back(a, b);
    return out;
}

bool dominates(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) throw std::invalid_argument("dominates: size mismatch");
    int a = 0, b = 0;
    const int len = std::max(lambda.length(), mu.length());
    for (int i = 1; i <= len; ++i) {
        a += lambda.row(i);
        b += mu.row(i);
        if (a < b) return false;
    }
    return true;
}

bool bi_dominates(const BiPartition& lambda, const BiPartition& mu) {
    if (lambda.size() != mu.size()) throw std::invalid_argument("bi_dominates: size mismatch");
    if (lambda.first().size() != mu.first().size()) return lambda.first().size() > mu.first().size();
    return dominates(lambda.first(), mu.first()) && dominates(lambda.second(), mu.second());
}

Partition transpose(const Partition& lambda) {
    std::vector<int> parts(static_cast<std::size_t>(lambda.row(1)), 0);
    for (int p : lambda.parts())
        for (int j = 0; j < p; ++j) ++parts[static_cast<std::size_t>(j)];
    return Partition(std::move(parts));
}

BiPartition bi_transpose(const BiPartition& lambda) {
    return {transpose(lambda.second()), transpose(lambda.first())};
}

StandardTableau tableau_transpose(const StandardTableau& t) {
    const Partition shape = transpose(t.shape());
    auto rows = empty_rows(shape);
    for (int i = 1; i <= t.shape().length(); ++i)
        for (int j = 1; j <= t.shape().row(i); ++j)
            rows[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] = t.at(i, j);
    return StandardTableau::unchecked(std::move(rows));
}

int diag_sum(const Partition& lambda) {
    int s = 0;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.row(i); ++j) s += j - i;
    return s;
}

bool contains(const Partition& outer, const Partition& inner) {
    for (int i = 1; i <= inner.length(); ++i)
        if (inner.row(i) > outer.row(i)) return false;
    return true;
}

std::vector<StandardTableau> enumerate_syt(const Partition& lambda, const TableauCaps& caps) {
    if (lambda.size() > caps.syt) throw std::length_error("SYT enumeration cap exceeded");
    const int n = lambda.size();
    auto rows = empty_rows(lambda);
    std::vector<int> filled(static_cast<std::size_t>(lambda.length()), 0);
    std::vector<StandardTableau> out;
    std::function<void(int)> place = [&](int value) {
        if (value > n) {
            out.push_back(StandardTableau::unchecked(rows));
            return;
        }
        for (std::size_t i = 0; i < filled.size(); ++i) {
            const int col = filled[i];
            if (col >= lambda.parts()[i]) continue;
            if (i > 0 && filled[i - 1] <= col) continue;
            rows[i][static_cast<std::size_t>(col)] = value;
            ++filled[i];
            place(value + 1);
            --filled[i];
        }
    };
    place(1);
    std::sort(out.begin(), out.end(),
              [](const StandardTableau& a, const StandardTableau& b) { return a.reading_word() < b.reading_word(); });
    return out;
}

namespace {

// Rewrites a tableau on 1..k using the given sorted value labels.
std::vector<std::vector<int>> relabel(const StandardTableau& t, const std::vector<int>& labels) {
    auto rows = t.rows();
    for (auto& r : rows)
        for (int& v : r) v = labels[static_cast<std::size_t>(v - 1)];
    return rows;
}

}  // namespace

std::vector<BiTableau> enumerate_bi_syt(const BiPartition& lambda, const TableauCaps& caps) {
    const int n = lambda.size();
    if (n > caps.syt) throw std::length_error("bi-tableau enumeration cap exceeded");
    const int k = lambda.first().size();
    const auto first = enumerate_syt(lambda.first(), caps);
    const auto second = enumerate_syt(lambda.second(), caps);
    std::vector<BiTableau> out;
    std::vector<char> choose(static_cast<std::size_t>(n), 0);
    std::fill(choose.begin(), choose.begin() + k, 1);
    do {
        std::vector<int> in_first, in_second;
        for (int v = 1; v <= n; ++v) (choose[static_cast<std::size_t>(v - 1)] ? in_first : in_second).push_back(v);
        for (const auto& a : first)
            for (const auto& b : second) out.emplace_back(relabel(a, in_first), relabel(b, in_second));
    } while (std::prev_permutation(choose.begin(), choose.end()));
    return out;
}

namespace {

BigInt dimension_rec(const Partition& lambda, std::map<Partition, BigInt>& memo) {
    if (lambda.size() <= 1) return 1;
    auto it = memo.find(lambda);
    if (it != memo.end()) return it->second;
    BigInt total = 0;
    std::vector<int> parts = lambda.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const bool removable = i + 1 == parts.size() || parts[i + 1] < parts[i];
        if (!removable) continue;
        --parts[i];
        total += dimension_rec(Partition(parts), memo);
        ++parts[i];
    }
    memo.emplace(lambda, total);
    return total;
}

}  // namespace

BigInt dimension(const Partition& lambda) {
    std::map<Partition, BigInt> memo;
    return dimension_rec(lambda, memo);
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt bi_dimension(const BiPartition& lambda) {
    return binomial(lambda.size(), lambda.first().size()) * dimension(lambda.first()) * dimension(lambda.second());
}

DimensionTable::DimensionTable(int max_size) {
    for (int m = 0; m <= max_size; ++m)
        for (const auto& p : partitions_of(m)) dimension_rec(p, table_);
    table_[Partition{}] = 1;
    table_[Partition{1}] = 1;
}

const BigInt& DimensionTable::operator()(const Partition& lambda) const {
    auto it = table_.find(lambda);
    if (it == table_.end()) throw std::out_of_range("partition outside dimension table");
    return it->second;
}

bool is_horizontal_strip(const Partition& lambda, const Partition& mu) {
    if (!contains(lambda, mu)) throw std::invalid_argument("is_horizontal_strip: inner shape not contained");
    for (int i = 1; i <= lambda.length(); ++i)
        if (lambda.row(i + 1) > mu.row(i)) return false;
    return true;
}

bool is_desarrangement(const StandardTableau& t) {
    if (t.shape().row(1) < 2) return t.size() % 2 == 0;
    return t.at(1, 2) % 2 == 1;
}

long long desarrangement_count(const Partition& lambda, const TableauCaps& caps) {
    if (lambda.empty()) return 1;
    long long c = 0;
    for (const auto& t : enumerate_syt(lambda, caps)) c += is_desarrangement(t);
    return c;
}

StandardTableau special_tableau(const Partition& lambda, Filling kind) {
    auto rows = empty_rows(lambda);
    int next = 1;
    switch (kind) {
        case Filling::row_wise:
            for (auto& r : rows)
                for (int& v : r) v = next++;
            break;
        case Filling::column_wise:
            for (int j = 1; j <= lambda.row(1); ++j)
                for (int i = 1; i <= lambda.length() && lambda.row(i) >= j; ++i)
                    rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = next++;
            break;
        case Filling::diagonal_wise:
            for (int d = 1 - lambda.length(); d <= lambda.row(1) - 1; ++d)
                for (int i = 1; i <= lambda.length(); ++i) {
                    const int j = i + d;
                    if (j >= 1 && j <= lambda.row(i))
                        rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = next++;
                }
            return StandardTableau::from_filling(std::move(rows));
    }
    return StandardTableau(std::move(rows));
}

Partition star_shape(int n, int k) {
    const int width = n - k;
    if (width <= 0) throw std::invalid_argument("star_shape: need k < n");
    std::vector<int> parts(static_cast<std::size_t>(n / width), width);
    if (n % width) parts.push_back(n % width);
    return Partition(std::move(parts));
}

std::vector<Child> add_box_children(const Partition& lambda) {
    std::vector<Child> out;
    for (int i = 1; i <= lambda.length() + 1; ++i) {
        if (i > 1 && lambda.row(i) >= lambda.row(i - 1)) continue;
        std::vector<int> parts = lambda.parts();
        if (i > lambda.length())
            parts.push_back(1);
        else
            ++parts[static_cast<std::size_t>(i - 1)];
        out.push_back({i, Partition(std::move(parts))});
    }
    return out;
}

std::vector<BiChild> add_box_children(const BiPartition& lambda) {
    std::vector<BiChild> out;
    for (const auto& c : add_box_children(lambda.first())) out.push_back({c.row, 1, {c.shape, lambda.second()}});
    for (const auto& c : add_box_children(lambda.second())) out.push_back({c.row, 2, {lambda.first(), c.shape}});
    return out;
}

}  // namespace shuffle_lab
