#pragma once

#include "shuffle_lab/numeric.hpp"
#include "shuffle_lab/partition.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace shuffle_lab {

struct Box {
    int row = 0;  // 1-based
    int col = 0;  // 1-based
    int diagonal() const { return col - row; }
};

// Filling of a Young diagram, strictly increasing along rows and columns.
class StandardTableau {
public:
    StandardTableau() = default;
    // Values must be exactly 1..n.
    explicit StandardTableau(std::vector<std::vector<int>> rows);
    // Any filling of a Young diagram by 1..n; rows and columns need not increase.
    static StandardTableau from_filling(std::vector<std::vector<int>> rows);

    const Partition& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int size() const { return shape_.size(); }
    int at(int row, int col) const { return rows_[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col - 1)]; }
    Box box_of(int value) const;
    std::vector<int> reading_word() const;
    std::string to_string() const;  // rows separated by '/', e.g. "123/45"

    auto operator<=>(const StandardTableau&) const = default;

private:
    static StandardTableau unchecked(std::vector<std::vector<int>> rows);
    friend StandardTableau tableau_transpose(const StandardTableau&);
    friend std::vector<StandardTableau> enumerate_syt(const Partition&, const struct TableauCaps&);

    std::vector<std::vector<int>> rows_;
    Partition shape_;
};

// Pair of fillings with disjoint values covering 1..n.
class BiTableau {
public:
    BiTableau() = default;
    BiTableau(std::vector<std::vector<int>> first, std::vector<std::vector<int>> second);

    const BiPartition& shape() const { return shape_; }
    const std::vector<std::vector<int>>& component(int k) const { return k == 1 ? first_ : second_; }
    int size() const { return shape_.size(); }
    // Component (1 or 2) and box holding the value.
    std::pair<int, Box> box_of(int value) const;
    std::string to_string() const;

    auto operator<=>(const BiTableau&) const = default;

private:
    std::vector<std::vector<int>> first_;
    std::vector<std::vector<int>> second_;
    BiPartition shape_;
};

struct TableauCaps {
    int syt = 14;
};

std::vector<Partition> partitions_of(int n);
std::vector<BiPartition> bipartitions_of(int n);

bool dominates(const Partition& lambda, const Partition& mu);
bool bi_dominates(const BiPartition& lambda, const BiPartition& mu);

Partition transpose(const Partition& lambda);
BiPartition bi_transpose(const BiPartition& lambda);
StandardTableau tableau_transpose(const StandardTableau& t);

int diag_sum(const Partition& lambda);
bool contains(const Partition& outer, const Partition& inner);

std::vector<StandardTableau> enumerate_syt(const Partition& lambda, const TableauCaps& caps = {});
std::vector<BiTableau> enumerate_bi_syt(const BiPartition& lambda, const TableauCaps& caps = {});

// Number of standard tableaux, by counting paths down Young's lattice.
BigInt dimension(const Partition& lambda);
BigInt bi_dimension(const BiPartition& lambda);
BigInt binomial(int n, int k);
BigInt factorial(int n);

// Memoized dimensions for every partition of size at most max_size.
class DimensionTable {
public:
    explicit DimensionTable(int max_size);
    const BigInt& operator()(const Partition& lambda) const;

private:
    std::map<Partition, BigInt> table_;
};

bool is_horizontal_strip(const Partition& lambda, const Partition& mu);

bool is_desarrangement(const StandardTableau& t);
long long desarrangement_count(const Partition& lambda, const TableauCaps& caps = {});

enum class Filling { row_wise, column_wise, diagonal_wise };
// Diagonal-wise fills diagonals j-i in increasing order, each top to bottom;
// the result is usually not standard, e.g. (4,2) gives 2456/13.
StandardTableau special_tableau(const Partition& lambda, Filling kind);

// As many rows of length n-k as fit, then the remainder.
Partition star_shape(int n, int k);

struct Child {
    int row = 0;
    Partition shape;
};
struct BiChild {
    int row = 0;
    int component = 1;
    BiPartition shape;
};
std::vector<Child> add_box_children(const Partition& lambda);
std::vector<BiChild> add_box_children(const BiPartition& lambda);

}  // namespace shuffle_lab
