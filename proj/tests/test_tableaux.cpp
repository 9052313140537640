#include "shuffle_lab/tableaux.hpp"

#include <doctest.h>

#include <functional>
#include <set>

using namespace shuffle_lab;

namespace {

Partition ones(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

long long lattice_paths(const Partition& target) {
    std::function<long long(const Partition&)> walk = [&](const Partition& current) -> long long {
        if (current == target) return 1;
        long long total = 0;
        for (const auto& c : add_box_children(current))
            if (contains(target, c.shape)) total += walk(c.shape);
        return total;
    };
    return walk(Partition{});
}

}  // namespace

TEST_CASE("partition construction") {
    CHECK(Partition(std::vector<int>{3, 2, 0, 0}) == Partition{3, 2});
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
    CHECK(Partition{}.size() == 0);
    CHECK(Partition{3, 2}.to_string() == "(3,2)");
}

TEST_CASE("partition lists") {
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(0)[0].empty());
    CHECK(partitions_of(4)[0] == Partition{4});
    const auto bi = bipartitions_of(2);
    REQUIRE(bi.size() == 5);
    CHECK(bi[0] == BiPartition(Partition{2}, Partition{}));
    CHECK(bi[1] == BiPartition(Partition{1, 1}, Partition{}));
    CHECK(bi[2] == BiPartition(Partition{1}, Partition{1}));
    CHECK(bi[3] == BiPartition(Partition{}, Partition{2}));
    CHECK(bi[4] == BiPartition(Partition{}, Partition{1, 1}));
}

TEST_CASE("dominance") {
    CHECK(dominates(Partition{3, 2, 2, 1}, Partition{2, 2, 2, 2}));
    CHECK_FALSE(dominates(Partition{5, 1, 1, 1}, Partition{4, 4}));
    CHECK_FALSE(dominates(Partition{4, 4}, Partition{5, 1, 1, 1}));
    CHECK(dominates(Partition{3, 1}, Partition{3, 1}));
    CHECK_THROWS_AS(dominates(Partition{3}, Partition{2}), std::invalid_argument);

    CHECK(bi_dominates({Partition{3}, Partition{}}, {Partition{2, 1}, Partition{}}));
    CHECK(bi_dominates({Partition{1}, Partition{1}}, {Partition{}, Partition{2}}));
    const BiPartition a{Partition{2, 1}, Partition{2, 2}}, b{Partition{3}, Partition{2, 1, 1}};
    CHECK_FALSE(bi_dominates(a, b));
    CHECK_FALSE(bi_dominates(b, a));
}

TEST_CASE("dominance is a partial order reversed by transpose") {
    for (int n = 1; n <= 8; ++n) {
        const auto ps = partitions_of(n);
        for (const auto& a : ps)
            for (const auto& b : ps) {
                REQUIRE(dominates(a, b) == dominates(transpose(b), transpose(a)));
                if (a != b) REQUIRE_FALSE((dominates(a, b) && dominates(b, a)));
                if (!dominates(a, b)) continue;
                for (const auto& c : ps)
                    if (dominates(b, c)) REQUIRE(dominates(a, c));
            }
    }
}

TEST_CASE("transpose and diagonal sums") {
    CHECK(transpose(Partition{3, 2}) == Partition{2, 2, 1});
    CHECK(bi_transpose({Partition{3, 1}, Partition{2, 2, 1}}) == BiPartition(Partition{3, 2}, Partition{2, 1, 1}));
    CHECK(transpose(ones(5)) == Partition{5});
    CHECK(diag_sum(Partition{3, 2}) == 2);
    for (int n = 1; n <= 12; ++n) {
        CHECK(diag_sum(Partition{n}) == n * (n - 1) / 2);
        CHECK(diag_sum(ones(n)) == -n * (n - 1) / 2);
        for (const auto& p : partitions_of(n)) {
            REQUIRE(diag_sum(transpose(p)) == -diag_sum(p));
            REQUIRE(transpose(transpose(p)) == p);
        }
    }
}

TEST_CASE("standard tableaux") {
    const auto t32 = enumerate_syt(Partition{3, 2});
    REQUIRE(t32.size() == 5);
    CHECK(t32[0].to_string() == "123/45");
    CHECK(t32[4].to_string() == "135/24");
    CHECK(enumerate_syt(Partition{6}).size() == 1);
    CHECK_THROWS(enumerate_syt(Partition{15}));
    CHECK_THROWS_AS(StandardTableau({{1, 3}, {2, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(StandardTableau({{2, 1}}), std::invalid_argument);

    for (int n = 1; n <= 9; ++n) {
        BigInt total = 0;
        for (const auto& p : partitions_of(n)) {
            const auto d = dimension(p);
            total += d * d;
            REQUIRE(d == dimension(transpose(p)));
            REQUIRE(BigInt(enumerate_syt(p).size()) == d);
            REQUIRE(lattice_paths(p) == static_cast<long long>(enumerate_syt(p).size()));
        }
        CHECK(total == factorial(n));
    }
}

TEST_CASE("tableau transpose") {
    const auto t = special_tableau(Partition{3, 2}, Filling::row_wise);
    const auto tt = tableau_transpose(t);
    CHECK(tt.shape() == Partition{2, 2, 1});
    CHECK(tt.to_string() == "14/25/3");
    CHECK(tableau_transpose(tt) == t);
}

TEST_CASE("bi-tableaux") {
    CHECK(enumerate_bi_syt({Partition{2, 1}, Partition{2}}).size() == 20);
    CHECK(bi_dimension({Partition{2, 1}, Partition{2}}) == 20);
    CHECK(bi_dimension({Partition{3, 1}, Partition{2, 1}}) == 210);
    CHECK(bi_dimension({Partition{4}, Partition{}}) == 1);
    for (int n = 1; n <= 7; ++n) {
        BigInt total = 0;
        for (const auto& b : bipartitions_of(n)) {
            const auto list = enumerate_bi_syt(b);
            REQUIRE(BigInt(list.size()) == bi_dimension(b));
            total += bi_dimension(b) * bi_dimension(b);
            if (n <= 4) {
                std::set<BiTableau> uniq(list.begin(), list.end());
                REQUIRE(uniq.size() == list.size());
            }
        }
        CHECK(total == factorial(n) * (BigInt(1) << n));
    }
    const BiTableau t({{1, 3}}, {{2}});
    CHECK(t.box_of(2).first == 2);
    CHECK(t.box_of(3).second.col == 2);
}

TEST_CASE("dimension table") {
    const DimensionTable table(20);
    CHECK(table(Partition{3, 2}) == 5);
    CHECK(table(Partition{}) == 1);
    for (const auto& p : partitions_of(10)) REQUIRE(table(p) == dimension(p));
}

TEST_CASE("horizontal strips") {
    CHECK(is_horizontal_strip(Partition{4, 3}, Partition{3, 2}));
    CHECK_FALSE(is_horizontal_strip(Partition{4, 3}, Partition{2, 2}));
    CHECK(is_horizontal_strip(Partition{3, 1}, Partition{3, 1}));
    CHECK_THROWS_AS(is_horizontal_strip(Partition{2}, Partition{1, 1}), std::invalid_argument);
}

TEST_CASE("desarrangement tableaux") {
    CHECK(desarrangement_count(Partition{3, 2}) == 2);
    CHECK(desarrangement_count(Partition{2}) == 0);
    CHECK(desarrangement_count(Partition{1, 1}) == 1);
    CHECK(desarrangement_count(Partition{}) == 1);
    const auto t32 = enumerate_syt(Partition{3, 2});
    CHECK(is_desarrangement(t32[3]));
    CHECK(is_desarrangement(t32[4]));
}

TEST_CASE("special tableaux") {
    CHECK(special_tableau(Partition{3, 2}, Filling::row_wise).rows() == std::vector<std::vector<int>>{{1, 2, 3}, {4, 5}});
    CHECK(special_tableau(Partition{3, 2}, Filling::column_wise).rows() == std::vector<std::vector<int>>{{1, 3, 5}, {2, 4}});
    CHECK(special_tableau(Partition{4, 2}, Filling::diagonal_wise).rows() == std::vector<std::vector<int>>{{2, 4, 5, 6}, {1, 3}});
    CHECK(star_shape(7, 4) == Partition{3, 3, 1});
    CHECK(star_shape(6, 2) == Partition{4, 2});
}

TEST_CASE("adding boxes") {
    const auto c = add_box_children(Partition{1, 1, 1});
    REQUIRE(c.size() == 2);
    CHECK(c[0].shape == Partition{2, 1, 1});
    CHECK(c[1].shape == Partition{1, 1, 1, 1});
    const auto e = add_box_children(Partition{});
    REQUIRE(e.size() == 1);
    CHECK(e[0].shape == Partition{1});
    const auto b = add_box_children(BiPartition{Partition{1}, Partition{1}});
    REQUIRE(b.size() == 4);
    CHECK(b[0].shape == BiPartition(Partition{2}, Partition{1}));
    CHECK(b[1].shape == BiPartition(Partition{1, 1}, Partition{1}));
    CHECK(b[2].shape == BiPartition(Partition{1}, Partition{2}));
    CHECK(b[3].shape == BiPartition(Partition{1}, Partition{1, 1}));
}
