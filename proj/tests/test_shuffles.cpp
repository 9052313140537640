#include "shuffle_lab/shuffles.hpp"

#include <doctest.h>

#include <cmath>
#include <map>

using namespace shuffle_lab;

namespace {

const std::vector<ShuffleKind> symmetric_kinds = {ShuffleKind::RT, ShuffleKind::TTR, ShuffleKind::RTR, ShuffleKind::OST};

ShuffleSpec biased(int n, int alpha) { return {ShuffleKind::OST_biased, n, Weight::power(alpha)}; }

template <class Element>
Rational total(const Support<Element, Rational>& s) {
    Rational t = 0;
    for (const auto& [g, p] : s) t += p;
    return t;
}

}  // namespace

TEST_CASE("pmf values") {
    const ShuffleSpec ost3(ShuffleKind::OST, 3);
    CHECK(pmf(ost3, Permutation::transposition(3, 1, 2)) == Rational(1, 6));
    CHECK(pmf(ost3, Permutation::identity(3)) == Rational(11, 18));
    CHECK(pmf(ShuffleSpec(ShuffleKind::RT, 4), Permutation::transposition(4, 1, 3)) == Rational(1, 8));
    CHECK(pmf(ShuffleSpec(ShuffleKind::RT, 4), Permutation::identity(4)) == Rational(1, 4));
    CHECK(pmf(ShuffleSpec(ShuffleKind::RTR, 4), Permutation::identity(4)) == Rational(1, 4));
    CHECK(pmf(ShuffleSpec(ShuffleKind::RTR, 4), Permutation::transposition(4, 2, 3)) == Rational(2, 16));
    CHECK(pmf(ShuffleSpec(ShuffleKind::RTR, 4), Permutation::from_cycles(4, {{1, 2, 3}})) == Rational(1, 16));
    CHECK(pmf(ShuffleSpec(ShuffleKind::B_RT, 3), SignedPermutation::identity(3)) == Rational(1, 6));
    CHECK(pmf(ShuffleSpec(ShuffleKind::B_RT, 3), SignedPermutation::flip(3, 2)) == Rational(1, 18));
    CHECK(pmf(ShuffleSpec(ShuffleKind::B_RT, 3), flip_pair(3, 1, 3)) == 0);
    CHECK(pmf(ShuffleSpec(ShuffleKind::B_OST, 2), SignedPermutation::identity(2)) == Rational(3, 8));
    CHECK(pmf(ShuffleSpec(ShuffleKind::B_OST, 2), SignedPermutation::flip(2, 2)) == Rational(1, 8));
    CHECK(pmf(ShuffleSpec(ShuffleKind::B_OST, 2), SignedPermutation::flip(2, 1)) == Rational(1, 4));
    CHECK_THROWS(pmf(ShuffleSpec(ShuffleKind::OST, 3), Permutation::identity(2)));
    CHECK_THROWS(pmf(ShuffleSpec(ShuffleKind::B_RT, 2), Permutation::identity(2)));
}

TEST_CASE("supports") {
    const auto ost2 = symmetric_support(ShuffleSpec(ShuffleKind::OST, 2));
    REQUIRE(ost2.size() == 2);
    CHECK(ost2[0].first.is_identity());
    CHECK(ost2[0].second == Rational(3, 4));
    CHECK(ost2[1].second == Rational(1, 4));

    const auto ttr = symmetric_support(ShuffleSpec(ShuffleKind::TTR, 3));
    REQUIRE(ttr.size() == 3);
    for (const auto& [g, p] : ttr) CHECK(p == Rational(1, 3));
    CHECK(pmf(ShuffleSpec(ShuffleKind::TTR, 3), Permutation::from_cycles(3, {{2, 1}})) == Rational(1, 3));
    CHECK(pmf(ShuffleSpec(ShuffleKind::TTR, 3), Permutation::from_cycles(3, {{3, 2, 1}})) == Rational(1, 3));

    const auto brt1 = signed_support(ShuffleSpec(ShuffleKind::B_RT, 1));
    REQUIRE(brt1.size() == 2);
    CHECK(brt1[0].second == Rational(1, 2));
    CHECK(brt1[1].first == SignedPermutation::flip(1, 1));
}

TEST_CASE("probabilities sum to one") {
    for (int n = 1; n <= 6; ++n) {
        for (auto k : symmetric_kinds) CHECK(total(symmetric_support(ShuffleSpec(k, n))) == 1);
        for (int a : {-2, -1, 1, 2, 3}) CHECK(total(symmetric_support(biased(n, a))) == 1);
        CHECK(total(signed_support(ShuffleSpec(ShuffleKind::B_RT, n))) == 1);
        CHECK(total(signed_support(ShuffleSpec(ShuffleKind::B_OST, n))) == 1);
        CHECK(total(signed_support(ShuffleSpec(ShuffleKind::B_OST_biased, n, Weight::power(2)))) == 1);
        double real = 0;
        for (const auto& [g, p] : symmetric_support_real(ShuffleSpec(ShuffleKind::OST_biased, n, Weight::power(0.5)))) real += p;
        CHECK(real == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("identity mass per definition") {
    for (int n = 1; n <= 6; ++n) {
        CHECK(identity_mass(ShuffleSpec(ShuffleKind::OST, n)) == harmonic(n) / n);
        CHECK(identity_mass(ShuffleSpec(ShuffleKind::RT, n)) == Rational(1, n));
        CHECK(identity_mass(ShuffleSpec(ShuffleKind::RTR, n)) == Rational(1, n));
        CHECK(identity_mass(ShuffleSpec(ShuffleKind::B_RT, n)) == Rational(1, 2 * n));
        Rational expected = 0;
        const ShuffleSpec b(ShuffleKind::B_OST_biased, n, Weight::power(1));
        for (int j = 1; j <= n; ++j) expected += b.exact_weight(j) / (2 * j * b.exact_weight_total());
        CHECK(identity_mass(b) == expected);
    }
}

TEST_CASE("reversibility") {
    for (int n = 2; n <= 5; ++n) {
        std::vector<ShuffleSpec> specs = {ShuffleSpec(ShuffleKind::RT, n), ShuffleSpec(ShuffleKind::RTR, n),
                                          ShuffleSpec(ShuffleKind::OST, n), biased(n, 2)};
        for (const auto& s : specs)
            for (const auto& [g, p] : symmetric_support(s)) REQUIRE(pmf(s, inverse(g)) == p);
        for (auto k : {ShuffleKind::B_RT, ShuffleKind::B_OST}) {
            const ShuffleSpec s(k, n);
            for (const auto& [g, p] : signed_support(s)) REQUIRE(pmf(s, inverse(g)) == p);
        }
        if (n >= 3) {
            const ShuffleSpec ttr(ShuffleKind::TTR, n);
            bool asymmetric = false;
            for (const auto& [g, p] : symmetric_support(ttr)) asymmetric = asymmetric || pmf(ttr, inverse(g)) != p;
            CHECK(asymmetric);
            CHECK_FALSE(ttr.reversible());
        }
    }
}

TEST_CASE("unbiased weight reduces to OST") {
    for (int n = 1; n <= 6; ++n) CHECK(symmetric_support(biased(n, 0)) == symmetric_support(ShuffleSpec(ShuffleKind::OST, n)));
    CHECK(signed_support(ShuffleSpec(ShuffleKind::B_OST_biased, 3, Weight::power(0))) ==
          signed_support(ShuffleSpec(ShuffleKind::B_OST, 3)));
}

TEST_CASE("random-to-random is top-to-random after random-to-top") {
    for (int n = 1; n <= 6; ++n)
        CHECK(convolve(symmetric_support(ShuffleSpec(ShuffleKind::TTR, n)), random_to_top_support(n)) ==
              symmetric_support(ShuffleSpec(ShuffleKind::RTR, n)));
}

TEST_CASE("cyclic walks") {
    const auto simple = cyclic_walk_pmf(ShuffleSpec(ShuffleKind::cyclic_simple, 5));
    REQUIRE(simple.size() == 2);
    CHECK(simple[0] == std::pair<int, Rational>{1, Rational(1, 2)});
    CHECK(simple[1] == std::pair<int, Rational>{4, Rational(1, 2)});
    const auto lazy = cyclic_walk_pmf(ShuffleSpec(ShuffleKind::cyclic_lazy, 2));
    REQUIRE(lazy.size() == 2);
    CHECK(lazy[0].second == Rational(1, 2));
    CHECK(lazy[1].second == Rational(1, 2));
    CHECK_THROWS(cyclic_walk_pmf(ShuffleSpec(ShuffleKind::OST, 3)));
}

TEST_CASE("spec validation and json") {
    CHECK_THROWS_AS(ShuffleSpec(ShuffleKind::OST_biased, 3), std::invalid_argument);
    CHECK_THROWS_AS(ShuffleSpec(ShuffleKind::OST, 3, Weight::power(1)), std::invalid_argument);
    CHECK_THROWS_AS(ShuffleSpec(ShuffleKind::OST, 0), std::invalid_argument);
    CHECK_THROWS_AS(Weight::table({Rational(1), Rational(0)}), std::invalid_argument);
    CHECK_THROWS_AS(ShuffleSpec(ShuffleKind::OST_biased, 3, Weight::table({1, 2})), std::invalid_argument);
    CHECK_THROWS_AS(spec_from_json("{\"kind\":\"XYZ\",\"n\":3}"), std::invalid_argument);
    CHECK_THROWS_AS(spec_from_json("not json"), std::invalid_argument);

    const auto s = spec_from_json("{\"kind\":\"OST_biased\",\"n\":4,\"alpha\":-1}");
    CHECK(s.kind() == ShuffleKind::OST_biased);
    CHECK(s.exact());
    CHECK(to_json(s) == "{\"kind\":\"OST_biased\",\"n\":4,\"alpha\":-1}");
    CHECK_FALSE(spec_from_json("{\"kind\":\"OST_biased\",\"n\":4,\"alpha\":0.5}").exact());
    const auto t = spec_from_json("{\"kind\":\"OST_biased\",\"n\":3,\"weights\":[1,\"1/2\",3]}");
    CHECK(t.exact_weight(2) == Rational(1, 2));
    CHECK(spec_from_json(to_json(t)).exact_weight_total() == Rational(9, 2));
    CHECK_THROWS_AS(symmetric_support(spec_from_json("{\"kind\":\"OST_biased\",\"n\":4,\"alpha\":0.5}")), std::domain_error);
}

TEST_CASE("sampling matches the pmf") {
    SUBCASE("OST n=4") {
        const ShuffleSpec spec(ShuffleKind::OST, 4);
        const ShuffleSampler sampler(spec);
        auto rng = make_rng(2024);
        const int draws = 1000000;
        std::map<Permutation, int> counts;
        for (int k = 0; k < draws; ++k) ++counts[sampler.sample_symmetric(rng)];
        for (const auto& [g, p] : symmetric_support(spec)) {
            const double q = to_double(p);
            const double sigma = std::sqrt(draws * q * (1 - q));
            CHECK(std::fabs(counts[g] - draws * q) <= 4 * sigma);
        }
        CHECK(counts.size() == symmetric_support(spec).size());
    }
    SUBCASE("B_OST n=1") {
        const ShuffleSampler sampler(ShuffleSpec(ShuffleKind::B_OST_biased, 1, Weight::power(0)));
        auto rng = make_rng(7);
        int flipped = 0;
        const int draws = 100000;
        for (int k = 0; k < draws; ++k) flipped += !sampler.sample_signed(rng).is_identity();
        CHECK(std::fabs(flipped - draws / 2.0) <= 4 * std::sqrt(draws / 4.0));
    }
    SUBCASE("every kind") {
        for (auto spec : {ShuffleSpec(ShuffleKind::RT, 3), ShuffleSpec(ShuffleKind::TTR, 3), ShuffleSpec(ShuffleKind::RTR, 3),
                          biased(3, 2)}) {
            const ShuffleSampler sampler(spec);
            auto rng = make_rng(11);
            const int draws = 200000;
            std::map<Permutation, int> counts;
            for (int k = 0; k < draws; ++k) ++counts[sampler.sample_symmetric(rng)];
            for (const auto& [g, p] : symmetric_support(spec)) {
                const double q = to_double(p);
                CHECK(std::fabs(counts[g] - draws * q) <= 4 * std::sqrt(draws * q * (1 - q)));
            }
            CHECK(counts.size() == symmetric_support(spec).size());
        }
        for (auto spec : {ShuffleSpec(ShuffleKind::B_RT, 2), ShuffleSpec(ShuffleKind::B_OST, 2)}) {
            const ShuffleSampler sampler(spec);
            auto rng = make_rng(5);
            const int draws = 200000;
            std::map<SignedPermutation, int> counts;
            for (int k = 0; k < draws; ++k) ++counts[sampler.sample_signed(rng)];
            for (const auto& [g, p] : signed_support(spec)) {
                const double q = to_double(p);
                CHECK(std::fabs(counts[g] - draws * q) <= 4 * std::sqrt(draws * q * (1 - q)));
            }
        }
    }
    SUBCASE("deterministic given the seed") {
        const ShuffleSampler sampler(ShuffleSpec(ShuffleKind::OST, 10));
        auto a = make_rng(3, 1), b = make_rng(3, 1), c = make_rng(3, 2);
        std::vector<Permutation> xa, xb, xc;
        for (int k = 0; k < 20; ++k) {
            xa.push_back(sampler.sample_symmetric(a));
            xb.push_back(sampler.sample_symmetric(b));
            xc.push_back(sampler.sample_symmetric(c));
        }
        CHECK(xa == xb);
        CHECK(xa != xc);
        CHECK(ShuffleSampler(ShuffleSpec(ShuffleKind::OST, 1)).sample_symmetric(a).is_identity());
    }
}
