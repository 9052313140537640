#include "shuffle_lab/exact_engine.hpp"
#include "shuffle_lab/spectra.hpp"

#include <doctest.h>

using namespace shuffle_lab;

namespace {

Rational eig_of(const std::vector<std::vector<int>>& rows) { return ost_eig(StandardTableau(rows)); }

void check_against_oracle(const ShuffleSpec& spec) {
    INFO(spec.to_string());
    const auto catalog = build_catalog(spec);
    const auto cmp = compare_spectra(catalog, brute_force_spectrum(spec));
    INFO(cmp.witness);
    CHECK(cmp.matches);
    const auto ids = check_identities(catalog);
    INFO(ids.detail);
    CHECK(ids.count_ok);
    CHECK(ids.trace_ok);
}

}  // namespace

TEST_CASE("one-sided eigenvalues") {
    CHECK(eig_of({{1, 2, 3}, {4, 5}}) == Rational(16, 25));
    CHECK(eig_of({{1, 3, 6, 7}, {2, 4}, {5}}) == Rational(1171, 2940));
    CHECK(eig_of({{1}}) == 1);
    std::vector<Rational> values;
    for (const auto& t : enumerate_syt(Partition{3, 2})) values.push_back(ost_eig(t));
    std::sort(values.begin(), values.end(), std::greater<>());
    CHECK(values == std::vector<Rational>{Rational(64, 100), Rational(59, 100), Rational(57, 100), Rational(157, 300),
                                          Rational(151, 300)});
}

TEST_CASE("biased one-sided eigenvalues") {
    for (const auto& t : enumerate_syt(Partition{3, 1, 1})) CHECK(biased_ost_eig(t, Weight::power(0)) == ost_eig(t));
    for (int n = 1; n <= 6; ++n) CHECK(biased_ost_eig(special_tableau(Partition{n}, Filling::row_wise), Weight::power(1)) == 1);
    // With w(j) = j every box contributes its index j-i+1, so (1,1,1) sums to 1 + 0 - 1.
    CHECK(biased_ost_eig(special_tableau(Partition{1, 1, 1}, Filling::column_wise), Weight::power(1)) == 0);
    const auto spectrum = brute_force_spectrum(ShuffleSpec(ShuffleKind::OST_biased, 3, Weight::power(1)));
    CHECK(spectrum.back() == doctest::Approx(0.0).epsilon(1e-12));
    const auto t = special_tableau(Partition{2, 1}, Filling::row_wise);
    CHECK(biased_ost_eig_real(t, Weight::power(2)) == doctest::Approx(to_double(biased_ost_eig(t, Weight::power(2)))));
}

TEST_CASE("random transposition eigenvalues") {
    for (int n = 1; n <= 8; ++n) {
        CHECK(rt_eig(Partition{n}) == 1);
        CHECK(rt_eig(Partition(std::vector<int>(static_cast<std::size_t>(n), 1))) == Rational(-1) + Rational(2, n));
    }
    CHECK(rt_eig(Partition{2, 1}) == Rational(1, 3));
}

TEST_CASE("random-to-random eigenvalues") {
    for (int n = 1; n <= 6; ++n) CHECK(rtr_eig(Partition{n}, Partition{}) == 1);
    CHECK(rtr_eig(Partition{1, 1}, Partition{1, 1}) == 0);
    CHECK(rtr_eig(Partition{2}, Partition{2}) == 0);
    CHECK_THROWS_AS(rtr_eig(Partition{1, 1}, Partition{}), std::invalid_argument);
    const auto c2 = build_catalog(ShuffleSpec(ShuffleKind::RTR, 2));
    CHECK(c2.total_multiplicity() == 2);
    CHECK(c2.expanded() == std::vector<double>{1.0, 0.0});
}

TEST_CASE("hyperoctahedral eigenvalues") {
    for (int n = 1; n <= 6; ++n) {
        CHECK(brt_eig({Partition{n}, Partition{}}) == 1);
        CHECK(brt_eig({Partition{}, Partition{n}}) == 1 - Rational(1, n));
    }
    CHECK(brt_eig({Partition{1}, Partition{1}}) == Rational(1, 4));
    CHECK(bost_eig(BiTableau({{1, 2, 3}}, {})) == 1);
    CHECK(bost_eig(BiTableau({}, {{1}})) == 0);
    for (const auto& t : enumerate_syt(Partition{2, 1}))
        CHECK(bost_eig(BiTableau(t.rows(), {}), Weight::power(2)) == biased_ost_eig(t, Weight::power(2)));
}

TEST_CASE("catalogs match the brute-force oracle at small n") {
    for (int n = 1; n <= 5; ++n) {
        check_against_oracle(ShuffleSpec(ShuffleKind::OST, n));
        check_against_oracle(ShuffleSpec(ShuffleKind::RT, n));
        check_against_oracle(ShuffleSpec(ShuffleKind::RTR, n));
        for (int a : {-1, 1, 2}) check_against_oracle(ShuffleSpec(ShuffleKind::OST_biased, n, Weight::power(a)));
    }
    for (int n = 1; n <= 3; ++n) {
        check_against_oracle(ShuffleSpec(ShuffleKind::B_RT, n));
        check_against_oracle(ShuffleSpec(ShuffleKind::B_OST, n));
        check_against_oracle(ShuffleSpec(ShuffleKind::B_OST_biased, n, Weight::power(1)));
    }
    check_against_oracle(ShuffleSpec(ShuffleKind::OST_biased, 4, Weight::power(0.5)));
    check_against_oracle(ShuffleSpec(ShuffleKind::OST_biased, 4, Weight::table({3, Rational(1, 2), 7, 1})));
}

TEST_CASE("catalog identities") {
    const auto ost3 = build_catalog(ShuffleSpec(ShuffleKind::OST, 3));
    CHECK(ost3.total_multiplicity() == 6);
    CHECK(ost3.exact_trace() == Rational(11, 3));
    CHECK(build_catalog(ShuffleSpec(ShuffleKind::RT, 4)).total_multiplicity() == 24);
    CHECK(build_catalog(ShuffleSpec(ShuffleKind::B_OST_biased, 2, Weight::power(0))).total_multiplicity() == 8);
    CHECK_THROWS_AS(build_catalog(ShuffleSpec(ShuffleKind::TTR, 3)), std::invalid_argument);
    CHECK_THROWS_AS(build_catalog(ShuffleSpec(ShuffleKind::OST, 15)), CapExceeded);
    for (int n = 1; n <= 7; ++n) {
        const auto c = build_catalog(ShuffleSpec(ShuffleKind::RTR, n));
        CHECK(c.total_multiplicity() == static_cast<std::int64_t>(factorial(n)));
        CHECK(check_identities(c).trace_ok);
    }
}

TEST_CASE("row-wise and column-wise tables at n = 4") {
    std::vector<Rational> rows, cols;
    for (const auto& lambda : partitions_of(4)) {
        rows.push_back(24 * ost_eig(special_tableau(lambda, Filling::row_wise)));
        cols.push_back(24 * ost_eig(special_tableau(lambda, Filling::column_wise)));
    }
    CHECK(rows == std::vector<Rational>{24, 18, Rational(27, 2), Rational(21, 2), 1});
    CHECK(cols == std::vector<Rational>{24, Rational(29, 2), Rational(23, 2), 7, 1});
}

TEST_CASE("ordering checks") {
    for (int n = 1; n <= 7; ++n) {
        for (const auto& r : eig_order_checks(n)) {
            INFO(r.name << " " << r.witness);
            CHECK(r.passed);
            CHECK(r.cases > 0);
        }
        for (int a : {-1, 1, 2}) {
            const auto reports = eig_order_checks(n, Weight::power(a));
            for (const auto& r : reports) {
                INFO("alpha=" << a << " " << r.name << " " << r.witness);
                CHECK(r.passed);
            }
        }
    }
    for (int n = 3; n <= 30; ++n) CHECK(boxindex_check(n).passed);
    for (const auto& t : enumerate_syt(Partition{3, 2})) {
        CHECK(ost_eig(t) >= Rational(151, 300));
        CHECK(ost_eig(t) <= Rational(16, 25));
    }
}
