#include "shuffle_lab/exact_engine.hpp"

#include <doctest.h>

#include <cmath>

using namespace shuffle_lab;

namespace {

std::vector<ShuffleSpec> reversible_specs(int n) {
    return {ShuffleSpec(ShuffleKind::RT, n), ShuffleSpec(ShuffleKind::RTR, n), ShuffleSpec(ShuffleKind::OST, n),
            ShuffleSpec(ShuffleKind::OST_biased, n, Weight::power(-1))};
}

}  // namespace

TEST_CASE("delta and uniform") {
    for (const GroupDescriptor g : {GroupDescriptor{GroupKind::symmetric, 3}, GroupDescriptor{GroupKind::hyperoctahedral, 2},
                                    GroupDescriptor{GroupKind::cyclic, 5}}) {
        const auto d = DenseDistribution::delta_identity(g);
        CHECK(d.exact_at(0) == 1);
        CHECK(d.exact_total() == 1);
        CHECK(DenseDistribution::uniform(g).exact_total() == 1);
    }
    CHECK(GroupDescriptor{GroupKind::hyperoctahedral, 3}.order() == 48);
}

TEST_CASE("one step from the identity gives the pmf") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& spec : reversible_specs(n)) {
            const auto d = step(DenseDistribution::delta_identity(group_of(spec)), spec);
            const auto g = enumerate_symmetric(n);
            for (std::size_t i = 0; i < g.size(); ++i) REQUIRE(d.exact_at(i) == pmf(spec, g[i]));
        }
    const ShuffleSpec b(ShuffleKind::B_OST, 2);
    const auto d = step(DenseDistribution::delta_identity(group_of(b)), b);
    const auto g = enumerate_hyperoctahedral(2);
    for (std::size_t i = 0; i < g.size(); ++i) CHECK(d.exact_at(i) == pmf(b, g[i]));
}

TEST_CASE("uniform is stationary") {
    for (const auto& spec : {ShuffleSpec(ShuffleKind::OST, 4), ShuffleSpec(ShuffleKind::TTR, 4), ShuffleSpec(ShuffleKind::B_RT, 3),
                             ShuffleSpec(ShuffleKind::cyclic_simple, 6)}) {
        const auto u = DenseDistribution::uniform(group_of(spec));
        CHECK(exact_tv_distance(step(u, spec), u) == 0);
    }
}

TEST_CASE("two steps agree with the squared matrix") {
    const ShuffleSpec spec(ShuffleKind::OST, 3);
    const auto m = exact_transition_matrix(spec);
    const auto d2 = evolve(TransitionModel::build(spec), 2);
    for (std::size_t h = 0; h < m.size(); ++h) {
        Rational s = 0;
        for (std::size_t k = 0; k < m.size(); ++k) s += m[0][k] * m[k][h];
        CHECK(d2.exact_at(h) == s);
    }
}

TEST_CASE("distances") {
    const GroupDescriptor s3{GroupKind::symmetric, 3};
    const auto delta = DenseDistribution::delta_identity(s3);
    const auto u = DenseDistribution::uniform(s3);
    CHECK(exact_tv_distance(delta, delta) == 0);
    CHECK(exact_tv_distance(delta, u) == Rational(5, 6));
    CHECK(exact_sep_distance(u) == 0);
    CHECK(exact_sep_distance(delta) == 1);
    CHECK(tv_distance(delta, u) == doctest::Approx(5.0 / 6.0));
    CHECK_THROWS_AS(exact_tv_distance(delta, DenseDistribution::uniform({GroupKind::symmetric, 4})), std::invalid_argument);
}

TEST_CASE("simple walk on Z_5 table") {
    const auto curve = distance_curve(ShuffleSpec(ShuffleKind::cyclic_simple, 5), 6);
    const std::vector<Rational> sep = {1, 1, 1, 1, Rational(11, 16), Rational(11, 16), Rational(29, 64)};
    const std::vector<Rational> tv = {Rational(4, 5), Rational(3, 5), Rational(2, 5), Rational(7, 20),
                                      Rational(11, 40), Rational(9, 40), Rational(29, 160)};
    for (int t = 0; t <= 6; ++t) {
        CHECK(*curve[static_cast<std::size_t>(t)].exact_sep == sep[static_cast<std::size_t>(t)]);
        CHECK(*curve[static_cast<std::size_t>(t)].exact_tv == tv[static_cast<std::size_t>(t)]);
    }
    CHECK(curve[3].tv == doctest::Approx(0.35));
    CHECK(curve[4].sep == doctest::Approx(0.6875));

    const auto six = distance_curve(ShuffleSpec(ShuffleKind::cyclic_simple, 6), 3);
    const auto model = TransitionModel::build(ShuffleSpec(ShuffleKind::cyclic_simple, 6));
    CHECK(evolve(model, 3).exact_at(0) == 0);
}

TEST_CASE("distance curves are monotone and tv is below sep") {
    for (int n = 2; n <= 4; ++n) {
        auto specs = reversible_specs(n);
        specs.emplace_back(ShuffleKind::TTR, n);
        specs.emplace_back(ShuffleKind::B_RT, std::min(n, 3));
        specs.emplace_back(ShuffleKind::B_OST, std::min(n, 3));
        for (const auto& spec : specs) {
            const auto curve = distance_curve(spec, 25);
            for (std::size_t t = 0; t < curve.size(); ++t) {
                REQUIRE(*curve[t].exact_tv <= *curve[t].exact_sep);
                if (t > 0) {
                    REQUIRE(*curve[t].exact_tv <= *curve[t - 1].exact_tv);
                    REQUIRE(*curve[t].exact_sep <= *curve[t - 1].exact_sep);
                }
            }
        }
    }
}

TEST_CASE("exact mass is preserved over many steps") {
    const auto model = TransitionModel::build(ShuffleSpec(ShuffleKind::OST, 4));
    CHECK(evolve(model, 200).exact_total() == 1);
}

TEST_CASE("mixing times") {
    CHECK(mixing_time(ShuffleSpec(ShuffleKind::OST, 3), 1.0, Distance::tv, 10) == 0);
    // OST on S_2: d_TV(t) = 1/2^(t+1).
    CHECK(mixing_time(ShuffleSpec(ShuffleKind::OST, 2), 0.25, Distance::tv, 10) == 1);
    const auto curve = distance_curve(ShuffleSpec(ShuffleKind::OST, 2), 4);
    for (const auto& p : curve) CHECK(*p.exact_tv == rational_pow(Rational(1, 2), p.t + 1));
    CHECK(mixing_time(ShuffleSpec(ShuffleKind::cyclic_lazy, 2), 0.0, Distance::tv, 10) == 1);
    CHECK_FALSE(mixing_time(ShuffleSpec(ShuffleKind::cyclic_simple, 4), 0.1, Distance::tv, 50).has_value());
    CHECK(mixing_time(ShuffleSpec(ShuffleKind::OST_biased, 3, Weight::power(0.5)), 0.25, Distance::sep, 50).has_value());
}

TEST_CASE("transition matrices") {
    CHECK(exact_transition_matrix(ShuffleSpec(ShuffleKind::OST, 1)) == std::vector<std::vector<Rational>>{{1}});
    CHECK(exact_transition_matrix(ShuffleSpec(ShuffleKind::OST, 2)) ==
          std::vector<std::vector<Rational>>{{Rational(3, 4), Rational(1, 4)}, {Rational(1, 4), Rational(3, 4)}});
    for (const auto& spec : {ShuffleSpec(ShuffleKind::TTR, 3), ShuffleSpec(ShuffleKind::B_OST, 2)}) {
        const auto m = exact_transition_matrix(spec);
        for (std::size_t j = 0; j < m.size(); ++j) {
            Rational row = 0, col = 0;
            for (std::size_t i = 0; i < m.size(); ++i) {
                row += m[j][i];
                col += m[i][j];
            }
            CHECK(row == 1);
            CHECK(col == 1);
        }
    }
    for (const auto& spec : reversible_specs(4)) {
        const auto m = transition_matrix(spec);
        CHECK((m - m.transpose()).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("brute-force spectra") {
    auto ost2 = brute_force_spectrum(ShuffleSpec(ShuffleKind::OST, 2));
    REQUIRE(ost2.size() == 2);
    CHECK(ost2[0] == doctest::Approx(1.0));
    CHECK(ost2[1] == doctest::Approx(0.5));
    for (const auto& spec : reversible_specs(4)) {
        const auto s = brute_force_spectrum(spec);
        CHECK(s.size() == 24);
        CHECK(s.front() == doctest::Approx(1.0));
        const auto m = transition_matrix(spec);
        CHECK((m * Eigen::VectorXd::Ones(24) - Eigen::VectorXd::Ones(24)).norm() < 1e-12);
    }
    const auto grouped = group_eigenvalues(brute_force_spectrum(ShuffleSpec(ShuffleKind::RT, 3)));
    // RT on S_3: 1 (x1), 1/3 (x4), -1/3 (x1).
    REQUIRE(grouped.size() == 3);
    CHECK(grouped[1].first == doctest::Approx(1.0 / 3.0));
    CHECK(grouped[1].second == 4);
    CHECK(grouped[2].first == doctest::Approx(-1.0 / 3.0));
    CHECK_THROWS_AS(brute_force_spectrum(ShuffleSpec(ShuffleKind::TTR, 3)), NotReversible);
    CHECK_THROWS_AS(brute_force_spectrum(ShuffleSpec(ShuffleKind::OST, 5), {{7, 5}, 100}), CapExceeded);
}
