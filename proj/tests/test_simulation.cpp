#include "shuffle_lab/simulation.hpp"

#include "shuffle_lab/bounds.hpp"

#include <doctest.h>

#include <cmath>

using namespace shuffle_lab;

TEST_CASE("strong stationary time samples") {
    const MonteCarloOptions small{3, 200, 0};
    for (auto t : simulate_sst(ShuffleSpec(ShuffleKind::OST, 1), small)) CHECK(t == 1);
    for (auto t : simulate_sst(ShuffleSpec(ShuffleKind::TTR, 1), small)) CHECK(t == 1);
    const auto a = simulate_sst(ShuffleSpec(ShuffleKind::OST, 20), {5, 500, 1});
    const auto b = simulate_sst(ShuffleSpec(ShuffleKind::OST, 20), {5, 500, 3});
    CHECK(a == b);
    const double harmonic = to_double(shuffle_lab::harmonic(20));
    CHECK(summarize(a).mean == doctest::Approx(20 * harmonic).epsilon(0.08));
    CHECK_THROWS_AS(simulate_sst(ShuffleSpec(ShuffleKind::RT, 5), small), std::invalid_argument);
    CHECK_THROWS_AS(simulate_sst(ShuffleSpec(ShuffleKind::OST_biased, 5, Weight::power(1)), small), std::invalid_argument);
}

TEST_CASE("one-sided tail bound at moderate n") {
    const int n = 50;
    const auto sample = simulate_sst(ShuffleSpec(ShuffleKind::OST, n), {11, 20000, 0});
    for (double c : {0.5, 1.0, 2.0}) {
        const auto tail = upper_tail(sample, n * std::log(static_cast<double>(n)) + c * n);
        CHECK(tail.probability <= std::exp(-c) + 3 * tail.sigma);
    }
    const auto biased = simulate_sst(ShuffleSpec(ShuffleKind::OST_biased, n, Weight::power(-1)), {12, 20000, 0});
    const double scale = biased_time_scale(n, -1);
    for (double c : {1.0, 2.0}) {
        const auto tail = upper_tail(biased, scale * (std::log(static_cast<double>(n)) + c));
        CHECK(tail.probability <= std::exp(-c) + 3 * tail.sigma);
    }
    const auto ttr = simulate_sst(ShuffleSpec(ShuffleKind::TTR, n), {13, 5000, 0});
    CHECK(summarize(ttr).mean == doctest::Approx(n * to_double(harmonic(n))).epsilon(0.05));
}

TEST_CASE("summaries and tails") {
    const std::vector<std::int64_t> sample{1, 2, 3, 4};
    const auto s = summarize(sample);
    CHECK(s.mean == doctest::Approx(2.5));
    CHECK(s.variance == doctest::Approx(5.0 / 3));
    CHECK(s.quantiles[2].second == 2);
    CHECK(upper_tail(sample, 2).probability == doctest::Approx(0.5));
    CHECK(lower_tail(sample, 3).probability == doctest::Approx(0.75));
}

TEST_CASE("coupon process") {
    Rng rng = make_rng(1);
    const CouponParams params{100, 4.0, std::nullopt};
    const auto path = coupon_process(params, rng);
    CHECK(path.target == 25);
    CHECK(path.level_at(0) == 0);
    int previous = 0;
    std::int64_t last_time = 0;
    for (const auto& [time, level] : path.jumps) {
        CHECK(time > last_time);
        CHECK(level - previous >= 1);
        CHECK(level - previous <= 2);
        previous = level;
        last_time = time;
    }
    CHECK(previous == 25);
    CHECK(path.level_at(path.hit_time) == 25);
    CHECK(coupon_rate({10, 4.0, std::nullopt}) == doctest::Approx(0.1));
    CHECK(coupon_rate({10, 4.0, 0.0}) == doctest::Approx(4.0 / 30));
    CHECK(coupon_rate({10, 4.0, 1.0}) == doctest::Approx(2.0 / 11));
    CHECK(coupon_rate({10, 4.0, 2.0}) == doctest::Approx(55.0 / 385));
    CHECK_THROWS_AS(coupon_rate({10, 2.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(coupon_rate({10, 1.0, std::nullopt}), std::invalid_argument);
    CHECK_THROWS_AS(coupon_rate({4, 1.5, 0.0}), std::invalid_argument);

    const int n = 10000;
    const double m = std::log(static_cast<double>(n));
    const auto times = coupon_hitting_times({n, m, std::nullopt}, {17, 2000, 0});
    const double c = 4;
    const double threshold = n * std::log(static_cast<double>(n)) - n * std::log(std::log(static_cast<double>(n))) - c * n;
    const auto tail = lower_tail(times, threshold);
    CHECK(tail.probability <= M_PI * M_PI / (6 * (c - 2) * (c - 2)) + 3 * tail.sigma);
}

TEST_CASE("fixed-point feature estimates") {
    const ShuffleSpec ost(ShuffleKind::OST, 10);
    CHECK(empirical_tv_feature(ost, 0, 2, {1, 100, 0}).estimate == 1.0);
    const auto uniform = uniform_feature(ost, 2, {2, 20000, 0});
    CHECK(uniform.estimate <= 0.5 + 3 * uniform.sigma);
    const ShuffleSpec small(ShuffleKind::OST, 5);
    const double exact = to_double(fixed_point_stationary_mass(small, 2));
    const auto u5 = uniform_feature(small, 2, {3, 20000, 0});
    CHECK(std::abs(u5.estimate - exact) <= 4 * u5.sigma);
    const auto curve = fixed_point_lower_curve(small, 8, 2);
    const auto e8 = empirical_tv_feature(small, 8, 2, {4, 20000, 0});
    CHECK(std::abs(e8.estimate - exact - curve[8]) <= 4 * e8.sigma + 1e-9);
    CHECK(empirical_tv_feature(ShuffleSpec(ShuffleKind::B_OST, 4), 0, 2, {1, 10, 0}).estimate == 1.0);
    CHECK(empirical_tv_feature(ShuffleSpec(ShuffleKind::TTR, 6), 3, 2, {1, 10, 0}).replicas == 10);
    CHECK_THROWS_AS(empirical_tv_feature(ShuffleSpec(ShuffleKind::cyclic_simple, 5), 1, 2, {}), std::invalid_argument);
}

TEST_CASE("uniformity given the stopping time") {
    for (const auto& spec : {ShuffleSpec(ShuffleKind::OST, 4), ShuffleSpec(ShuffleKind::TTR, 4),
                             ShuffleSpec(ShuffleKind::OST_biased, 4, Weight::power(-1)), ShuffleSpec(ShuffleKind::B_OST, 3)}) {
        const auto report = sst_uniformity_check(spec, 12, {21, 100000, 0});
        INFO(report.name << ": " << report.witness);
        CHECK(report.passed);
    }
}

TEST_CASE("counting process dominance") {
    for (auto [n, m] : {std::pair{8, 2}, std::pair{6, 3}, std::pair{8, 4}, std::pair{4, 2}}) {
        const auto report = coupon_dominance_check(n, m, {1, 2, 4, 8, 16, 32}, {9, 20000, 0});
        INFO(report.witness);
        CHECK(report.passed);
    }
}
