#pragma once

#include "shuffle_lab/shuffles.hpp"
#include "shuffle_lab/spectra.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace shuffle_lab {

// Replica r draws from make_rng(seed, r), so results do not depend on threads.
struct MonteCarloOptions {
    std::uint64_t seed = 1;
    std::int64_t replicas = 1000;
    int threads = 0;  // 0 = default_threads()
};

// Samples of the strong stationary time. One-sided kinds (OST, OST_biased with
// alpha <= 0, B_OST, B_OST_biased with alpha <= 0): first time the right hand
// has chosen every position. TTR: the step at which the card starting at the
// bottom is moved off the top. Errors: any other kind, alpha > 0.
std::vector<std::int64_t> simulate_sst(const ShuffleSpec& spec, const MonteCarloOptions& options);

struct TailEstimate {
    double probability = 0.0;
    double sigma = 0.0;  // binomial standard error
    std::int64_t replicas = 0;
};

// Empirical P(T > threshold).
TailEstimate upper_tail(const std::vector<std::int64_t>& sample, double threshold);
// Empirical P(T <= threshold).
TailEstimate lower_tail(const std::vector<std::int64_t>& sample, double threshold);

struct SampleSummary {
    double mean = 0.0;
    double variance = 0.0;
    std::vector<std::pair<double, double>> quantiles;  // (level, value)
};
SampleSummary summarize(std::vector<std::int64_t> sample);

// Counting process dominating the collected top cards: from level M it moves
// with probability (m/(m-1)) r (n/m - M), jumping by 2 with probability 1/m
// given a move, and stops at ceil(n/m).
struct CouponParams {
    int n = 2;
    double m = 2.0;
    std::optional<double> alpha;  // biased one-sided rate when set
};

// r = 1/n unbiased; (m/(m-1))^{1-alpha} n^alpha / N_alpha for alpha <= 1;
// N_{alpha-1}/N_alpha for alpha > 1. Errors: m <= 1 or n < 1, or a move
// probability above 1.
double coupon_rate(const CouponParams& params);

struct CouponTrajectory {
    int target = 0;
    std::vector<std::pair<std::int64_t, int>> jumps;  // (time, level after the jump)
    std::int64_t hit_time = 0;

    int level_at(std::int64_t t) const;
};

CouponTrajectory coupon_process(const CouponParams& params, Rng& rng);
std::vector<std::int64_t> coupon_hitting_times(const CouponParams& params, const MonteCarloOptions& options);

struct FeatureEstimate {
    double estimate = 0.0;
    double sigma = 0.0;
    double lower = 0.0;  // estimate -/+ 3 sigma, clipped to [0, 1]
    double upper = 0.0;
    std::int64_t replicas = 0;
};

// Fraction of replicas whose state after t steps has a fixed point among the
// top ceil(n/m) positions. Errors: cyclic kinds, m < 1.
FeatureEstimate empirical_tv_feature(const ShuffleSpec& spec, std::int64_t t, int m, const MonteCarloOptions& options);
// The same feature under uniform sampling of the group of spec.
FeatureEstimate uniform_feature(const ShuffleSpec& spec, int m, const MonteCarloOptions& options);

// Chi-square test that the chain state at time t is uniform given T <= t.
// Needs a group of at most 5040 elements.
CheckReport sst_uniformity_check(const ShuffleSpec& spec, int t, const MonteCarloOptions& options,
                                 double significance = 0.001);

// Runs the unbiased one-sided chain and the counting process on common random
// streams and checks P(M_t >= k) + 3 sigma >= P(C_t >= k) for every k and
// every t in the grid, where C_t counts the top cards touched by either hand.
CheckReport coupon_dominance_check(int n, int m, const std::vector<int>& t_grid, const MonteCarloOptions& options);

}  // namespace shuffle_lab
