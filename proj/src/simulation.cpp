#include "shuffle_lab/simulation.hpp"

#include "shuffle_lab/exact_engine.hpp"
#include "shuffle_lab/parallel.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

namespace shuffle_lab {

namespace {

// Splits replicas into contiguous chunks; body(first, last, chunk) runs per chunk.
void for_replica_chunks(std::int64_t replicas, int threads, const std::function<void(std::int64_t, std::int64_t, std::size_t)>& body) {
    if (replicas < 0) throw std::invalid_argument("replica count must be non-negative");
    const std::int64_t chunks = std::min<std::int64_t>(replicas, 256);
    parallel_for(static_cast<std::size_t>(chunks), threads, [&](std::size_t c) {
        const auto chunk = static_cast<std::int64_t>(c);
        body(replicas * chunk / chunks, replicas * (chunk + 1) / chunks, c);
    });
}

// Prefix sums over position weights with removal and weighted search.
class Fenwick {
public:
    explicit Fenwick(const std::vector<double>& weights) : tree_(weights.size() + 1, 0.0) {
        for (std::size_t i = 0; i < weights.size(); ++i) add(i, weights[i]);
    }

    void add(std::size_t index, double delta) {
        for (std::size_t i = index + 1; i < tree_.size(); i += i & (~i + 1)) tree_[i] += delta;
    }

    // Smallest index whose prefix sum exceeds target.
    std::size_t find(double target) const {
        std::size_t pos = 0;
        std::size_t step = 1;
        while (step * 2 < tree_.size()) step *= 2;
        for (; step > 0; step /= 2)
            if (pos + step < tree_.size() && tree_[pos + step] <= target) {
                pos += step;
                target -= tree_[pos];
            }
        return std::min(pos, tree_.size() - 2);
    }

private:
    std::vector<double> tree_;
};

std::int64_t geometric_wait(double p, Rng& rng) {
    if (p >= 1.0) return 1;
    return 1 + std::geometric_distribution<std::int64_t>(p)(rng);
}

bool one_sided(ShuffleKind kind) {
    return kind == ShuffleKind::OST || kind == ShuffleKind::OST_biased || kind == ShuffleKind::B_OST ||
           kind == ShuffleKind::B_OST_biased;
}

void require_sst_spec(const ShuffleSpec& spec) {
    if (spec.kind() == ShuffleKind::TTR) return;
    if (!one_sided(spec.kind())) throw std::invalid_argument("no strong stationary time for " + spec.to_string());
    if (!spec.weight()) return;
    const auto alpha = spec.weight()->exponent();
    if (!alpha || *alpha > 0) throw std::invalid_argument("strong stationary time needs a power weight with alpha <= 0");
}

std::vector<double> right_hand_weights(const ShuffleSpec& spec) {
    std::vector<double> w;
    for (int j = 1; j <= spec.n(); ++j) w.push_back(spec.weight_at(j));
    return w;
}

// Coupon collection on right-hand draws with geometric holding times.
std::int64_t one_sided_sst(const std::vector<double>& weights, double total, bool uniform, Rng& rng) {
    const auto n = static_cast<std::int64_t>(weights.size());
    std::int64_t t = 0;
    if (uniform) {
        for (std::int64_t k = 0; k < n; ++k) t += geometric_wait(static_cast<double>(n - k) / static_cast<double>(n), rng);
        return t;
    }
    Fenwick remaining(weights);
    std::vector<bool> taken(weights.size(), false);
    double left = total;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (std::int64_t k = 0; k < n; ++k) {
        t += geometric_wait(std::clamp(left / total, 0.0, 1.0), rng);
        std::size_t chosen = remaining.find(unit(rng) * left);
        // Rounding can land on a collected position; take the nearest uncollected one.
        while (taken[chosen]) chosen = (chosen + 1) % weights.size();
        taken[chosen] = true;
        remaining.add(chosen, -weights[chosen]);
        left = std::max(left - weights[chosen], 0.0);
    }
    return t;
}

// The bottom card climbs one place whenever the top card is inserted at or below it.
std::int64_t top_to_random_sst(int n, Rng& rng) {
    std::int64_t t = 1;
    for (int p = n; p >= 2; --p) t += geometric_wait(static_cast<double>(n - p + 1) / n, rng);
    return t;
}

TailEstimate tail(const std::vector<std::int64_t>& sample, double threshold, bool upper) {
    TailEstimate e;
    e.replicas = static_cast<std::int64_t>(sample.size());
    if (sample.empty()) return e;
    const auto hits = std::count_if(sample.begin(), sample.end(), [&](std::int64_t t) {
        return upper ? static_cast<double>(t) > threshold : static_cast<double>(t) <= threshold;
    });
    e.probability = static_cast<double>(hits) / static_cast<double>(sample.size());
    e.sigma = std::sqrt(e.probability * (1 - e.probability) / static_cast<double>(sample.size()));
    return e;
}

}  // namespace

std::vector<std::int64_t> simulate_sst(const ShuffleSpec& spec, const MonteCarloOptions& options) {
    require_sst_spec(spec);
    const auto weights = right_hand_weights(spec);
    const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    const bool uniform = std::all_of(weights.begin(), weights.end(), [&](double w) { return w == weights.front(); });
    std::vector<std::int64_t> sample(static_cast<std::size_t>(options.replicas));
    for_replica_chunks(options.replicas, options.threads, [&](std::int64_t first, std::int64_t last, std::size_t) {
        for (std::int64_t r = first; r < last; ++r) {
            Rng rng = make_rng(options.seed, static_cast<std::uint64_t>(r));
            sample[static_cast<std::size_t>(r)] =
                spec.kind() == ShuffleKind::TTR ? top_to_random_sst(spec.n(), rng) : one_sided_sst(weights, total, uniform, rng);
        }
    });
    return sample;
}

TailEstimate upper_tail(const std::vector<std::int64_t>& sample, double threshold) { return tail(sample, threshold, true); }
TailEstimate lower_tail(const std::vector<std::int64_t>& sample, double threshold) { return tail(sample, threshold, false); }

SampleSummary summarize(std::vector<std::int64_t> sample) {
    SampleSummary s;
    if (sample.empty()) return s;
    const double size = static_cast<double>(sample.size());
    double mean = 0.0;
    for (auto t : sample) mean += static_cast<double>(t);
    mean /= size;
    double ss = 0.0;
    for (auto t : sample) ss += (static_cast<double>(t) - mean) * (static_cast<double>(t) - mean);
    s.mean = mean;
    s.variance = sample.size() > 1 ? ss / (size - 1) : 0.0;
    std::sort(sample.begin(), sample.end());
    for (double level : {0.05, 0.25, 0.5, 0.75, 0.95}) {
        const auto index = static_cast<std::size_t>(std::ceil(level * size)) - 1;
        s.quantiles.emplace_back(level, static_cast<double>(sample[std::min(index, sample.size() - 1)]));
    }
    return s;
}

double coupon_rate(const CouponParams& params) {
    if (params.n < 1) throw std::invalid_argument("coupon process needs n >= 1");
    if (!(params.m > 1.0)) throw std::invalid_argument("coupon process needs m > 1");
    const double n = params.n, m = params.m;
    double r = 1.0 / n;
    if (params.alpha) {
        const double a = *params.alpha;
        auto total = [&](double e) {
            double s = 0.0;
            for (int j = 1; j <= params.n; ++j) s += std::pow(static_cast<double>(j), e);
            return s;
        };
        r = a <= 1.0 ? std::pow(m / (m - 1), 1 - a) * std::pow(n, a) / total(a) : total(a - 1) / total(a);
    }
    if (r * n / (m - 1) > 1.0 + 1e-12)
        throw std::invalid_argument("coupon move probability exceeds 1 for n = " + std::to_string(params.n) + ", m = " +
                                    std::to_string(params.m));
    return r;
}

int CouponTrajectory::level_at(std::int64_t t) const {
    int level = 0;
    for (const auto& [time, after] : jumps) {
        if (time > t) break;
        level = after;
    }
    return level;
}

CouponTrajectory coupon_process(const CouponParams& params, Rng& rng) {
    const double r = coupon_rate(params);
    const double m = params.m;
    CouponTrajectory path;
    path.target = static_cast<int>(std::ceil(params.n / m - 1e-12));
    std::bernoulli_distribution doubled(1.0 / m);
    std::int64_t t = 0;
    int level = 0;
    while (level < path.target) {
        const double p = std::min(1.0, m / (m - 1) * r * (params.n / m - level));
        t += geometric_wait(p, rng);
        level = std::min(path.target, level + (doubled(rng) ? 2 : 1));
        path.jumps.emplace_back(t, level);
    }
    path.hit_time = t;
    return path;
}

std::vector<std::int64_t> coupon_hitting_times(const CouponParams& params, const MonteCarloOptions& options) {
    coupon_rate(params);
    std::vector<std::int64_t> sample(static_cast<std::size_t>(options.replicas));
    for_replica_chunks(options.replicas, options.threads, [&](std::int64_t first, std::int64_t last, std::size_t) {
        for (std::int64_t r = first; r < last; ++r) {
            Rng rng = make_rng(options.seed, static_cast<std::uint64_t>(r));
            sample[static_cast<std::size_t>(r)] = coupon_process(params, rng).hit_time;
        }
    });
    return sample;
}

namespace {

// Deck as signed cards by position; one draw of the two-hand procedure at a time.
class Deck {
public:
    explicit Deck(const ShuffleSpec& spec) : sampler_(spec), cards_(static_cast<std::size_t>(spec.n())) {
        if (spec.group() == GroupKind::cyclic) throw std::invalid_argument("deck simulation needs a permutation group");
        std::iota(cards_.begin(), cards_.end(), 1);
    }

    HandDraw step(Rng& rng) {
        const HandDraw d = sampler_.draw(rng);
        apply(d);
        return d;
    }

    const std::vector<int>& cards() const { return cards_; }

    bool fixed_point_on_top(int window) const {
        const int n = static_cast<int>(cards_.size());
        for (int i = n - window + 1; i <= n; ++i)
            if (cards_[static_cast<std::size_t>(i - 1)] == i) return true;
        return false;
    }

private:
    void apply(const HandDraw& d) {
        auto at = [&](int position) { return cards_.begin() + (position - 1); };
        switch (sampler_.spec().kind()) {
            case ShuffleKind::TTR: std::rotate(at(1), at(2), at(d.right) + 1); break;
            case ShuffleKind::RTR:
                if (d.left < d.right) std::rotate(at(d.left), at(d.left) + 1, at(d.right) + 1);
                else if (d.left > d.right) std::rotate(at(d.right), at(d.left), at(d.left) + 1);
                break;
            default:
                std::iter_swap(at(d.left), at(d.right));
                if (d.flip) {
                    *at(d.left) = -*at(d.left);
                    if (d.right != d.left) *at(d.right) = -*at(d.right);
                }
                break;
        }
    }

    ShuffleSampler sampler_;
    std::vector<int> cards_;
};

int window_of(int n, int m) {
    if (m < 1) throw std::invalid_argument("top fraction m must be at least 1");
    return (n + m - 1) / m;
}

FeatureEstimate estimate_from_hits(std::int64_t hits, std::int64_t replicas) {
    FeatureEstimate e;
    e.replicas = replicas;
    if (replicas == 0) return e;
    e.estimate = static_cast<double>(hits) / static_cast<double>(replicas);
    e.sigma = std::sqrt(e.estimate * (1 - e.estimate) / static_cast<double>(replicas));
    e.lower = std::max(0.0, e.estimate - 3 * e.sigma);
    e.upper = std::min(1.0, e.estimate + 3 * e.sigma);
    return e;
}

std::int64_t sum_hits(const std::vector<std::int64_t>& per_chunk) {
    return std::accumulate(per_chunk.begin(), per_chunk.end(), std::int64_t{0});
}

}  // namespace

FeatureEstimate empirical_tv_feature(const ShuffleSpec& spec, std::int64_t t, int m, const MonteCarloOptions& options) {
    const int window = window_of(spec.n(), m);
    if (spec.group() == GroupKind::cyclic) throw std::invalid_argument("fixed-point sets need a permutation group");
    std::vector<std::int64_t> hits(256, 0);
    for_replica_chunks(options.replicas, options.threads, [&](std::int64_t first, std::int64_t last, std::size_t chunk) {
        for (std::int64_t r = first; r < last; ++r) {
            Rng rng = make_rng(options.seed, static_cast<std::uint64_t>(r));
            Deck deck(spec);
            for (std::int64_t s = 0; s < t; ++s) deck.step(rng);
            hits[chunk] += deck.fixed_point_on_top(window) ? 1 : 0;
        }
    });
    return estimate_from_hits(sum_hits(hits), options.replicas);
}

FeatureEstimate uniform_feature(const ShuffleSpec& spec, int m, const MonteCarloOptions& options) {
    const int n = spec.n();
    const int window = window_of(n, m);
    if (spec.group() == GroupKind::cyclic) throw std::invalid_argument("fixed-point sets need a permutation group");
    const bool signed_cards = spec.group() == GroupKind::hyperoctahedral;
    std::vector<std::int64_t> hits(256, 0);
    for_replica_chunks(options.replicas, options.threads, [&](std::int64_t first, std::int64_t last, std::size_t chunk) {
        std::vector<int> cards(static_cast<std::size_t>(n));
        std::bernoulli_distribution coin(0.5);
        for (std::int64_t r = first; r < last; ++r) {
            Rng rng = make_rng(options.seed, static_cast<std::uint64_t>(r));
            std::iota(cards.begin(), cards.end(), 1);
            std::shuffle(cards.begin(), cards.end(), rng);
            if (signed_cards)
                for (auto& c : cards)
                    if (coin(rng)) c = -c;
            bool hit = false;
            for (int i = n - window + 1; i <= n; ++i) hit = hit || cards[static_cast<std::size_t>(i - 1)] == i;
            hits[chunk] += hit ? 1 : 0;
        }
    });
    return estimate_from_hits(sum_hits(hits), options.replicas);
}

CheckReport sst_uniformity_check(const ShuffleSpec& spec, int t, const MonteCarloOptions& options, double significance) {
    require_sst_spec(spec);
    const auto order = group_of(spec).order();
    if (order > 5040) throw CapExceeded("uniformity check needs a group of at most 5040 elements");
    const int n = spec.n();
    std::vector<std::map<std::vector<int>, std::int64_t>> counts(256);
    for_replica_chunks(options.replicas, options.threads, [&](std::int64_t first, std::int64_t last, std::size_t chunk) {
        for (std::int64_t r = first; r < last; ++r) {
            Rng rng = make_rng(options.seed, static_cast<std::uint64_t>(r));
            Deck deck(spec);
            std::vector<bool> chosen(static_cast<std::size_t>(n), false);
            int covered = 0;
            int tracked = n;  // position of the card that started at the bottom
            bool stopped = false;
            for (int s = 0; s < t; ++s) {
                const HandDraw d = deck.step(rng);
                if (spec.kind() == ShuffleKind::TTR) {
                    if (tracked == 1) stopped = true;
                    else if (d.right >= tracked) --tracked;
                } else if (!chosen[static_cast<std::size_t>(d.right - 1)]) {
                    chosen[static_cast<std::size_t>(d.right - 1)] = true;
                    stopped = ++covered == n;
                }
            }
            if (stopped) ++counts[chunk][deck.cards()];
        }
    });
    std::map<std::vector<int>, std::int64_t> merged;
    for (const auto& c : counts)
        for (const auto& [state, k] : c) merged[state] += k;
    std::int64_t accepted = 0;
    for (const auto& [state, k] : merged) accepted += k;

    CheckReport report;
    report.name = "state uniform given T <= " + std::to_string(t) + " for " + spec.to_string();
    report.cases = accepted;
    const double cells = static_cast<double>(order);
    if (static_cast<double>(accepted) < 5.0 * cells) {
        report.passed = false;
        report.witness = "only " + std::to_string(accepted) + " replicas stopped by time " + std::to_string(t);
        return report;
    }
    const double expected = static_cast<double>(accepted) / cells;
    double statistic = (cells - static_cast<double>(merged.size())) * expected;
    for (const auto& [state, k] : merged) statistic += (static_cast<double>(k) - expected) * (static_cast<double>(k) - expected) / expected;
    const boost::math::chi_squared_distribution<double> dist(cells - 1);
    const double critical = boost::math::quantile(boost::math::complement(dist, significance));
    report.passed = statistic <= critical;
    report.witness = "chi-square " + to_decimal_string(statistic, 3) + " vs critical " + to_decimal_string(critical, 3) + " on " +
                     std::to_string(accepted) + " stopped replicas";
    return report;
}

CheckReport coupon_dominance_check(int n, int m, const std::vector<int>& t_grid, const MonteCarloOptions& options) {
    const int window = window_of(n, m);
    const CouponParams params{n, static_cast<double>(m), std::nullopt};
    const double r = coupon_rate(params);
    const int t_max = t_grid.empty() ? 0 : *std::max_element(t_grid.begin(), t_grid.end());
    const ShuffleSpec spec(ShuffleKind::OST, n);
    const auto grid_size = t_grid.size();
    // at_least[chunk][g][k]: replicas with level >= k at grid time g, for M and C.
    using Table = std::vector<std::vector<std::int64_t>>;
    std::vector<Table> coupon(256, Table(grid_size, std::vector<std::int64_t>(static_cast<std::size_t>(window) + 1, 0)));
    std::vector<Table> collected = coupon;
    for_replica_chunks(options.replicas, options.threads, [&](std::int64_t first, std::int64_t last, std::size_t chunk) {
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (std::int64_t rep = first; rep < last; ++rep) {
            Rng rng = make_rng(options.seed, static_cast<std::uint64_t>(rep));
            Deck deck(spec);
            std::vector<bool> touched(static_cast<std::size_t>(n) + 1, false);
            int c_level = 0, m_level = 0;
            std::vector<int> c_at(static_cast<std::size_t>(t_max) + 1, 0), m_at(static_cast<std::size_t>(t_max) + 1, 0);
            for (int s = 1; s <= t_max; ++s) {
                const HandDraw d = deck.step(rng);
                for (int pos : {d.left, d.right})
                    if (pos > n - window && !touched[static_cast<std::size_t>(pos)]) {
                        touched[static_cast<std::size_t>(pos)] = true;
                        ++c_level;
                    }
                if (m_level < window) {
                    const double p = std::min(1.0, m / (m - 1.0) * r * (static_cast<double>(n) / m - m_level));
                    if (unit(rng) < p) m_level = std::min(window, m_level + (unit(rng) < 1.0 / m ? 2 : 1));
                }
                c_at[static_cast<std::size_t>(s)] = c_level;
                m_at[static_cast<std::size_t>(s)] = m_level;
            }
            for (std::size_t g = 0; g < grid_size; ++g) {
                const auto t = static_cast<std::size_t>(t_grid[g]);
                for (int k = 1; k <= window; ++k) {
                    coupon[chunk][g][static_cast<std::size_t>(k)] += m_at[t] >= k ? 1 : 0;
                    collected[chunk][g][static_cast<std::size_t>(k)] += c_at[t] >= k ? 1 : 0;
                }
            }
        }
    });
    CheckReport report;
    report.name = "counting process dominates collected top cards, n=" + std::to_string(n) + ", m=" + std::to_string(m);
    const double size = static_cast<double>(options.replicas);
    for (std::size_t g = 0; g < grid_size; ++g)
        for (int k = 1; k <= window; ++k) {
            std::int64_t mk = 0, ck = 0;
            for (std::size_t c = 0; c < coupon.size(); ++c) {
                mk += coupon[c][g][static_cast<std::size_t>(k)];
                ck += collected[c][g][static_cast<std::size_t>(k)];
            }
            const double pm = mk / size, pc = ck / size;
            const double sigma = std::sqrt((pm * (1 - pm) + pc * (1 - pc)) / size);
            ++report.cases;
            if (pm + 3 * sigma + 1e-12 < pc && report.passed) {
                report.passed = false;
                report.witness = "t=" + std::to_string(t_grid[g]) + ", k=" + std::to_string(k) + ": P(M>=k)=" +
                                 to_decimal_string(pm, 4) + " < P(C>=k)=" + to_decimal_string(pc, 4);
            }
        }
    return report;
}

}  // namespace shuffle_lab
