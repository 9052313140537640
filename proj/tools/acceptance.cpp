#include "shuffle_lab/bounds.hpp"
#include "shuffle_lab/exact_engine.hpp"
#include "shuffle_lab/simulation.hpp"
#include "shuffle_lab/spectra.hpp"
#include "shuffle_lab/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>

using namespace shuffle_lab;

namespace {

struct Outcome {
    bool passed = true;
    std::int64_t checks = 0;
    std::vector<std::string> failures;

    void add(const CheckReport& r) {
        ++checks;
        if (!r.passed) {
            passed = false;
            failures.push_back(r.name + ": " + r.witness);
        }
    }
    void add_all(const std::vector<CheckReport>& reports) {
        for (const auto& r : reports) add(r);
    }
    void expect(bool ok, const std::string& what) { add(CheckReport{what, ok, 1, ok ? "" : "mismatch"}); }
};

bool contains(const std::string& s, const char* part) { return s.find(part) != std::string::npos; }

std::string join(const std::vector<Rational>& xs) {
    std::string s;
    for (const auto& x : xs) s += (s.empty() ? "" : " ") + to_fraction_string(x);
    return s;
}

Outcome reference_values() {
    Outcome out;
    std::vector<Rational> syt;
    for (const auto& t : enumerate_syt(Partition{3, 2})) syt.push_back(ost_eig(t));
    std::sort(syt.begin(), syt.end(), std::greater<>());
    const std::vector<Rational> syt_expected{Rational(16, 25), Rational(59, 100), Rational(57, 100), Rational(157, 300),
                                             Rational(151, 300)};
    out.expect(syt == syt_expected, "(3,2) one-sided eigenvalues " + join(syt));

    const auto worked = ost_eig(StandardTableau({{1, 3, 6, 7}, {2, 4}, {5}}));
    out.expect(worked == Rational(1171, 2940), "(4,2,1) tableau eigenvalue " + to_fraction_string(worked));

    std::vector<Rational> rows, cols;
    for (const auto& lambda : partitions_of(4)) {
        rows.push_back(24 * ost_eig(special_tableau(lambda, Filling::row_wise)));
        cols.push_back(24 * ost_eig(special_tableau(lambda, Filling::column_wise)));
    }
    out.expect(rows == std::vector<Rational>{24, 18, Rational(27, 2), Rational(21, 2), 1}, "n=4 row-wise table " + join(rows));
    out.expect(cols == std::vector<Rational>{24, Rational(29, 2), Rational(23, 2), 7, 1}, "n=4 column-wise table " + join(cols));

    const auto curve = distance_curve(ShuffleSpec(ShuffleKind::cyclic_simple, 5), 6);
    const std::vector<Rational> sep{1, 1, 1, 1, Rational(11, 16), Rational(11, 16), Rational(29, 64)};
    const std::vector<Rational> tv{Rational(4, 5),   Rational(3, 5),   Rational(2, 5),    Rational(7, 20),
                                   Rational(11, 40), Rational(9, 40),  Rational(29, 160)};
    for (std::size_t t = 0; t <= 6; ++t) {
        out.expect(curve[t].exact_sep && *curve[t].exact_sep == sep[t], "Z_5 separation at t=" + std::to_string(t));
        out.expect(curve[t].exact_tv && *curve[t].exact_tv == tv[t], "Z_5 total variation at t=" + std::to_string(t));
    }
    return out;
}

Outcome monte_carlo() {
    Outcome out;
    MonteCarloOptions options;
    options.replicas = 100000;
    for (int n : {50, 200, 1000}) {
        options.seed = static_cast<std::uint64_t>(n);
        const auto sample = simulate_sst(ShuffleSpec(ShuffleKind::OST, n), options);
        for (double c : {0.5, 1.0, 2.0}) {
            const double threshold = n * std::log(static_cast<double>(n)) + c * n;
            const auto tail = upper_tail(sample, threshold);
            const double bound = std::exp(-c) + 3 * tail.sigma;
            out.expect(tail.probability <= bound, "SST tail n=" + std::to_string(n) + " c=" + to_general_string(c) + ": " +
                                                      to_general_string(tail.probability) + " vs " + to_general_string(bound));
        }
    }
    const int n = 10000;
    const double c = 4.0;
    CouponParams params{n, std::log(static_cast<double>(n)), std::nullopt};
    options.seed = 10000;
    const auto hits = coupon_hitting_times(params, options);
    const double threshold = n * (std::log(static_cast<double>(n)) - std::log(std::log(static_cast<double>(n))) - c);
    const auto tail = lower_tail(hits, threshold);
    const double bound = M_PI * M_PI / (6 * (c - 2) * (c - 2)) + 3 * tail.sigma;
    out.expect(tail.probability <= bound, "coupon lower tail n=10000 c=4: " + to_general_string(tail.probability) + " vs " +
                                              to_general_string(bound));
    return out;
}

int report(int id, const std::string& title, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out.passed = false;
        out.failures.push_back(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (out.passed ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " (" << out.checks << " checks, "
              << to_general_string(seconds, 3) << " s)\n";
    for (const auto& f : out.failures) std::cout << "    " << f << '\n';
    std::cout.flush();
    return out.passed ? 0 : 1;
}

}  // namespace

int main() {
    std::vector<CheckReport> oracle;
    int failed = 0;
    failed += report(1, "formula catalogs match brute-force spectra", [&] {
        Outcome out;
        oracle = oracle_suite(6);
        for (const auto& r : oracle)
            if (contains(r.name, "spectrum")) out.add(r);
        return out;
    });
    failed += report(2, "reference eigenvalues and distance tables", reference_values);
    failed += report(3, "lifted eigenvectors are exact", [] {
        Outcome out;
        out.add_all(lifting_suite(6));
        return out;
    });
    failed += report(4, "ordering and operator identities", [] {
        Outcome out;
        out.add_all(ordering_suite(9));
        out.add_all(identity_suite(6, 1000));
        return out;
    });
    failed += report(5, "lower bound <= exact TV <= l2 bound", [] {
        Outcome out;
        out.add_all(bound_sandwich_suite());
        return out;
    });
    failed += report(6, "Monte-Carlo SST and coupon tails", monte_carlo);
    failed += report(7, "count, trace and random-to-random reconciliation", [&] {
        Outcome out;
        for (const auto& r : oracle)
            if (!contains(r.name, "spectrum") && !contains(r.name, "reconciliation")) out.add(r);
        for (int n = 1; n <= 7; ++n) out.add(rtr_reconciliation(n));
        return out;
    });
    return failed == 0 ? 0 : 1;
}
