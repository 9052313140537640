#include "shuffle_lab/suites.hpp"

#include "shuffle_lab/bounds.hpp"
#include "shuffle_lab/exact_engine.hpp"
#include "shuffle_lab/lifting.hpp"
#include "shuffle_lab/parallel.hpp"

#include <algorithm>

namespace shuffle_lab {

namespace {

std::vector<ShuffleSpec> symmetric_specs(int n) {
    std::vector<ShuffleSpec> specs{ShuffleSpec(ShuffleKind::RT, n), ShuffleSpec(ShuffleKind::RTR, n), ShuffleSpec(ShuffleKind::OST, n)};
    for (int a : {-1, 1, 2}) specs.emplace_back(ShuffleKind::OST_biased, n, Weight::power(a));
    return specs;
}

std::vector<ShuffleSpec> oracle_specs(int n_max, int s_cap, int b_cap) {
    std::vector<ShuffleSpec> specs;
    for (int n = 2; n <= std::min(n_max, s_cap); ++n)
        for (auto& s : symmetric_specs(n)) specs.push_back(std::move(s));
    for (int n = 2; n <= std::min(n_max, b_cap); ++n) {
        specs.emplace_back(ShuffleKind::B_RT, n);
        specs.emplace_back(ShuffleKind::B_OST, n);
    }
    return specs;
}

void append(std::vector<CheckReport>& out, std::vector<CheckReport> more) {
    for (auto& r : more) out.push_back(std::move(r));
}

}  // namespace

CheckReport rtr_reconciliation(int n) {
    const auto catalog = build_catalog(ShuffleSpec(ShuffleKind::RTR, n));
    std::int64_t pairs = 0;
    for (const auto& e : catalog.entries())
        if (!std::holds_alternative<KernelIndex>(e.index)) pairs += e.multiplicity;
    const auto total = static_cast<std::int64_t>(factorial(n));
    const std::int64_t kernel = catalog.kernel_deficit();
    CheckReport r;
    r.name = "RTR n=" + std::to_string(n) + " reconciliation: pairs " + std::to_string(pairs) + " + kernel " +
             std::to_string(kernel) + " = " + std::to_string(total);
    r.cases = 1;
    r.passed = kernel >= 0 && pairs + kernel == total;
    if (!r.passed) r.witness = "sum " + std::to_string(pairs + kernel) + " differs from n!";
    return r;
}

std::vector<CheckReport> oracle_suite(int n_max, int threads) {
    const auto specs = oracle_specs(n_max, 6, 4);
    std::vector<std::vector<CheckReport>> results(specs.size());
    parallel_for(specs.size(), threads, [&](std::size_t i) {
        const auto& spec = specs[i];
        const auto catalog = build_catalog(spec);
        const auto cmp = compare_spectra(catalog, brute_force_spectrum(spec));
        const auto ids = check_identities(catalog);
        const std::string label = " " + spec.to_string();
        CheckReport spectrum{"catalog equals brute-force spectrum" + label, cmp.matches, catalog.total_multiplicity(), cmp.witness};
        CheckReport count{"multiplicities sum to |G|" + label, ids.count_ok, 1, ids.count_ok ? "" : ids.detail};
        CheckReport trace{"trace equals |G| pmf(e)" + label, ids.trace_ok, 1, ids.trace_ok ? "" : ids.detail};
        results[i] = {spectrum, count, trace};
    });
    std::vector<CheckReport> out;
    for (auto& r : results) append(out, std::move(r));
    for (int n = 1; n <= std::min(n_max, 7); ++n) out.push_back(rtr_reconciliation(n));
    return out;
}

std::vector<CheckReport> lifting_suite(int n_max, int threads) {
    std::vector<CheckReport> out = reference_lift_checks();
    for (int n = 1; n <= std::min(n_max, 6); ++n) {
        append(out, lifting_checks(ShuffleSpec(ShuffleKind::OST, n), threads));
        append(out, lifting_checks(ShuffleSpec(ShuffleKind::RT, n), threads));
        for (int a : {-1, 0, 1, 2}) append(out, lifting_checks(ShuffleSpec(ShuffleKind::OST_biased, n, Weight::power(a)), threads));
    }
    for (int n = 1; n <= std::min(n_max, 4); ++n) {
        append(out, lifting_checks(ShuffleSpec(ShuffleKind::B_RT, n), threads));
        append(out, lifting_checks(ShuffleSpec(ShuffleKind::B_OST, n), threads));
        append(out, lifting_checks(ShuffleSpec(ShuffleKind::B_OST_biased, n, Weight::power(2)), threads));
    }
    return out;
}

std::vector<CheckReport> ordering_suite(int n_max) {
    std::vector<CheckReport> out;
    for (int n = 1; n <= n_max; ++n) {
        const std::string at = " n=" + std::to_string(n);
        for (auto r : eig_order_checks(n)) {
            r.name += at;
            out.push_back(std::move(r));
        }
        for (int a : {-1, 1, 2})
            for (auto r : eig_order_checks(n, Weight::power(a))) {
                r.name += at + " alpha=" + std::to_string(a);
                out.push_back(std::move(r));
            }
        if (n >= 3) {
            auto box = boxindex_check(n);
            box.name += at;
            out.push_back(std::move(box));
        }
        CheckReport dims{"squared dimensions with first row n-k" + at, true, 0, ""};
        for (int k = 0; k <= n; ++k) {
            ++dims.cases;
            if (!dimension_bound_check(n, k) && dims.passed) {
                dims.passed = false;
                dims.witness = "k=" + std::to_string(k);
            }
        }
        out.push_back(std::move(dims));
        CheckReport diag{"diagonal and first-row inequalities" + at, true, 0, ""};
        for (const auto& lambda : partitions_of(n)) {
            ++diag.cases;
            if ((!diag_bound_check(lambda) || !first_row_bound_check(lambda)) && diag.passed) {
                diag.passed = false;
                diag.witness = lambda.to_string();
            }
        }
        out.push_back(std::move(diag));
    }
    return out;
}

std::vector<CheckReport> identity_suite(int n_max, int trials, std::uint64_t seed) {
    std::vector<CheckReport> out;
    for (int n = 1; n <= std::min(n_max, 6); ++n) append(out, operator_identity_checks(n, trials, seed));
    return out;
}

std::vector<CheckReport> bound_sandwich_suite(int t_max, int threads) {
    std::vector<ShuffleSpec> specs;
    for (int n = 2; n <= 5; ++n)
        for (auto& s : symmetric_specs(n)) specs.push_back(std::move(s));
    for (int n = 2; n <= 3; ++n) {
        specs.emplace_back(ShuffleKind::B_RT, n);
        specs.emplace_back(ShuffleKind::B_OST, n);
    }
    std::vector<int> grid(static_cast<std::size_t>(t_max) + 1);
    for (int t = 0; t <= t_max; ++t) grid[static_cast<std::size_t>(t)] = t;
    std::vector<CheckReport> out(specs.size());
    parallel_for(specs.size(), threads, [&](std::size_t i) {
        const auto rows = bound_table(specs[i], grid);
        CheckReport r{"lower bound <= exact TV <= l2 bound " + specs[i].to_string(), true, 0, ""};
        for (const auto& row : rows) {
            ++r.cases;
            const bool ok = row.exact_tv && row.l2_bound && row.lower_bound && *row.lower_bound <= *row.exact_tv + 1e-12 &&
                            *row.exact_tv <= *row.l2_bound + 1e-12;
            if (!ok && r.passed) {
                r.passed = false;
                r.witness = "t=" + std::to_string(row.t) + ": lower " + (row.lower_bound ? to_general_string(*row.lower_bound) : "n/a") +
                            ", tv " + (row.exact_tv ? to_general_string(*row.exact_tv) : "n/a") + ", l2 " +
                            (row.l2_bound ? to_general_string(*row.l2_bound) : "n/a");
            }
        }
        out[i] = std::move(r);
    });
    return out;
}

bool all_passed(const std::vector<CheckReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed; });
}

}  // namespace shuffle_lab
