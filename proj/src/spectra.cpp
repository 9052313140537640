#include "shuffle_lab/spectra.hpp"

#include "shuffle_lab/exact_engine.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace shuffle_lab {

std::string index_to_string(const EigenIndex& index) {
    struct Visitor {
        std::string operator()(const Partition& p) const { return p.to_string(); }
        std::string operator()(const StandardTableau& t) const { return t.to_string(); }
        std::string operator()(const std::pair<Partition, Partition>& p) const {
            return "(" + p.first.to_string() + "," + p.second.to_string() + ")";
        }
        std::string operator()(const BiPartition& p) const { return p.to_string(); }
        std::string operator()(const BiTableau& t) const { return t.to_string(); }
        std::string operator()(const KernelIndex&) const { return "kernel"; }
    };
    return std::visit(Visitor{}, index);
}

EigenCatalog::EigenCatalog(ShuffleSpec spec, std::vector<CatalogEntry> entries, std::int64_t kernel_deficit)
    : spec_(std::move(spec)), entries_(std::move(entries)), kernel_deficit_(kernel_deficit) {}

std::int64_t EigenCatalog::total_multiplicity() const {
    std::int64_t s = 0;
    for (const auto& e : entries_) s += e.multiplicity;
    return s;
}

Rational EigenCatalog::exact_trace() const {
    Rational s = 0;
    for (const auto& e : entries_) {
        if (!e.exact_value) throw std::domain_error("catalog is not exact");
        s += *e.exact_value * e.multiplicity;
    }
    return s;
}

double EigenCatalog::trace() const {
    CompensatedSum s;
    for (const auto& e : entries_) s.add(e.value * static_cast<double>(e.multiplicity));
    return s.value();
}

std::vector<double> EigenCatalog::expanded() const {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(total_multiplicity()));
    for (const auto& e : entries_) out.insert(out.end(), static_cast<std::size_t>(e.multiplicity), e.value);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

namespace {

// Sum over boxes of (j - i + shift) * weight(T(i,j)) / T(i,j).
template <class Scalar, class WeightFn>
Scalar box_sum(const std::vector<std::vector<int>>& rows, int shift, WeightFn weight) {
    Scalar s = 0;
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            const int value = rows[i][j];
            const int index = static_cast<int>(j) - static_cast<int>(i) + shift;
            if (index != 0) s += Scalar(index) * weight(value) / Scalar(value);
        }
    return s;
}

Rational unit_weight(int) { return 1; }

std::int64_t to_int64(const BigInt& z) { return z.convert_to<std::int64_t>(); }

}  // namespace

Rational ost_eig(const StandardTableau& t) {
    return box_sum<Rational>(t.rows(), 1, unit_weight) / t.size();
}

Rational biased_ost_eig(const StandardTableau& t, const Weight& w) {
    return box_sum<Rational>(t.rows(), 1, [&](int j) { return w.exact_at(j); }) / w.exact_total(t.size());
}

double biased_ost_eig_real(const StandardTableau& t, const Weight& w) {
    return box_sum<double>(t.rows(), 1, [&](int j) { return w.at(j); }) / w.total(t.size());
}

Rational rt_eig(const Partition& lambda) {
    const int n = lambda.size();
    return Rational(n + 2 * diag_sum(lambda), n * n);
}

Rational rtr_eig(const Partition& lambda, const Partition& mu) {
    if (!is_horizontal_strip(lambda, mu)) throw std::invalid_argument("rtr_eig: lambda/mu is not a horizontal strip");
    const int n = lambda.size();
    const BigInt top = binomial(n + 1, 2) - binomial(mu.size() + 1, 2) + diag_sum(lambda) - diag_sum(mu);
    return Rational(top, n * n);
}

Rational brt_eig(const BiPartition& lambda) {
    const int n = lambda.size();
    return Rational(2 * lambda.first().size() + 4 * diag_sum(lambda.first()) + 4 * diag_sum(lambda.second()), 2 * n * n);
}

Rational bost_eig(const BiTableau& t, const std::optional<Weight>& w) {
    auto weight = [&](int j) { return w ? w->exact_at(j) : Rational(1); };
    const Rational total = w ? w->exact_total(t.size()) : Rational(t.size());
    return (box_sum<Rational>(t.component(1), 1, weight) + box_sum<Rational>(t.component(2), 0, weight)) / total;
}

double bost_eig_real(const BiTableau& t, const std::optional<Weight>& w) {
    auto weight = [&](int j) { return w ? w->at(j) : 1.0; };
    const double total = w ? w->total(t.size()) : static_cast<double>(t.size());
    return (box_sum<double>(t.component(1), 1, weight) + box_sum<double>(t.component(2), 0, weight)) / total;
}

EigenCatalog build_catalog(const ShuffleSpec& spec, const SpectraCaps& caps) {
    const int n = spec.n();
    if (n > caps.max_n) throw CapExceeded("catalog size cap exceeded");
    std::vector<CatalogEntry> entries;
    auto push = [&](EigenIndex index, std::optional<Rational> exact, double real, const BigInt& mult) {
        if (mult == 0) return;
        const double value = exact ? to_double(*exact) : real;
        entries.push_back({std::move(index), std::move(exact), value, to_int64(mult)});
    };
    std::int64_t deficit = 0;
    switch (spec.kind()) {
        case ShuffleKind::OST:
        case ShuffleKind::OST_biased:
            for (const auto& lambda : partitions_of(n)) {
                const BigInt d = dimension(lambda);
                for (const auto& t : enumerate_syt(lambda, caps.tableaux)) {
                    if (!spec.weight())
                        push(t, ost_eig(t), 0.0, d);
                    else if (spec.exact())
                        push(t, biased_ost_eig(t, *spec.weight()), 0.0, d);
                    else
                        push(t, std::nullopt, biased_ost_eig_real(t, *spec.weight()), d);
                }
            }
            break;
        case ShuffleKind::RT:
            for (const auto& lambda : partitions_of(n)) {
                const BigInt d = dimension(lambda);
                push(lambda, rt_eig(lambda), 0.0, d * d);
            }
            break;
        case ShuffleKind::RTR: {
            BigInt covered = 0;
            for (const auto& lambda : partitions_of(n)) {
                const BigInt d = dimension(lambda);
                for (int m = 0; m <= n; ++m)
                    for (const auto& mu : partitions_of(m)) {
                        if (!contains(lambda, mu) || !is_horizontal_strip(lambda, mu)) continue;
                        const BigInt mult = d * desarrangement_count(mu, caps.tableaux);
                        covered += mult;
                        push(std::make_pair(lambda, mu), rtr_eig(lambda, mu), 0.0, mult);
                    }
            }
            const BigInt rest = factorial(n) - covered;
            if (rest < 0) throw std::logic_error("random-to-random pairs exceed n!");
            deficit = to_int64(rest);
            push(KernelIndex{}, Rational(0), 0.0, rest);
            break;
        }
        case ShuffleKind::B_RT:
            for (const auto& lambda : bipartitions_of(n)) {
                const BigInt d = bi_dimension(lambda);
                push(lambda, brt_eig(lambda), 0.0, d * d);
            }
            break;
        case ShuffleKind::B_OST:
        case ShuffleKind::B_OST_biased:
            for (const auto& lambda : bipartitions_of(n)) {
                const BigInt d = bi_dimension(lambda);
                for (const auto& t : enumerate_bi_syt(lambda, caps.tableaux)) {
                    if (spec.exact())
                        push(t, bost_eig(t, spec.weight()), 0.0, d);
                    else
                        push(t, std::nullopt, bost_eig_real(t, spec.weight()), d);
                }
            }
            break;
        default:
            throw std::invalid_argument("no eigenvalue formula for " + kind_name(spec.kind()));
    }
    return EigenCatalog(spec, std::move(entries), deficit);
}

SpectrumComparison compare_spectra(const EigenCatalog& catalog, const std::vector<double>& oracle, double tol) {
    SpectrumComparison out;
    const auto mine = catalog.expanded();
    std::vector<double> theirs = oracle;
    std::sort(theirs.begin(), theirs.end(), std::greater<>());
    if (mine.size() != theirs.size()) {
        out.witness = "catalog has " + std::to_string(mine.size()) + " eigenvalues, oracle has " + std::to_string(theirs.size());
        return out;
    }
    out.matches = true;
    for (std::size_t i = 0; i < mine.size(); ++i) {
        const double dev = std::fabs(mine[i] - theirs[i]);
        out.max_deviation = std::max(out.max_deviation, dev);
        if (dev > tol && out.matches) {
            out.matches = false;
            out.witness = "position " + std::to_string(i) + ": catalog " + to_decimal_string(mine[i]) + " vs oracle " +
                          to_decimal_string(theirs[i]);
        }
    }
    return out;
}

CatalogIdentities check_identities(const EigenCatalog& catalog) {
    CatalogIdentities out;
    const auto order = group_of(catalog.spec()).order();
    out.count_ok = catalog.total_multiplicity() == static_cast<std::int64_t>(order);
    if (catalog.exact()) {
        const Rational expected = identity_mass(catalog.spec()) * static_cast<long long>(order);
        const Rational trace = catalog.exact_trace();
        out.trace_ok = trace == expected;
        out.detail = "trace " + to_fraction_string(trace) + " expected " + to_fraction_string(expected);
    } else {
        const auto& spec = catalog.spec();
        double expected = 0.0;
        if (spec.group() == GroupKind::symmetric)
            expected = pmf_real(spec, Permutation::identity(spec.n()));
        else
            expected = pmf_real(spec, SignedPermutation::identity(spec.n()));
        expected *= static_cast<double>(order);
        out.trace_ok = std::fabs(catalog.trace() - expected) <= 1e-9 * static_cast<double>(order);
        out.detail = "trace " + to_decimal_string(catalog.trace()) + " expected " + to_decimal_string(expected);
    }
    out.detail += ", multiplicity " + std::to_string(catalog.total_multiplicity()) + " of " + std::to_string(order);
    return out;
}

namespace {

class ReportBuilder {
public:
    explicit ReportBuilder(std::string name) { report_.name = std::move(name); }
    void record(bool ok, const std::function<std::string()>& witness) {
        ++report_.cases;
        if (!ok && report_.passed) {
            report_.passed = false;
            report_.witness = witness();
        }
    }
    CheckReport done() { return std::move(report_); }

private:
    CheckReport report_;
};

}  // namespace

std::vector<CheckReport> eig_order_checks(int n, const std::optional<Weight>& weight, const SpectraCaps& caps) {
    const Weight w = weight ? *weight : Weight::power(0);
    if (!w.exact()) throw std::domain_error("ordering checks need rational weights");
    const auto alpha = w.exponent();
    const bool small_alpha = !alpha || *alpha <= 1;
    const bool large_alpha = alpha && *alpha >= 1;
    auto eig = [&](const StandardTableau& t) { return biased_ost_eig(t, w); };
    auto show = [](const Rational& q) { return to_fraction_string(q); };

    Rational transpose_sum = 0;
    for (int m = 1; m <= n; ++m) transpose_sum += w.exact_at(m) / m;
    transpose_sum = 2 * transpose_sum / w.exact_total(n);

    ReportBuilder extremes(small_alpha ? "column-wise <= T <= row-wise" : "row-wise <= T <= column-wise");
    ReportBuilder reversed("row-wise <= T <= column-wise");
    ReportBuilder transpose("eig(T) + eig(T') constant");
    for (const auto& lambda : partitions_of(n)) {
        const Rational row = eig(special_tableau(lambda, Filling::row_wise));
        const Rational col = eig(special_tableau(lambda, Filling::column_wise));
        for (const auto& t : enumerate_syt(lambda, caps.tableaux)) {
            const Rational e = eig(t);
            auto witness = [&] { return "T=" + t.to_string() + " eig=" + show(e) + " row=" + show(row) + " col=" + show(col); };
            if (small_alpha) extremes.record(col <= e && e <= row, witness);
            if (large_alpha) reversed.record(row <= e && e <= col, witness);
            const Rational s = e + eig(tableau_transpose(t));
            transpose.record(s == transpose_sum, [&] { return "T=" + t.to_string() + " sum=" + show(s); });
        }
    }

    std::vector<CheckReport> out;
    if (small_alpha) out.push_back(extremes.done());
    if (large_alpha) out.push_back(reversed.done());
    out.push_back(transpose.done());

    if (small_alpha) {
        ReportBuilder dominance("dominance monotonicity of row-wise and column-wise");
        const auto shapes = partitions_of(n);
        std::vector<Rational> row, col;
        for (const auto& p : shapes) {
            row.push_back(eig(special_tableau(p, Filling::row_wise)));
            col.push_back(eig(special_tableau(p, Filling::column_wise)));
        }
        for (std::size_t a = 0; a < shapes.size(); ++a)
            for (std::size_t b = 0; b < shapes.size(); ++b) {
                if (!dominates(shapes[a], shapes[b])) continue;
                dominance.record(row[a] >= row[b] && col[a] >= col[b],
                                 [&] { return shapes[a].to_string() + " dominates " + shapes[b].to_string(); });
            }
        out.push_back(dominance.done());
    }

    if (large_alpha) {
        ReportBuilder bound("column-wise below diagonal-wise (n-k,*)");
        for (const auto& lambda : partitions_of(n)) {
            const int k = n - lambda.row(1);
            const Rational col = eig(special_tableau(lambda, Filling::column_wise));
            const Rational cap = eig(special_tableau(star_shape(n, k), Filling::diagonal_wise));
            bound.record(col <= cap, [&] { return lambda.to_string() + " eig=" + show(col) + " bound=" + show(cap); });
        }
        out.push_back(bound.done());
    }
    return out;
}

CheckReport boxindex_check(int n) {
    ReportBuilder report("box index bound on (n-k,*)");
    for (int k = 1; k <= n - 2; ++k) {
        const Partition shape = star_shape(n, k);
        const auto t = special_tableau(shape, Filling::diagonal_wise);
        for (int i = 1; i <= shape.length(); ++i)
            for (int j = 1; j <= shape.row(i); ++j)
                report.record((j - i + 1) * n <= (n - k) * t.at(i, j), [&] {
                    return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " box (" + std::to_string(i) + "," +
                           std::to_string(j) + ")";
                });
    }
    return report.done();
}

}  // namespace shuffle_lab
