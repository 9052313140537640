#include "shuffle_lab/bounds.hpp"

#include "shuffle_lab/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace shuffle_lab {

namespace {

constexpr double neg_inf = -std::numeric_limits<double>::infinity();

// Log of mult * |eig|^{2t}; zero eigenvalues contribute only at t = 0.
double log_term(double log_mult, double eig, double t) {
    if (eig == 0.0) return t == 0.0 ? log_mult : neg_inf;
    return log_mult + 2.0 * t * std::log(std::abs(eig));
}

// log(sum exp(x)) with a compensated inner sum, in the given order.
double log_sum_exp(const std::vector<double>& logs) {
    double top = neg_inf;
    for (double x : logs) top = std::max(top, x);
    if (top == neg_inf) return neg_inf;
    CompensatedSum sum;
    for (double x : logs) sum.add(std::exp(x - top));
    return top + std::log(sum.value());
}

double tv_from_log_sum(double log_sum) { return log_sum == neg_inf ? 0.0 : 0.5 * std::exp(0.5 * log_sum); }

std::vector<double> catalog_logs(const EigenCatalog& catalog, double t) {
    const auto& entries = catalog.entries();
    std::size_t trivial = entries.size();
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto& e = entries[i];
        const bool one = e.exact_value ? *e.exact_value == 1 : std::abs(e.value - 1.0) < 1e-12;
        if (one && e.multiplicity > 0) {
            trivial = i;
            break;
        }
    }
    if (trivial == entries.size()) throw std::invalid_argument("catalog has no trivial eigenvalue");
    std::vector<double> logs;
    logs.reserve(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto mult = entries[i].multiplicity - (i == trivial ? 1 : 0);
        if (mult > 0) logs.push_back(log_term(std::log(static_cast<double>(mult)), entries[i].value, t));
    }
    return logs;
}

double log_of(const BigInt& x) {
    // Scale down before converting so large dimensions keep full precision.
    const auto digits = static_cast<long>(x.str().size());
    if (digits < 300) return std::log(x.convert_to<double>());
    const BigInt shift = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(digits - 20));
    return std::log((x / shift).convert_to<double>()) + static_cast<double>(digits - 20) * std::log(10.0);
}

struct RelaxedTerm {
    double log_weight = 0.0;
    double eig = 0.0;
};

std::vector<RelaxedTerm> relaxed_terms(int n, int threads, const RelaxedCaps& caps) {
    if (n < 1) throw std::invalid_argument("relaxed bound needs n >= 1");
    if (n > caps.max_n) throw CapExceeded("relaxed bound cap exceeded at n = " + std::to_string(n));
    const auto shapes = partitions_of(n);
    const DimensionTable dims(n);
    std::vector<RelaxedTerm> terms(shapes.size() + 1);
    const Partition column(std::vector<int>(static_cast<std::size_t>(n), 1));
    if (n > 1) terms.back() = {0.0, to_double(ost_eig(special_tableau(column, Filling::column_wise)))};
    else terms.back() = {neg_inf, 0.0};
    parallel_for(shapes.size(), threads, [&](std::size_t i) {
        const auto& lambda = shapes[i];
        const Rational eig = ost_eig(special_tableau(lambda, Filling::row_wise));
        if (lambda.length() == 1 || eig < 0) {
            terms[i] = {neg_inf, 0.0};
            return;
        }
        terms[i] = {std::log(2.0) + 2.0 * log_of(dims(lambda)), to_double(eig)};
    });
    return terms;
}

double relaxed_log_sum(const std::vector<RelaxedTerm>& terms, double t) {
    std::vector<double> logs;
    logs.reserve(terms.size());
    for (const auto& term : terms)
        if (term.log_weight != neg_inf) logs.push_back(log_term(term.log_weight, term.eig, t));
    return log_sum_exp(logs);
}

}  // namespace

double l2_sum(const EigenCatalog& catalog, double t) {
    const double s = log_sum_exp(catalog_logs(catalog, t));
    return s == neg_inf ? 0.0 : std::exp(s);
}

double l2_upper_bound(const EigenCatalog& catalog, double t) {
    if (t < 0) throw std::invalid_argument("t must be non-negative");
    return tv_from_log_sum(log_sum_exp(catalog_logs(catalog, t)));
}

double relaxed_ost_sum(int n, double t, int threads, const RelaxedCaps& caps) {
    const double s = relaxed_log_sum(relaxed_terms(n, threads, caps), t);
    return s == neg_inf ? 0.0 : std::exp(s);
}

double relaxed_ost_bound(int n, double t, int threads, const RelaxedCaps& caps) {
    if (t < 0) throw std::invalid_argument("t must be non-negative");
    return tv_from_log_sum(relaxed_log_sum(relaxed_terms(n, threads, caps), t));
}

bool dimension_bound_check(int n, int k, const RelaxedCaps& caps) {
    if (n < 0 || k < 0 || k > n) throw std::invalid_argument("dimension bound needs 0 <= k <= n");
    if (n > caps.max_n) throw CapExceeded("dimension bound cap exceeded at n = " + std::to_string(n));
    const DimensionTable dims(n);
    BigInt sum = 0;
    for (const auto& lambda : partitions_of(n))
        if (lambda.row(1) == n - k) sum += dims(lambda) * dims(lambda);
    const BigInt c = binomial(n, k);
    return sum <= c * c * factorial(k);
}

bool diag_bound_check(const Partition& lambda) {
    const long long n = lambda.size();
    const long long first = lambda.row(1);
    const long long twice_diag = 2LL * diag_sum(lambda);
    bool ok = twice_diag <= (first - 1) * n;
    if (2 * first >= n) ok = ok && twice_diag <= (n - 1) * n - 2 * (n - first) * (first + 1);
    return ok;
}

bool first_row_bound_check(const Partition& lambda) {
    const long long n = lambda.size();
    if (n == 0) return true;
    const long long first = lambda.row(1);
    const long long scaled = n + 2LL * diag_sum(lambda);  // n^2 times the eigenvalue
    bool ok = scaled <= first * n;
    if (4 * first >= 3 * n) ok = ok && scaled <= n * n - 2 * (first + 1) * (n - first);
    return ok;
}

namespace {

std::vector<bool> fixed_point_set(const ShuffleSpec& spec, int m, const EngineCaps& caps) {
    if (m < 1) throw std::invalid_argument("top fraction m must be at least 1");
    const int n = spec.n();
    const int window = (n + m - 1) / m;
    auto in_set = [&](const auto& g) {
        for (int i = n - window + 1; i <= n; ++i)
            if (g(i) == i) return true;
        return false;
    };
    std::vector<bool> member;
    switch (spec.group()) {
        case GroupKind::symmetric: {
            const auto group = enumerate_symmetric(n, caps.enumeration);
            for (const auto& g : group.elements()) member.push_back(in_set(g));
            break;
        }
        case GroupKind::hyperoctahedral: {
            const auto group = enumerate_hyperoctahedral(n, caps.enumeration);
            for (const auto& g : group.elements()) member.push_back(in_set(g));
            break;
        }
        case GroupKind::cyclic: throw std::invalid_argument("fixed-point sets need a permutation group");
    }
    return member;
}

Rational set_mass(const DenseDistribution& d, const std::vector<bool>& member) {
    if (d.exact()) {
        BigInt s = 0;
        for (std::size_t i = 0; i < member.size(); ++i)
            if (member[i]) s += d.numerators()[i];
        return Rational(s, d.denominator());
    }
    throw std::logic_error("set_mass called on a real distribution");
}

double set_mass_real(const DenseDistribution& d, const std::vector<bool>& member) {
    double s = 0.0;
    for (std::size_t i = 0; i < member.size(); ++i)
        if (member[i]) s += d.at(i);
    return s;
}

}  // namespace

Rational fixed_point_stationary_mass(const ShuffleSpec& spec, int m, const EngineCaps& caps) {
    const auto member = fixed_point_set(spec, m, caps);
    const auto count = std::count(member.begin(), member.end(), true);
    return Rational(static_cast<long long>(count), static_cast<long long>(member.size()));
}

std::vector<double> fixed_point_lower_curve(const ShuffleSpec& spec, int t_max, int m, const EngineCaps& caps) {
    if (t_max < 0) throw std::invalid_argument("t_max must be non-negative");
    const auto member = fixed_point_set(spec, m, caps);
    const auto model = TransitionModel::build(spec, caps);
    const Rational pi = Rational(static_cast<long long>(std::count(member.begin(), member.end(), true)),
                                 static_cast<long long>(member.size()));
    std::vector<double> curve;
    auto d = DenseDistribution::delta_identity(model.group(), model.exact());
    for (int t = 0; t <= t_max; ++t) {
        if (t > 0) d = step(d, model);
        if (d.exact()) {
            const Rational gap = set_mass(d, member) - pi;
            curve.push_back(to_double(gap < 0 ? Rational(-gap) : gap));
        } else {
            curve.push_back(std::abs(set_mass_real(d, member) - to_double(pi)));
        }
    }
    return curve;
}

double fixed_point_lower_bound(const ShuffleSpec& spec, int t, int m, const EngineCaps& caps) {
    return fixed_point_lower_curve(spec, t, m, caps).back();
}

double biased_time_scale(int n, double alpha) {
    if (n < 1) throw std::invalid_argument("biased time scale needs n >= 1");
    auto total = [n](double a) {
        double s = 0.0;
        for (int j = 1; j <= n; ++j) s += std::pow(static_cast<double>(j), a);
        return s;
    };
    if (alpha <= 1.0) return total(alpha) / std::pow(static_cast<double>(n), alpha);
    return total(alpha) / total(alpha - 1.0);
}

std::vector<BoundRow> bound_table(const ShuffleSpec& spec, const std::vector<int>& grid, const BoundOptions& options) {
    for (int t : grid)
        if (t < 0) throw std::invalid_argument("grid times must be non-negative");
    const int t_max = grid.empty() ? 0 : *std::max_element(grid.begin(), grid.end());

    std::optional<std::vector<CurvePoint>> curve;
    std::optional<std::vector<double>> lower;
    try {
        curve = distance_curve(spec, t_max, options.engine);
        if (spec.group() != GroupKind::cyclic) lower = fixed_point_lower_curve(spec, t_max, options.top_fraction, options.engine);
    } catch (const CapExceeded&) {
    }
    std::optional<EigenCatalog> catalog;
    if (spec.reversible()) {
        try {
            catalog = build_catalog(spec);
        } catch (const std::invalid_argument&) {
        } catch (const CapExceeded&) {
        }
    }
    const bool relaxed = spec.kind() == ShuffleKind::OST && spec.n() <= RelaxedCaps{}.max_n;
    std::vector<RelaxedTerm> terms;
    if (relaxed) terms = relaxed_terms(spec.n(), options.threads, {});

    std::vector<BoundRow> rows;
    for (int t : grid) {
        BoundRow row;
        row.t = t;
        if (curve) row.exact_tv = (*curve)[static_cast<std::size_t>(t)].tv;
        if (lower) row.lower_bound = (*lower)[static_cast<std::size_t>(t)];
        if (catalog) row.l2_bound = l2_upper_bound(*catalog, t);
        if (relaxed) row.relaxed_bound = tv_from_log_sum(relaxed_log_sum(terms, t));
        rows.push_back(row);
    }
    return rows;
}

std::string bound_csv(const std::vector<BoundRow>& rows) {
    std::ostringstream out;
    out << "t,exact_tv,l2_bound,relaxed_bound,lower_bound\n";
    auto cell = [](const std::optional<double>& x) { return x ? to_general_string(*x) : std::string(); };
    for (const auto& r : rows)
        out << r.t << ',' << cell(r.exact_tv) << ',' << cell(r.l2_bound) << ',' << cell(r.relaxed_bound) << ','
            << cell(r.lower_bound) << '\n';
    return out.str();
}

}  // namespace shuffle_lab
