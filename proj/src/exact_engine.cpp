#include "shuffle_lab/exact_engine.hpp"

#include "shuffle_lab/tableaux.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace shuffle_lab {

std::size_t GroupDescriptor::order() const {
    switch (kind) {
        case GroupKind::symmetric:
            return static_cast<std::size_t>(factorial(n));
        case GroupKind::hyperoctahedral:
            return static_cast<std::size_t>(factorial(n)) << n;
        case GroupKind::cyclic:
            return static_cast<std::size_t>(n);
    }
    return 0;
}

GroupDescriptor group_of(const ShuffleSpec& spec) { return {spec.group(), spec.n()}; }

namespace {

template <class Element, class Scalar>
void add_moves(const GroupIndex<Element>& group, const Support<Element, Scalar>& support,
               std::vector<TransitionModel::Move>& moves) {
    for (const auto& [a, p] : support) {
        TransitionModel::Move m;
        if constexpr (std::is_same_v<Scalar, Rational>) {
            m.probability = p;
            m.real_probability = to_double(p);
        } else {
            m.real_probability = p;
        }
        m.target.resize(group.size());
        for (std::size_t h = 0; h < group.size(); ++h)
            m.target[h] = static_cast<std::uint32_t>(group.index(compose(a, group[h])));
        moves.push_back(std::move(m));
    }
}

void check_same_group(const DenseDistribution& a, const DenseDistribution& b) {
    if (!(a.group() == b.group())) throw std::invalid_argument("distributions live on different groups");
}

}  // namespace

TransitionModel TransitionModel::build(const ShuffleSpec& spec, const EngineCaps& caps) {
    TransitionModel model;
    model.group_ = group_of(spec);
    model.exact_ = spec.exact();
    switch (spec.group()) {
        case GroupKind::symmetric: {
            const auto g = enumerate_symmetric(spec.n(), caps.enumeration);
            if (model.exact_)
                add_moves(g, symmetric_support(spec), model.moves_);
            else
                add_moves(g, symmetric_support_real(spec), model.moves_);
            break;
        }
        case GroupKind::hyperoctahedral: {
            const auto g = enumerate_hyperoctahedral(spec.n(), caps.enumeration);
            if (model.exact_)
                add_moves(g, signed_support(spec), model.moves_);
            else
                add_moves(g, signed_support_real(spec), model.moves_);
            break;
        }
        case GroupKind::cyclic: {
            const int n = spec.n();
            for (const auto& [r, p] : cyclic_walk_pmf(spec)) {
                Move m;
                m.probability = p;
                m.real_probability = to_double(p);
                for (int h = 0; h < n; ++h) m.target.push_back(static_cast<std::uint32_t>((r + h) % n));
                model.moves_.push_back(std::move(m));
            }
            break;
        }
    }
    if (model.exact_) {
        BigInt d = 1;
        for (const auto& m : model.moves_) d = boost::multiprecision::lcm(d, boost::multiprecision::denominator(m.probability));
        model.denominator_ = d;
        for (auto& m : model.moves_) m.numerator = boost::multiprecision::numerator(Rational(m.probability * d));
    }
    return model;
}

DenseDistribution DenseDistribution::delta_identity(const GroupDescriptor& group, bool exact) {
    DenseDistribution d;
    d.group_ = group;
    d.exact_ = exact;
    const std::size_t size = group.order();
    if (exact) {
        d.numerators_.assign(size, 0);
        d.numerators_[0] = 1;
    } else {
        d.values_.assign(size, 0.0);
        d.values_[0] = 1.0;
    }
    return d;
}

DenseDistribution DenseDistribution::uniform(const GroupDescriptor& group, bool exact) {
    DenseDistribution d;
    d.group_ = group;
    d.exact_ = exact;
    const std::size_t size = group.order();
    if (exact) {
        d.numerators_.assign(size, 1);
        d.denominator_ = size;
    } else {
        d.values_.assign(size, 1.0 / static_cast<double>(size));
    }
    return d;
}

DenseDistribution DenseDistribution::from_exact(const GroupDescriptor& group, const std::vector<Rational>& values) {
    if (values.size() != group.order()) throw std::invalid_argument("value count does not match the group order");
    DenseDistribution d;
    d.group_ = group;
    BigInt den = 1;
    for (const auto& v : values) {
        if (v < 0) throw std::invalid_argument("negative probability");
        den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(v));
    }
    d.denominator_ = den;
    for (const auto& v : values) d.numerators_.push_back(boost::multiprecision::numerator(Rational(v * den)));
    d.normalize();
    return d;
}

Rational DenseDistribution::exact_at(std::size_t i) const {
    if (!exact_) throw std::domain_error("distribution is not exact");
    return Rational(numerators_[i], denominator_);
}

double DenseDistribution::at(std::size_t i) const { return exact_ ? to_double(exact_at(i)) : values_[i]; }

Rational DenseDistribution::exact_total() const {
    if (!exact_) throw std::domain_error("distribution is not exact");
    BigInt s = 0;
    for (const auto& v : numerators_) s += v;
    return Rational(s, denominator_);
}

double DenseDistribution::total() const {
    if (exact_) return to_double(exact_total());
    CompensatedSum s;
    for (double v : values_) s.add(v);
    return s.value();
}

void DenseDistribution::normalize() {
    BigInt g = denominator_;
    for (const auto& v : numerators_) {
        if (g == 1) return;
        if (v != 0) g = boost::multiprecision::gcd(g, v);
    }
    if (g == 1) return;
    for (auto& v : numerators_) v /= g;
    denominator_ /= g;
}

DenseDistribution step(const DenseDistribution& d, const TransitionModel& model) {
    if (!(d.group() == model.group())) throw std::invalid_argument("distribution and shuffle live on different groups");
    DenseDistribution out;
    out.group_ = d.group_;
    out.exact_ = d.exact_ && model.exact();
    const std::size_t size = d.size();
    if (out.exact_) {
        out.numerators_.assign(size, 0);
        for (std::size_t h = 0; h < size; ++h) {
            const BigInt& mass = d.numerators_[h];
            if (mass == 0) continue;
            for (const auto& m : model.moves()) out.numerators_[m.target[h]] += m.numerator * mass;
        }
        out.denominator_ = d.denominator_ * model.common_denominator();
        out.normalize();
    } else {
        out.values_.assign(size, 0.0);
        for (std::size_t h = 0; h < size; ++h) {
            const double mass = d.at(h);
            if (mass == 0.0) continue;
            for (const auto& m : model.moves()) out.values_[m.target[h]] += m.real_probability * mass;
        }
    }
    return out;
}

DenseDistribution step(const DenseDistribution& d, const ShuffleSpec& spec) {
    return step(d, TransitionModel::build(spec));
}

DenseDistribution evolve(const TransitionModel& model, int t) {
    auto d = DenseDistribution::delta_identity(model.group(), model.exact());
    for (int s = 0; s < t; ++s) d = step(d, model);
    return d;
}

Rational exact_tv_distance(const DenseDistribution& mu, const DenseDistribution& nu) {
    check_same_group(mu, nu);
    BigInt s = 0;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        const BigInt diff = mu.numerators()[i] * nu.denominator() - nu.numerators()[i] * mu.denominator();
        s += diff < 0 ? BigInt(-diff) : diff;
    }
    return Rational(s, 2 * mu.denominator() * nu.denominator());
}

double tv_distance(const DenseDistribution& mu, const DenseDistribution& nu) {
    check_same_group(mu, nu);
    if (mu.exact() && nu.exact()) return to_double(exact_tv_distance(mu, nu));
    CompensatedSum s;
    for (std::size_t i = 0; i < mu.size(); ++i) s.add(std::fabs(mu.at(i) - nu.at(i)));
    return 0.5 * s.value();
}

Rational exact_tv_to_uniform(const DenseDistribution& mu) {
    const BigInt order = mu.size();
    BigInt s = 0;
    for (const auto& v : mu.numerators()) {
        const BigInt diff = v * order - mu.denominator();
        s += diff < 0 ? BigInt(-diff) : diff;
    }
    return Rational(s, 2 * mu.denominator() * order);
}

double tv_to_uniform(const DenseDistribution& mu) {
    if (mu.exact()) return to_double(exact_tv_to_uniform(mu));
    return tv_distance(mu, DenseDistribution::uniform(mu.group(), false));
}

Rational exact_sep_distance(const DenseDistribution& mu) {
    const auto& nums = mu.numerators();
    const BigInt low = *std::min_element(nums.begin(), nums.end());
    return 1 - Rational(low * BigInt(mu.size()), mu.denominator());
}

double sep_distance(const DenseDistribution& mu) {
    if (mu.exact()) return to_double(exact_sep_distance(mu));
    double low = 1.0;
    for (double v : mu.values()) low = std::min(low, v);
    return std::max(0.0, 1.0 - low * static_cast<double>(mu.size()));
}

std::vector<CurvePoint> distance_curve(const ShuffleSpec& spec, int t_max, const EngineCaps& caps) {
    const auto model = TransitionModel::build(spec, caps);
    auto d = DenseDistribution::delta_identity(model.group(), model.exact());
    std::vector<CurvePoint> curve;
    for (int t = 0; t <= t_max; ++t) {
        CurvePoint p;
        p.t = t;
        if (d.exact()) {
            p.exact_tv = exact_tv_to_uniform(d);
            p.exact_sep = exact_sep_distance(d);
            p.tv = to_double(*p.exact_tv);
            p.sep = to_double(*p.exact_sep);
        } else {
            p.tv = tv_to_uniform(d);
            p.sep = sep_distance(d);
        }
        curve.push_back(std::move(p));
        if (t < t_max) d = step(d, model);
    }
    return curve;
}

std::optional<int> mixing_time(const ShuffleSpec& spec, double eps, Distance distance, int t_max,
                               const EngineCaps& caps) {
    if (!(eps >= 0.0 && eps <= 1.0)) throw std::invalid_argument("eps must lie in [0,1]");
    const auto model = TransitionModel::build(spec, caps);
    auto d = DenseDistribution::delta_identity(model.group(), model.exact());
    const Rational exact_eps(eps);
    for (int t = 0; t <= t_max; ++t) {
        bool within;
        if (d.exact())
            within = (distance == Distance::tv ? exact_tv_to_uniform(d) : exact_sep_distance(d)) <= exact_eps;
        else
            within = (distance == Distance::tv ? tv_to_uniform(d) : sep_distance(d)) <= eps;
        if (within) return t;
        if (t < t_max) d = step(d, model);
    }
    return std::nullopt;
}

std::vector<std::vector<Rational>> exact_transition_matrix(const ShuffleSpec& spec, const EngineCaps& caps) {
    if (!spec.exact()) throw std::domain_error("shuffle weights are not rational");
    const auto model = TransitionModel::build(spec, caps);
    const std::size_t size = model.group().order();
    std::vector<std::vector<Rational>> m(size, std::vector<Rational>(size));
    for (const auto& move : model.moves())
        for (std::size_t g = 0; g < size; ++g) m[g][move.target[g]] += move.probability;
    return m;
}

Eigen::MatrixXd transition_matrix(const ShuffleSpec& spec, const EngineCaps& caps) {
    const auto model = TransitionModel::build(spec, caps);
    const auto size = static_cast<Eigen::Index>(model.group().order());
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(size, size);
    for (const auto& move : model.moves())
        for (Eigen::Index g = 0; g < size; ++g) m(g, move.target[static_cast<std::size_t>(g)]) += move.real_probability;
    return m;
}

std::vector<double> brute_force_spectrum(const ShuffleSpec& spec, const EngineCaps& caps) {
    if (!spec.reversible()) throw NotReversible("spectrum oracle needs a reversible shuffle");
    if (group_of(spec).order() > caps.spectrum_order) throw CapExceeded("spectrum oracle group size cap exceeded");
    const Eigen::MatrixXd m = transition_matrix(spec, caps);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver did not converge");
    std::vector<double> values(solver.eigenvalues().data(), solver.eigenvalues().data() + solver.eigenvalues().size());
    std::sort(values.begin(), values.end(), std::greater<>());
    return values;
}

std::vector<std::pair<double, int>> group_eigenvalues(const std::vector<double>& sorted_desc, double tol) {
    std::vector<std::pair<double, int>> out;
    for (double v : sorted_desc) {
        if (!out.empty() && std::fabs(out.back().first - v) <= tol)
            ++out.back().second;
        else
            out.emplace_back(v, 1);
    }
    return out;
}

}  // namespace shuffle_lab
