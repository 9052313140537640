#include "shuffle_lab/shuffles.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace shuffle_lab {

namespace {

const std::vector<std::pair<ShuffleKind, std::string>>& kind_names() {
    static const std::vector<std::pair<ShuffleKind, std::string>> names = {
        {ShuffleKind::RT, "RT"},
        {ShuffleKind::TTR, "TTR"},
        {ShuffleKind::RTR, "RTR"},
        {ShuffleKind::OST, "OST"},
        {ShuffleKind::OST_biased, "OST_biased"},
        {ShuffleKind::B_RT, "B_RT"},
        {ShuffleKind::B_OST, "B_OST"},
        {ShuffleKind::B_OST_biased, "B_OST_biased"},
        {ShuffleKind::cyclic_simple, "cyclic_simple"},
        {ShuffleKind::cyclic_lazy, "cyclic_lazy"},
    };
    return names;
}

bool is_integral(double x) { return std::isfinite(x) && std::floor(x) == x && std::fabs(x) <= 64; }

}  // namespace

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    return Rng(seq);
}

std::string kind_name(ShuffleKind kind) {
    for (const auto& [k, name] : kind_names())
        if (k == kind) return name;
    throw std::invalid_argument("unknown shuffle kind");
}

ShuffleKind parse_kind(const std::string& name) {
    for (const auto& [k, n] : kind_names())
        if (n == name) return k;
    throw std::invalid_argument("unknown shuffle kind: " + name);
}

Weight Weight::power(double alpha) {
    if (!std::isfinite(alpha)) throw std::invalid_argument("weight exponent must be finite");
    return Weight(alpha);
}

Weight Weight::table(std::vector<Rational> values) {
    for (const auto& v : values)
        if (v <= 0) throw std::invalid_argument("weights must be strictly positive");
    return Weight(std::move(values));
}

Weight Weight::real_table(std::vector<double> values) {
    for (double v : values)
        if (!(v > 0) || !std::isfinite(v)) throw std::invalid_argument("weights must be strictly positive");
    return Weight(std::move(values));
}

bool Weight::exact() const {
    if (const auto* a = std::get_if<double>(&data_)) return is_integral(*a);
    return std::holds_alternative<std::vector<Rational>>(data_);
}

std::optional<double> Weight::exponent() const {
    if (const auto* a = std::get_if<double>(&data_)) return *a;
    return std::nullopt;
}

std::optional<int> Weight::table_size() const {
    if (const auto* t = std::get_if<std::vector<Rational>>(&data_)) return static_cast<int>(t->size());
    if (const auto* t = std::get_if<std::vector<double>>(&data_)) return static_cast<int>(t->size());
    return std::nullopt;
}

Rational Weight::exact_at(int j) const {
    if (const auto* a = std::get_if<double>(&data_)) {
        if (!is_integral(*a)) throw std::domain_error("non-integer weight exponent has no exact value");
        return rational_pow(Rational(j), static_cast<int>(*a));
    }
    if (const auto* t = std::get_if<std::vector<Rational>>(&data_)) return t->at(static_cast<std::size_t>(j - 1));
    throw std::domain_error("real weight table has no exact value");
}

double Weight::at(int j) const {
    if (const auto* a = std::get_if<double>(&data_)) return std::pow(static_cast<double>(j), *a);
    if (const auto* t = std::get_if<std::vector<Rational>>(&data_)) return to_double(t->at(static_cast<std::size_t>(j - 1)));
    return std::get<std::vector<double>>(data_).at(static_cast<std::size_t>(j - 1));
}

Rational Weight::exact_total(int n) const {
    Rational s = 0;
    for (int j = 1; j <= n; ++j) s += exact_at(j);
    return s;
}

double Weight::total(int n) const {
    CompensatedSum s;
    for (int j = 1; j <= n; ++j) s.add(at(j));
    return s.value();
}

ShuffleSpec::ShuffleSpec(ShuffleKind kind, int n, std::optional<Weight> weight)
    : kind_(kind), n_(n), weight_(std::move(weight)) {
    if (n < 1) throw std::invalid_argument("deck size must be at least 1");
    if (biased() != weight_.has_value())
        throw std::invalid_argument("a weight is required exactly for the biased kinds");
    if (weight_) {
        if (auto size = weight_->table_size(); size && *size < n)
            throw std::invalid_argument("weight table shorter than the deck");
    }
}

GroupKind ShuffleSpec::group() const {
    switch (kind_) {
        case ShuffleKind::B_RT:
        case ShuffleKind::B_OST:
        case ShuffleKind::B_OST_biased:
            return GroupKind::hyperoctahedral;
        case ShuffleKind::cyclic_simple:
        case ShuffleKind::cyclic_lazy:
            return GroupKind::cyclic;
        default:
            return GroupKind::symmetric;
    }
}

bool ShuffleSpec::biased() const { return kind_ == ShuffleKind::OST_biased || kind_ == ShuffleKind::B_OST_biased; }

bool ShuffleSpec::exact() const { return !weight_ || weight_->exact(); }

bool ShuffleSpec::reversible() const { return kind_ != ShuffleKind::TTR; }

Rational ShuffleSpec::exact_weight(int j) const { return weight_ ? weight_->exact_at(j) : Rational(1); }

double ShuffleSpec::weight_at(int j) const { return weight_ ? weight_->at(j) : 1.0; }

Rational ShuffleSpec::exact_weight_total() const { return weight_ ? weight_->exact_total(n_) : Rational(n_); }

double ShuffleSpec::weight_total() const { return weight_ ? weight_->total(n_) : static_cast<double>(n_); }

std::string ShuffleSpec::to_string() const {
    std::string s = kind_name(kind_) + "(n=" + std::to_string(n_);
    if (weight_) {
        if (auto a = weight_->exponent())
            s += ",alpha=" + (is_integral(*a) ? std::to_string(static_cast<int>(*a)) : to_decimal_string(*a, 6));
        else
            s += ",table";
    }
    return s + ")";
}

std::string to_json(const ShuffleSpec& spec) {
    nlohmann::ordered_json j;
    j["kind"] = kind_name(spec.kind());
    j["n"] = spec.n();
    if (const auto& w = spec.weight()) {
        if (auto a = w->exponent()) {
            if (is_integral(*a))
                j["alpha"] = static_cast<int>(*a);
            else
                j["alpha"] = *a;
        } else if (const auto* t = std::get_if<std::vector<Rational>>(&w->data())) {
            auto arr = nlohmann::ordered_json::array();
            for (const auto& v : *t) arr.push_back(to_fraction_string(v));
            j["weights"] = arr;
        } else {
            j["weights"] = std::get<std::vector<double>>(w->data());
        }
    }
    return j.dump();
}

ShuffleSpec spec_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("invalid shuffle JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("kind") || !j.contains("n"))
        throw std::invalid_argument("shuffle JSON needs \"kind\" and \"n\"");
    const ShuffleKind kind = parse_kind(j.at("kind").get<std::string>());
    const int n = j.at("n").get<int>();
    if (j.contains("alpha") && j.contains("weights"))
        throw std::invalid_argument("give either \"alpha\" or \"weights\", not both");
    std::optional<Weight> weight;
    if (j.contains("alpha")) weight = Weight::power(j.at("alpha").get<double>());
    if (j.contains("weights")) {
        const auto& arr = j.at("weights");
        if (!arr.is_array()) throw std::invalid_argument("\"weights\" must be an array");
        bool exact = true;
        for (const auto& v : arr)
            if (v.is_number_float() && !is_integral(v.get<double>())) exact = false;
        if (exact) {
            std::vector<Rational> values;
            for (const auto& v : arr) {
                if (v.is_string())
                    values.emplace_back(v.get<std::string>());
                else if (v.is_number())
                    values.emplace_back(static_cast<long long>(v.get<double>()));
                else
                    throw std::invalid_argument("weights must be numbers or \"p/q\" strings");
            }
            weight = Weight::table(std::move(values));
        } else {
            std::vector<double> values;
            for (const auto& v : arr) values.push_back(v.get<double>());
            weight = Weight::real_table(std::move(values));
        }
    }
    return ShuffleSpec(kind, n, std::move(weight));
}

Permutation top_to_position(int n, int k) {
    if (k == 1) return Permutation::identity(n);
    std::vector<int> cycle{1};
    for (int m = k; m >= 2; --m) cycle.push_back(m);
    return Permutation::from_cycles(n, {cycle});
}

Permutation move_card(int n, int from, int to) {
    if (from == to) return Permutation::identity(n);
    std::vector<int> cycle{from};
    if (from < to)
        for (int m = to; m > from; --m) cycle.push_back(m);
    else
        for (int m = to; m < from; ++m) cycle.push_back(m);
    return Permutation::from_cycles(n, {cycle});
}

SignedPermutation flip_pair(int n, int i, int j) {
    if (i == j) return SignedPermutation::flip(n, i);
    return compose(SignedPermutation::flip(n, i), SignedPermutation::flip(n, j));
}

namespace {

template <class Scalar>
Scalar weight_of(const ShuffleSpec& spec, int j) {
    if constexpr (std::is_same_v<Scalar, Rational>)
        return spec.exact_weight(j);
    else
        return spec.weight_at(j);
}

template <class Scalar>
Scalar weight_total_of(const ShuffleSpec& spec) {
    if constexpr (std::is_same_v<Scalar, Rational>)
        return spec.exact_weight_total();
    else
        return spec.weight_total();
}

Permutation swap_or_identity(int n, int i, int j) {
    return i == j ? Permutation::identity(n) : Permutation::transposition(n, i, j);
}

template <class Element, class Scalar>
Support<Element, Scalar> flatten(std::map<Element, Scalar>& acc) {
    Support<Element, Scalar> out;
    out.reserve(acc.size());
    for (auto& [g, v] : acc)
        if (v != 0) out.emplace_back(g, v);
    return out;
}

template <class Scalar>
Support<Permutation, Scalar> build_symmetric(const ShuffleSpec& spec) {
    if (spec.group() != GroupKind::symmetric) throw std::invalid_argument("shuffle does not act on S_n");
    if constexpr (std::is_same_v<Scalar, Rational>)
        if (!spec.exact()) throw std::domain_error("shuffle weights are not rational");
    const int n = spec.n();
    const Scalar one(1), size(n);
    std::map<Permutation, Scalar> acc;
    switch (spec.kind()) {
        case ShuffleKind::RT:
            for (int l = 1; l <= n; ++l)
                for (int r = 1; r <= n; ++r) acc[swap_or_identity(n, l, r)] += one / (size * size);
            break;
        case ShuffleKind::TTR:
            for (int k = 1; k <= n; ++k) acc[top_to_position(n, k)] += one / size;
            break;
        case ShuffleKind::RTR:
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) acc[move_card(n, i, j)] += one / (size * size);
            break;
        case ShuffleKind::OST:
        case ShuffleKind::OST_biased: {
            const Scalar total = weight_total_of<Scalar>(spec);
            for (int j = 1; j <= n; ++j) {
                const Scalar mass = weight_of<Scalar>(spec, j) / (total * Scalar(j));
                for (int i = 1; i <= j; ++i) acc[swap_or_identity(n, i, j)] += mass;
            }
            break;
        }
        default:
            throw std::invalid_argument("unsupported kind for S_n");
    }
    return flatten(acc);
}

template <class Scalar>
Support<SignedPermutation, Scalar> build_signed(const ShuffleSpec& spec) {
    if (spec.group() != GroupKind::hyperoctahedral) throw std::invalid_argument("shuffle does not act on B_n");
    if constexpr (std::is_same_v<Scalar, Rational>)
        if (!spec.exact()) throw std::domain_error("shuffle weights are not rational");
    const int n = spec.n();
    const Scalar half = Scalar(1) / Scalar(2);
    std::map<SignedPermutation, Scalar> acc;
    auto add_pair = [&](int i, int j, const Scalar& mass) {
        const auto base = SignedPermutation::from_permutation(swap_or_identity(n, i, j));
        acc[base] += mass * half;
        acc[compose(flip_pair(n, i, j), base)] += mass * half;
    };
    if (spec.kind() == ShuffleKind::B_RT) {
        const Scalar mass = Scalar(1) / Scalar(n * n);
        for (int l = 1; l <= n; ++l)
            for (int r = 1; r <= n; ++r) add_pair(l, r, mass);
    } else {
        const Scalar total = weight_total_of<Scalar>(spec);
        for (int j = 1; j <= n; ++j) {
            const Scalar mass = weight_of<Scalar>(spec, j) / (total * Scalar(j));
            for (int i = 1; i <= j; ++i) add_pair(i, j, mass);
        }
    }
    return flatten(acc);
}

template <class Element, class Scalar>
Scalar lookup(const Support<Element, Scalar>& support, const Element& g) {
    for (const auto& [h, v] : support)
        if (h == g) return v;
    return Scalar(0);
}

}  // namespace

Support<Permutation, Rational> symmetric_support(const ShuffleSpec& spec) { return build_symmetric<Rational>(spec); }
Support<Permutation, double> symmetric_support_real(const ShuffleSpec& spec) { return build_symmetric<double>(spec); }
Support<SignedPermutation, Rational> signed_support(const ShuffleSpec& spec) { return build_signed<Rational>(spec); }
Support<SignedPermutation, double> signed_support_real(const ShuffleSpec& spec) { return build_signed<double>(spec); }

Rational pmf(const ShuffleSpec& spec, const Permutation& g) {
    if (g.size() != spec.n()) throw std::invalid_argument("element size does not match the deck");
    return lookup(symmetric_support(spec), g);
}

Rational pmf(const ShuffleSpec& spec, const SignedPermutation& g) {
    if (g.size() != spec.n()) throw std::invalid_argument("element size does not match the deck");
    return lookup(signed_support(spec), g);
}

double pmf_real(const ShuffleSpec& spec, const Permutation& g) {
    if (g.size() != spec.n()) throw std::invalid_argument("element size does not match the deck");
    return lookup(symmetric_support_real(spec), g);
}

double pmf_real(const ShuffleSpec& spec, const SignedPermutation& g) {
    if (g.size() != spec.n()) throw std::invalid_argument("element size does not match the deck");
    return lookup(signed_support_real(spec), g);
}

std::vector<std::pair<int, Rational>> cyclic_walk_pmf(const ShuffleSpec& spec) {
    const int n = spec.n();
    std::map<int, Rational> acc;
    switch (spec.kind()) {
        case ShuffleKind::cyclic_simple:
            acc[1 % n] += Rational(1, 2);
            acc[(n - 1) % n] += Rational(1, 2);
            break;
        case ShuffleKind::cyclic_lazy:
            acc[0] += Rational(1, 2);
            acc[1 % n] += Rational(1, 4);
            acc[(n - 1) % n] += Rational(1, 4);
            break;
        default:
            throw std::invalid_argument("not a cyclic walk");
    }
    return {acc.begin(), acc.end()};
}

Rational identity_mass(const ShuffleSpec& spec) {
    switch (spec.group()) {
        case GroupKind::symmetric:
            return pmf(spec, Permutation::identity(spec.n()));
        case GroupKind::hyperoctahedral:
            return pmf(spec, SignedPermutation::identity(spec.n()));
        case GroupKind::cyclic:
            for (const auto& [r, p] : cyclic_walk_pmf(spec))
                if (r == 0) return p;
            return 0;
    }
    return 0;
}

Support<Permutation, Rational> random_to_top_support(int n) {
    std::map<Permutation, Rational> acc;
    for (int k = 1; k <= n; ++k) acc[inverse(top_to_position(n, k))] += Rational(1, n);
    return flatten(acc);
}

ShuffleSampler::ShuffleSampler(ShuffleSpec spec) : spec_(std::move(spec)) {
    if (spec_.group() == GroupKind::cyclic) throw std::invalid_argument("cyclic walks have no card sampler");
    if (spec_.biased()) {
        CompensatedSum s;
        for (int j = 1; j <= spec_.n(); ++j) {
            s.add(spec_.weight_at(j));
            cumulative_.push_back(s.value());
        }
    }
}

int ShuffleSampler::draw_right(Rng& rng) const {
    const int n = spec_.n();
    if (cumulative_.empty()) return std::uniform_int_distribution<int>(1, n)(rng);
    const double u = std::uniform_real_distribution<double>(0.0, cumulative_.back())(rng);
    const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    return std::min(n, static_cast<int>(it - cumulative_.begin()) + 1);
}

HandDraw ShuffleSampler::draw(Rng& rng) const {
    const int n = spec_.n();
    HandDraw d;
    switch (spec_.kind()) {
        case ShuffleKind::OST:
        case ShuffleKind::OST_biased:
        case ShuffleKind::B_OST:
        case ShuffleKind::B_OST_biased:
            d.right = draw_right(rng);
            d.left = std::uniform_int_distribution<int>(1, d.right)(rng);
            break;
        case ShuffleKind::TTR:
            d.left = 1;
            d.right = std::uniform_int_distribution<int>(1, n)(rng);
            break;
        default:
            d.left = std::uniform_int_distribution<int>(1, n)(rng);
            d.right = std::uniform_int_distribution<int>(1, n)(rng);
            break;
    }
    if (spec_.group() == GroupKind::hyperoctahedral) d.flip = std::bernoulli_distribution(0.5)(rng);
    return d;
}

Permutation ShuffleSampler::to_permutation(const HandDraw& d) const {
    const int n = spec_.n();
    switch (spec_.kind()) {
        case ShuffleKind::TTR:
            return top_to_position(n, d.right);
        case ShuffleKind::RTR:
            return move_card(n, d.left, d.right);
        case ShuffleKind::RT:
        case ShuffleKind::OST:
        case ShuffleKind::OST_biased:
            return swap_or_identity(n, d.left, d.right);
        default:
            throw std::invalid_argument("shuffle does not act on S_n");
    }
}

SignedPermutation ShuffleSampler::to_signed(const HandDraw& d) const {
    if (spec_.group() != GroupKind::hyperoctahedral) throw std::invalid_argument("shuffle does not act on B_n");
    const int n = spec_.n();
    const auto base = SignedPermutation::from_permutation(swap_or_identity(n, d.left, d.right));
    return d.flip ? compose(flip_pair(n, d.left, d.right), base) : base;
}

}  // namespace shuffle_lab
