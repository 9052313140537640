#pragma once

#include "shuffle_lab/group.hpp"
#include "shuffle_lab/numeric.hpp"

#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace shuffle_lab {

using Rng = std::mt19937_64;

// Deterministic generator for replica `stream` of a run seeded with `seed`.
Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

enum class ShuffleKind {
    RT,
    TTR,
    RTR,
    OST,
    OST_biased,
    B_RT,
    B_OST,
    B_OST_biased,
    cyclic_simple,
    cyclic_lazy,
};

std::string kind_name(ShuffleKind kind);
ShuffleKind parse_kind(const std::string& name);

// Right-hand weight w(j): either j^alpha or an explicit table w(1..n).
class Weight {
public:
    static Weight power(double alpha);
    static Weight table(std::vector<Rational> values);
    static Weight real_table(std::vector<double> values);

    // Integer exponents and rational tables are exact.
    bool exact() const;
    std::optional<double> exponent() const;
    // Number of table entries, or nullopt for a power law.
    std::optional<int> table_size() const;

    Rational exact_at(int j) const;
    double at(int j) const;
    Rational exact_total(int n) const;  // N_w(n) = w(1) + ... + w(n)
    double total(int n) const;

    const std::variant<double, std::vector<Rational>, std::vector<double>>& data() const { return data_; }

private:
    explicit Weight(std::variant<double, std::vector<Rational>, std::vector<double>> data) : data_(std::move(data)) {}
    std::variant<double, std::vector<Rational>, std::vector<double>> data_;
};

class ShuffleSpec {
public:
    ShuffleSpec(ShuffleKind kind, int n, std::optional<Weight> weight = std::nullopt);

    ShuffleKind kind() const { return kind_; }
    int n() const { return n_; }
    const std::optional<Weight>& weight() const { return weight_; }

    GroupKind group() const;
    bool biased() const;
    bool exact() const;
    // pmf(g) = pmf(g^-1) for every g.
    bool reversible() const;

    // Right-hand weight, with w = 1 for unbiased one-sided kinds.
    Rational exact_weight(int j) const;
    double weight_at(int j) const;
    Rational exact_weight_total() const;
    double weight_total() const;

    std::string to_string() const;

private:
    ShuffleKind kind_;
    int n_;
    std::optional<Weight> weight_;
};

// JSON object {"kind", "n", "alpha"?, "weights"?}.
std::string to_json(const ShuffleSpec& spec);
ShuffleSpec spec_from_json(const std::string& text);

template <class Element, class Scalar>
using Support = std::vector<std::pair<Element, Scalar>>;

// Positive-mass elements in canonical group order.
Support<Permutation, Rational> symmetric_support(const ShuffleSpec& spec);
Support<Permutation, double> symmetric_support_real(const ShuffleSpec& spec);
Support<SignedPermutation, Rational> signed_support(const ShuffleSpec& spec);
Support<SignedPermutation, double> signed_support_real(const ShuffleSpec& spec);

Rational pmf(const ShuffleSpec& spec, const Permutation& g);
Rational pmf(const ShuffleSpec& spec, const SignedPermutation& g);
double pmf_real(const ShuffleSpec& spec, const Permutation& g);
double pmf_real(const ShuffleSpec& spec, const SignedPermutation& g);

// Distribution on Z_n as (residue, probability) pairs sorted by residue.
std::vector<std::pair<int, Rational>> cyclic_walk_pmf(const ShuffleSpec& spec);

// Mass of the identity element for any kind.
Rational identity_mass(const ShuffleSpec& spec);

// Random-to-top: the time reversal of top-to-random, RTT(g) = TTR(g^-1).
Support<Permutation, Rational> random_to_top_support(int n);

// (P * Q)(g) = sum_h P(g h^-1) Q(h): a draw from Q followed by a draw from P.
template <class Element>
Support<Element, Rational> convolve(const Support<Element, Rational>& p, const Support<Element, Rational>& q);

// One draw of the two-hand procedure. For the one-sided kinds `right` is the
// right-hand position and `left` the left-hand one; `flip` is the B_n coin.
// For TTR, `right` is the insertion position; for RTR the card moves from
// `left` to `right`.
struct HandDraw {
    int left = 1;
    int right = 1;
    bool flip = false;
};

class ShuffleSampler {
public:
    explicit ShuffleSampler(ShuffleSpec spec);

    const ShuffleSpec& spec() const { return spec_; }
    HandDraw draw(Rng& rng) const;
    int draw_right(Rng& rng) const;

    Permutation to_permutation(const HandDraw& d) const;
    SignedPermutation to_signed(const HandDraw& d) const;

    Permutation sample_symmetric(Rng& rng) const { return to_permutation(draw(rng)); }
    SignedPermutation sample_signed(Rng& rng) const { return to_signed(draw(rng)); }

private:
    ShuffleSpec spec_;
    std::vector<double> cumulative_;  // right-hand cumulative weights
};

// Elementary shapes used by the definitions.
Permutation top_to_position(int n, int k);            // card on top moves to position k
Permutation move_card(int n, int from, int to);        // card at `from` moves to `to`
SignedPermutation flip_pair(int n, int i, int j);      // xi_i xi_j, or xi_i when i == j

template <class Element>
Support<Element, Rational> convolve(const Support<Element, Rational>& p, const Support<Element, Rational>& q) {
    std::map<Element, Rational> acc;
    for (const auto& [h, qh] : q)
        for (const auto& [a, pa] : p) acc[compose(a, h)] += pa * qh;
    Support<Element, Rational> out;
    for (auto& [g, v] : acc)
        if (v != 0) out.emplace_back(g, v);
    return out;
}

}  // namespace shuffle_lab
