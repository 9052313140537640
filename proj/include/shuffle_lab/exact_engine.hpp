#pragma once

#include "shuffle_lab/group.hpp"
#include "shuffle_lab/numeric.hpp"
#include "shuffle_lab/shuffles.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <vector>

namespace shuffle_lab {

struct GroupDescriptor {
    GroupKind kind = GroupKind::symmetric;
    int n = 1;

    std::size_t order() const;
    bool operator==(const GroupDescriptor&) const = default;
};

GroupDescriptor group_of(const ShuffleSpec& spec);

struct EngineCaps {
    EnumerationCaps enumeration{};
    std::size_t spectrum_order = 5040;
};

// Left multiplication by each support element, as index tables over the
// canonical group order.
class TransitionModel {
public:
    struct Move {
        Rational probability;
        BigInt numerator;  // probability * common_denominator()
        double real_probability = 0.0;
        std::vector<std::uint32_t> target;  // target[h] = index(g * h)
    };

    static TransitionModel build(const ShuffleSpec& spec, const EngineCaps& caps = {});

    const GroupDescriptor& group() const { return group_; }
    const std::vector<Move>& moves() const { return moves_; }
    bool exact() const { return exact_; }
    const BigInt& common_denominator() const { return denominator_; }
    std::size_t identity_index() const { return 0; }

private:
    GroupDescriptor group_;
    std::vector<Move> moves_;
    bool exact_ = true;
    BigInt denominator_ = 1;
};

// Probability vector over the canonical group order. Exact mode stores
// integer numerators over one shared denominator.
class DenseDistribution {
public:
    static DenseDistribution delta_identity(const GroupDescriptor& group, bool exact = true);
    static DenseDistribution uniform(const GroupDescriptor& group, bool exact = true);
    static DenseDistribution from_exact(const GroupDescriptor& group, const std::vector<Rational>& values);

    const GroupDescriptor& group() const { return group_; }
    std::size_t size() const { return exact_ ? numerators_.size() : values_.size(); }
    bool exact() const { return exact_; }

    Rational exact_at(std::size_t i) const;
    double at(std::size_t i) const;
    Rational exact_total() const;
    double total() const;

    const std::vector<BigInt>& numerators() const { return numerators_; }
    const BigInt& denominator() const { return denominator_; }
    const std::vector<double>& values() const { return values_; }

private:
    friend DenseDistribution step(const DenseDistribution& d, const TransitionModel& model);
    DenseDistribution() = default;
    void normalize();

    GroupDescriptor group_;
    bool exact_ = true;
    std::vector<BigInt> numerators_;
    BigInt denominator_ = 1;
    std::vector<double> values_;
};

DenseDistribution step(const DenseDistribution& d, const TransitionModel& model);
DenseDistribution step(const DenseDistribution& d, const ShuffleSpec& spec);

// Distribution after t steps from the identity.
DenseDistribution evolve(const TransitionModel& model, int t);

double tv_distance(const DenseDistribution& mu, const DenseDistribution& nu);
Rational exact_tv_distance(const DenseDistribution& mu, const DenseDistribution& nu);
// Separation from the uniform distribution.
double sep_distance(const DenseDistribution& mu);
Rational exact_sep_distance(const DenseDistribution& mu);
double tv_to_uniform(const DenseDistribution& mu);
Rational exact_tv_to_uniform(const DenseDistribution& mu);

enum class Distance { tv, sep };

struct CurvePoint {
    int t = 0;
    double tv = 0.0;
    double sep = 0.0;
    std::optional<Rational> exact_tv;
    std::optional<Rational> exact_sep;
};

std::vector<CurvePoint> distance_curve(const ShuffleSpec& spec, int t_max, const EngineCaps& caps = {});

// Smallest t <= t_max with d(t) <= eps; compared exactly in exact mode.
std::optional<int> mixing_time(const ShuffleSpec& spec, double eps, Distance distance, int t_max,
                               const EngineCaps& caps = {});

// Row g, column h holds pmf(h g^-1).
std::vector<std::vector<Rational>> exact_transition_matrix(const ShuffleSpec& spec, const EngineCaps& caps = {});
Eigen::MatrixXd transition_matrix(const ShuffleSpec& spec, const EngineCaps& caps = {});

class NotReversible : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// All eigenvalues of the symmetric transition matrix, sorted descending.
std::vector<double> brute_force_spectrum(const ShuffleSpec& spec, const EngineCaps& caps = {});

// Groups a descending list into (value, multiplicity) with the given tolerance.
std::vector<std::pair<double, int>> group_eigenvalues(const std::vector<double>& sorted_desc, double tol = 1e-9);

}  // namespace shuffle_lab
