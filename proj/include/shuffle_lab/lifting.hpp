#pragma once

#include "shuffle_lab/group.hpp"
#include "shuffle_lab/numeric.hpp"
#include "shuffle_lab/shuffles.hpp"
#include "shuffle_lab/spectra.hpp"
#include "shuffle_lab/tableaux.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace shuffle_lab {

enum class Sign { none, plus, minus };

struct Letter {
    int value = 0;
    Sign sign = Sign::none;

    auto operator<=>(const Letter&) const = default;
};

// Words are stored as byte strings: a -> a, a+ -> 32 + a, a- -> 64 + a.
class Word {
public:
    static constexpr int max_letter = 31;

    Word() = default;
    explicit Word(const std::vector<Letter>& letters);
    static Word from_code(std::string code);
    // "232", "1+24-3+3", or space/comma separated tokens such as "10 2+ 3".
    static Word parse(const std::string& text);

    int size() const { return static_cast<int>(code_.size()); }
    Letter at(int position) const;  // 1-based
    const std::string& code() const { return code_; }
    bool has_signed() const;
    std::string to_string() const;

    auto operator<=>(const Word&) const = default;

private:
    std::string code_;
};

char encode_letter(Letter letter);
Letter decode_letter(char code);

// Counts of each unsigned letter and of each signed letter by absolute value.
struct Evaluation {
    std::vector<int> unsigned_counts;  // index = letter value
    std::vector<int> signed_counts;
};
Evaluation evaluation(const Word& w);

enum class WordMode { plain, signed_letters };

// Sparse exact linear combination of words of one length and one evaluation.
class WordVector {
public:
    explicit WordVector(WordMode mode = WordMode::plain) : mode_(mode) {}

    static WordVector basis(const Word& w, WordMode mode = WordMode::plain);
    // The empty word omega with coefficient 1.
    static WordVector empty_word(WordMode mode = WordMode::plain);

    WordMode mode() const { return mode_; }
    const std::map<std::string, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    // Common word length, or -1 for the zero vector.
    int length() const;
    Rational coefficient(const Word& w) const;

    void add_term(const Word& w, const Rational& c);

    WordVector& operator+=(const WordVector& other);
    WordVector& operator-=(const WordVector& other);
    WordVector& operator*=(const Rational& c);

    // "1/2*12 - 1/2*21", "0" for the zero vector.
    std::string to_string() const;
    // One line per term: coefficient, tab, word.
    std::string dump() const;

    bool operator==(const WordVector& other) const { return mode_ == other.mode_ && terms_ == other.terms_; }

private:
    WordMode mode_;
    std::map<std::string, Rational> terms_;
};

WordVector operator+(WordVector a, const WordVector& b);
WordVector operator-(WordVector a, const WordVector& b);
WordVector operator*(const Rational& c, WordVector v);

// Place-permutation action: the letter at position i moves to position sigma(i);
// a signed letter also changes sign when sigma(i) < 0. Errors: length or mode mismatch.
WordVector act(const Permutation& sigma, const WordVector& v);
WordVector act(const SignedPermutation& sigma, const WordVector& v);

enum class Flavor { plain, unsigned_part, signed_part };

// Appends one letter to every word.
WordVector append(const WordVector& v, Letter letter);
// Sum over positions holding `from`, each replaced by `to`.
WordVector substitute(const WordVector& v, Letter from, Letter to);

// Phi_a: plain and unsigned append a; signed maps w to w a+ - w a-.
WordVector adding(const WordVector& v, int a, Flavor flavor = Flavor::plain);
// Theta_{b,a}: plain and unsigned act on unsigned letters; signed is
// (b+ -> a+ plus b- -> a-) minus (b+ -> a- plus b- -> a+).
WordVector switching(const WordVector& v, int b, int a, Flavor flavor = Flavor::plain);
// Theta_{b+-,a}: signed occurrences of b replaced by the unsigned a.
WordVector switching_signed_to_unsigned(const WordVector& v, int b, int a);
// sh_a: a inserted at each of the length+1 positions.
WordVector shuffling(const WordVector& v, int a);

// Lifting operator into S^{lambda + e_row}; v must have evaluation lambda.
// Errors: lambda + e_row not a partition, evaluation mismatch.
WordVector kappa(const WordVector& v, const Partition& lambda, int row);
// B_n lifting operator adding a box to row `row` of component `component`.
WordVector kappa(const WordVector& v, const BiPartition& lambda, int row, int component);

// Normalisation of the group-algebra element: n for OST, N_w(n) for the
// weighted one-sided kinds, n^2 for RT and RTR, 2n^2 for B_RT.
Rational algebra_scale(const ShuffleSpec& spec);
// Exact action of algebra_scale(spec) * sum_g pmf(g) g. Errors: non-rational
// weights, cyclic kinds, length or mode mismatch.
WordVector apply_shuffle_algebra(const WordVector& v, const ShuffleSpec& spec);

using LiftedIndex = std::variant<StandardTableau, BiTableau>;

struct LiftedVector {
    LiftedIndex tableau;
    WordVector vector;
    Rational eigenvalue;  // eigenvalue of the transition operator
};

struct LiftingCaps {
    int symmetric = 8;
    int hyperoctahedral = 6;
};

// One lifted eigenvector per standard (bi-)tableau of the shape, in enumeration order.
// Kinds: OST, OST_biased and RT on partitions; B_RT, B_OST and B_OST_biased on bi-partitions.
std::vector<LiftedVector> build_eigenbasis(const Partition& lambda, const ShuffleSpec& spec, const LiftingCaps& caps = {});
std::vector<LiftedVector> build_eigenbasis(const BiPartition& lambda, const ShuffleSpec& spec, const LiftingCaps& caps = {});

struct EigenCheck {
    bool passed = false;
    std::string witness;

    explicit operator bool() const { return passed; }
};

// Exact test of apply_shuffle_algebra(v) == algebra_scale * claimed * v.
EigenCheck verify_eigenvector(const WordVector& v, const ShuffleSpec& spec, const Rational& claimed);

// Rank of a family of word vectors over the rationals.
std::size_t rank(const std::vector<WordVector>& vectors);

// For every shape of spec.n(): each basis vector is nonzero and passes
// verify_eigenvector, its eigenvalue equals the tableau formula, the vectors
// of a shape are independent, and the eigenvalue multiset equals the catalog.
std::vector<CheckReport> lifting_checks(const ShuffleSpec& spec, int threads = 0, const LiftingCaps& caps = {});

// The worked small lifts: Phi_1 of 1, kappa_2 of 1, sh_1 of 12 - 21 as a
// random-to-random eigenvector, and the two B_2 lifts of 11+ - 11-, each
// compared term by term and checked as an eigenvector.
std::vector<CheckReport> reference_lift_checks();

// Random linear combination of rearrangements of one random word of length n.
WordVector random_word_vector(int n, WordMode mode, Rng& rng, int terms = 4);

// Master equations, adding/switching commutation and switching equivariance,
// each tested on `trials` random word vectors of length n.
std::vector<CheckReport> operator_identity_checks(int n, int trials, std::uint64_t seed);

}  // namespace shuffle_lab
