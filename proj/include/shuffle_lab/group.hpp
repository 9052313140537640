#pragma once

#include "shuffle_lab/partition.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace shuffle_lab {

// Element of S_n in one-line form: card i sits in position images[i].
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    // Product of cycles, each cycle written a -> b -> c -> a.
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);
    static Permutation transposition(int n, int i, int j);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int card) const { return images_[static_cast<std::size_t>(card - 1)]; }
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const;
    std::uint64_t code() const;
    std::string to_string() const;  // cycle notation, "e" for the identity

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

// Element of B_n: card i sits in position |images[i]|, face down when negative.
class SignedPermutation {
public:
    SignedPermutation() = default;
    explicit SignedPermutation(std::vector<int> images);

    static SignedPermutation identity(int n);
    static SignedPermutation flip(int n, int i);  // the negative transposition xi_i
    static SignedPermutation from_permutation(const Permutation& p);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int x) const;  // defined on +-1..+-n
    const std::vector<int>& images() const { return images_; }

    // The underlying unsigned permutation, and the set of face-down positions.
    Permutation underlying() const;
    std::vector<int> flipped_positions() const;

    bool is_identity() const;
    std::uint64_t code() const;
    std::string to_string() const;

    // Lexicographic on images with +k before -k.
    bool operator<(const SignedPermutation& other) const;
    bool operator==(const SignedPermutation&) const = default;

private:
    std::vector<int> images_;
};

Permutation compose(const Permutation& p, const Permutation& q);
SignedPermutation compose(const SignedPermutation& p, const SignedPermutation& q);
Permutation inverse(const Permutation& p);
SignedPermutation inverse(const SignedPermutation& p);

Partition cycle_type(const Permutation& p);
BiPartition signed_cycle_type(const SignedPermutation& p);

int sign(const Permutation& p);
int sign(const SignedPermutation& p);

class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class GroupKind { symmetric, hyperoctahedral, cyclic };

struct EnumerationCaps {
    int symmetric = 7;
    int hyperoctahedral = 5;
};

// All elements of S_n or B_n in canonical order, with inverse lookup.
template <class Element>
class GroupIndex {
public:
    explicit GroupIndex(std::vector<Element> elements);

    const std::vector<Element>& elements() const { return elements_; }
    const Element& operator[](std::size_t i) const { return elements_[i]; }
    std::size_t size() const { return elements_.size(); }
    std::size_t index(const Element& g) const;

private:
    std::vector<Element> elements_;
    std::unordered_map<std::uint64_t, std::size_t> lookup_;
};

using SymmetricGroup = GroupIndex<Permutation>;
using HyperoctahedralGroup = GroupIndex<SignedPermutation>;

SymmetricGroup enumerate_symmetric(int n, const EnumerationCaps& caps = {});
HyperoctahedralGroup enumerate_hyperoctahedral(int n, const EnumerationCaps& caps = {});

template <class Element>
GroupIndex<Element>::GroupIndex(std::vector<Element> elements) : elements_(std::move(elements)) {
    lookup_.reserve(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) lookup_.emplace(elements_[i].code(), i);
}

template <class Element>
std::size_t GroupIndex<Element>::index(const Element& g) const {
    auto it = lookup_.find(g.code());
    if (it == lookup_.end()) throw std::out_of_range("element not in group");
    return it->second;
}

}  // namespace shuffle_lab
