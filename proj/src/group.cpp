#include "shuffle_lab/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace shuffle_lab {

namespace {

void check_bijection(const std::vector<int>& abs_images) {
    const int n = static_cast<int>(abs_images.size());
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v : abs_images) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("images do not form a bijection on 1..n");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

std::string cycles_string(const std::vector<int>& images, bool signed_mode) {
    const int n = static_cast<int>(images.size());
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    std::string out;
    for (int start = 1; start <= n; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        std::vector<int> cycle;
        int x = start;
        while (!seen[static_cast<std::size_t>(x)]) {
            seen[static_cast<std::size_t>(x)] = 1;
            cycle.push_back(x);
            x = std::abs(images[static_cast<std::size_t>(x - 1)]);
        }
        bool trivial = cycle.size() == 1 && images[static_cast<std::size_t>(start - 1)] == start;
        if (trivial) continue;
        out += "(";
        for (std::size_t k = 0; k < cycle.size(); ++k) {
            if (k) out += " ";
            int c = cycle[k];
            out += std::to_string(c);
            if (signed_mode && images[static_cast<std::size_t>(c - 1)] < 0) out += "-";
        }
        out += ")";
    }
    return out.empty() ? "e" : out;
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    check_bijection(images_);
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 1);
    for (const auto& c : cycles)
        for (std::size_t k = 0; k < c.size(); ++k)
            im[static_cast<std::size_t>(c[k] - 1)] = c[(k + 1) % c.size()];
    return Permutation(std::move(im));
}

Permutation Permutation::transposition(int n, int i, int j) {
    return from_cycles(n, {{i, j}});
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != static_cast<int>(i) + 1) return false;
    return true;
}

std::uint64_t Permutation::code() const {
    std::uint64_t c = 0;
    for (int v : images_) c = c * static_cast<std::uint64_t>(size() + 1) + static_cast<std::uint64_t>(v);
    return c;
}

std::string Permutation::to_string() const { return cycles_string(images_, false); }

SignedPermutation::SignedPermutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<int> abs_images(images_.size());
    std::transform(images_.begin(), images_.end(), abs_images.begin(), [](int v) { return std::abs(v); });
    check_bijection(abs_images);
}

SignedPermutation SignedPermutation::identity(int n) {
    return from_permutation(Permutation::identity(n));
}

SignedPermutation SignedPermutation::flip(int n, int i) {
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 1);
    im[static_cast<std::size_t>(i - 1)] = -i;
    return SignedPermutation(std::move(im));
}

SignedPermutation SignedPermutation::from_permutation(const Permutation& p) {
    return SignedPermutation(p.images());
}

int SignedPermutation::operator()(int x) const {
    const int v = images_[static_cast<std::size_t>(std::abs(x) - 1)];
    return x > 0 ? v : -v;
}

Permutation SignedPermutation::underlying() const {
    std::vector<int> im(images_.size());
    std::transform(images_.begin(), images_.end(), im.begin(), [](int v) { return std::abs(v); });
    return Permutation(std::move(im));
}

std::vector<int> SignedPermutation::flipped_positions() const {
    std::vector<int> out;
    for (int v : images_)
        if (v < 0) out.push_back(-v);
    std::sort(out.begin(), out.end());
    return out;
}

bool SignedPermutation::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != static_cast<int>(i) + 1) return false;
    return true;
}

std::uint64_t SignedPermutation::code() const {
    const auto base = static_cast<std::uint64_t>(2 * size() + 1);
    std::uint64_t c = 0;
    for (int v : images_) c = c * base + static_cast<std::uint64_t>(v > 0 ? 2 * v - 1 : -2 * v);
    return c;
}

std::string SignedPermutation::to_string() const { return cycles_string(images_, true); }

bool SignedPermutation::operator<(const SignedPermutation& other) const {
    auto key = [](int v) { return v > 0 ? 2 * v - 1 : -2 * v; };
    return std::lexicographical_compare(images_.begin(), images_.end(), other.images_.begin(),
                                        other.images_.end(),
                                        [&](int a, int b) { return key(a) < key(b); });
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size()) throw std::invalid_argument("compose: size mismatch");
    std::vector<int> im(static_cast<std::size_t>(p.size()));
    for (int i = 1; i <= p.size(); ++i) im[static_cast<std::size_t>(i - 1)] = p(q(i));
    return Permutation(std::move(im));
}

SignedPermutation compose(const SignedPermutation& p, const SignedPermutation& q) {
    if (p.size() != q.size()) throw std::invalid_argument("compose: size mismatch");
    std::vector<int> im(static_cast<std::size_t>(p.size()));
    for (int i = 1; i <= p.size(); ++i) im[static_cast<std::size_t>(i - 1)] = p(q(i));
    return SignedPermutation(std::move(im));
}

Permutation inverse(const Permutation& p) {
    std::vector<int> im(static_cast<std::size_t>(p.size()));
    for (int i = 1; i <= p.size(); ++i) im[static_cast<std::size_t>(p(i) - 1)] = i;
    return Permutation(std::move(im));
}

SignedPermutation inverse(const SignedPermutation& p) {
    std::vector<int> im(static_cast<std::size_t>(p.size()));
    for (int i = 1; i <= p.size(); ++i) {
        const int v = p(i);
        im[static_cast<std::size_t>(std::abs(v) - 1)] = v > 0 ? i : -i;
    }
    return SignedPermutation(std::move(im));
}

namespace {

// Cycles of |p| together with the parity of face-down images in each cycle.
std::vector<std::pair<int, int>> cycles_with_parity(const std::vector<int>& images) {
    const int n = static_cast<int>(images.size());
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::pair<int, int>> out;
    for (int start = 1; start <= n; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        int len = 0, flips = 0, x = start;
        while (!seen[static_cast<std::size_t>(x)]) {
            seen[static_cast<std::size_t>(x)] = 1;
            const int v = images[static_cast<std::size_t>(x - 1)];
            flips += v < 0;
            ++len;
            x = std::abs(v);
        }
        out.emplace_back(len, flips % 2);
    }
    return out;
}

Partition sorted_partition(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

}  // namespace

Partition cycle_type(const Permutation& p) {
    std::vector<int> lengths;
    for (auto [len, parity] : cycles_with_parity(p.images())) lengths.push_back(len);
    return sorted_partition(std::move(lengths));
}

BiPartition signed_cycle_type(const SignedPermutation& p) {
    std::vector<int> positive, negative;
    for (auto [len, parity] : cycles_with_parity(p.images()))
        (parity ? negative : positive).push_back(len);
    return {sorted_partition(std::move(positive)), sorted_partition(std::move(negative))};
}

int sign(const Permutation& p) {
    int transpositions = 0;
    for (auto [len, parity] : cycles_with_parity(p.images())) transpositions += len - 1;
    return transpositions % 2 ? -1 : 1;
}

int sign(const SignedPermutation& p) {
    const int flips = static_cast<int>(p.flipped_positions().size());
    return (flips % 2 ? -1 : 1) * sign(p.underlying());
}

SymmetricGroup enumerate_symmetric(int n, const EnumerationCaps& caps) {
    if (n < 0) throw std::invalid_argument("negative group size");
    if (n > caps.symmetric) throw CapExceeded("S_n enumeration cap exceeded");
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(im);
    } while (std::next_permutation(im.begin(), im.end()));
    return SymmetricGroup(std::move(out));
}

HyperoctahedralGroup enumerate_hyperoctahedral(int n, const EnumerationCaps& caps) {
    if (n < 0) throw std::invalid_argument("negative group size");
    if (n > caps.hyperoctahedral) throw CapExceeded("B_n enumeration cap exceeded");
    std::vector<SignedPermutation> out;
    const auto unsigned_group = enumerate_symmetric(n, {n, n});
    for (const auto& p : unsigned_group.elements()) {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> im = p.images();
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) im[static_cast<std::size_t>(i)] = -im[static_cast<std::size_t>(i)];
            out.emplace_back(std::move(im));
        }
    }
    std::sort(out.begin(), out.end());
    return HyperoctahedralGroup(std::move(out));
}

}  // namespace shuffle_lab
