#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "kflag/weight.hpp"

namespace kflag {

/// Element of the symmetric group S_n in one-line notation.
///
/// Values are 1-based: `w(i)` for i in 1..n.  Composition is right to left,
/// `(u * v)(i) = u(v(i))`, and this is the only convention used anywhere in
/// the library.
class Permutation {
public:
    /// Identity of rank n.
    static Permutation identity(int n);
    /// Longest element [n, n-1, ..., 1].
    static Permutation longest(int n);
    /// Adjacent transposition s_i (1 <= i < n).
    static Permutation simple(int n, int i);

    /// Throws InvalidInput unless `images` is a bijection of {1..n}, n >= 1.
    explicit Permutation(std::vector<int> images);
    Permutation(std::initializer_list<int> images)
        : Permutation(std::vector<int>(images)) {}

    int rank() const noexcept { return static_cast<int>(images_.size()); }
    /// w(i), 1-based.
    int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
    std::span<const int> images() const noexcept { return images_; }

    bool is_identity() const noexcept;

    std::string to_string() const; // "2,3,1"

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) {
        return a.images_ <=> b.images_;
    }

private:
    std::vector<int> images_;
};

/// u * v means "apply v, then u".
Permutation compose(const Permutation& u, const Permutation& v);
inline Permutation operator*(const Permutation& u, const Permutation& v) { return compose(u, v); }

Permutation inverse(const Permutation& w);

/// Inversion count.
int length(const Permutation& w);

/// Sequence of adjacent-transposition indices (values in 1..n-1).
using ReducedWord = std::vector<int>;

/// Lexicographically smallest reduced word: w = s_{i1} * s_{i2} * ... * s_{il}.
ReducedWord canonical_reduced_word(const Permutation& w);

/// Product s_{i1} * ... * s_{il} in S_n; no reducedness check.
Permutation word_product(int n, std::span<const int> letters);

/// Bruhat order via the rank-matrix (dominance) criterion.
bool bruhat_leq(const Permutation& v, const Permutation& w);

/// v <=_gamma w  iff  gamma^{-1} v <= gamma^{-1} w.
bool permuted_bruhat_leq(const Permutation& v, const Permutation& w, const Permutation& gamma);

inline constexpr int kDefaultEnumerateBound = 8;

/// All n! permutations in lexicographic one-line order.  Throws
/// LimitExceeded when n > bound.
std::vector<Permutation> enumerate(int n, int bound = kDefaultEnumerateBound);

/// Weyl action on a weight vector: (gamma . lambda)_i = lambda_{gamma^{-1}(i)}.
WeightVector act_on_weights(const Permutation& gamma, const WeightVector& lambda);

struct PermutationHash {
    std::size_t operator()(const Permutation& w) const noexcept;
};

} // namespace kflag
