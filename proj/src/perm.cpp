#include "kflag/perm.hpp"

#include <algorithm>
#include <numeric>

#include "kflag/errors.hpp"

namespace kflag {

namespace {

void require_same_rank(const Permutation& a, const Permutation& b, const char* what) {
    if (a.rank() != b.rank())
        throw InvalidInput(std::string(what) + ": rank mismatch (" + std::to_string(a.rank()) + " vs " +
                           std::to_string(b.rank()) + ")");
}

} // namespace

Permutation Permutation::identity(int n) {
    if (n < 1) throw InvalidInput("permutation rank must be >= 1");
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::longest(int n) {
    if (n < 1) throw InvalidInput("permutation rank must be >= 1");
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n - i;
    return Permutation(std::move(v));
}

Permutation Permutation::simple(int n, int i) {
    if (i < 1 || i >= n)
        throw InvalidInput("simple transposition index " + std::to_string(i) + " out of range for n=" +
                           std::to_string(n));
    auto s = identity(n);
    std::swap(s.images_[static_cast<std::size_t>(i - 1)], s.images_[static_cast<std::size_t>(i)]);
    return s;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = rank();
    if (n < 1) throw InvalidInput("permutation must have rank >= 1");
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : images_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
            throw InvalidInput("not a permutation of 1.." + std::to_string(n) + ": " + to_string());
        seen[static_cast<std::size_t>(v)] = true;
    }
}

bool Permutation::is_identity() const noexcept {
    for (int i = 0; i < rank(); ++i)
        if (images_[static_cast<std::size_t>(i)] != i + 1) return false;
    return true;
}

std::string Permutation::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(images_[i]);
    }
    return s;
}

Permutation compose(const Permutation& u, const Permutation& v) {
    require_same_rank(u, v, "compose");
    std::vector<int> out(static_cast<std::size_t>(u.rank()));
    for (int i = 1; i <= u.rank(); ++i) out[static_cast<std::size_t>(i - 1)] = u(v(i));
    return Permutation(std::move(out));
}

Permutation inverse(const Permutation& w) {
    std::vector<int> out(static_cast<std::size_t>(w.rank()));
    for (int i = 1; i <= w.rank(); ++i) out[static_cast<std::size_t>(w(i) - 1)] = i;
    return Permutation(std::move(out));
}

int length(const Permutation& w) {
    int inv = 0;
    for (int i = 1; i <= w.rank(); ++i)
        for (int j = i + 1; j <= w.rank(); ++j)
            if (w(i) > w(j)) ++inv;
    return inv;
}

ReducedWord canonical_reduced_word(const Permutation& w) {
    // Peel off the smallest left descent each time: i is a left descent of w
    // iff i+1 sits to the left of i in the one-line notation.
    const int n = w.rank();
    std::vector<int> pos(static_cast<std::size_t>(n) + 1);
    for (int i = 1; i <= n; ++i) pos[static_cast<std::size_t>(w(i))] = i;
    ReducedWord word;
    while (true) {
        int letter = 0;
        for (int i = 1; i < n; ++i) {
            if (pos[static_cast<std::size_t>(i)] > pos[static_cast<std::size_t>(i + 1)]) {
                letter = i;
                break;
            }
        }
        if (letter == 0) break;
        word.push_back(letter);
        // w <- s_letter * w swaps the values letter, letter+1.
        std::swap(pos[static_cast<std::size_t>(letter)], pos[static_cast<std::size_t>(letter + 1)]);
    }
    return word;
}

Permutation word_product(int n, std::span<const int> letters) {
    auto w = Permutation::identity(n);
    for (int i : letters) w = compose(w, Permutation::simple(n, i));
    return w;
}

bool bruhat_leq(const Permutation& v, const Permutation& w) {
    require_same_rank(v, w, "bruhat_leq");
    const int n = v.rank();
    // For each prefix length i and threshold j compare #{a <= i : x(a) >= j}.
    std::vector<int> cv(static_cast<std::size_t>(n) + 2, 0), cw(static_cast<std::size_t>(n) + 2, 0);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= v(i); ++j) ++cv[static_cast<std::size_t>(j)];
        for (int j = 1; j <= w(i); ++j) ++cw[static_cast<std::size_t>(j)];
        for (int j = 1; j <= n; ++j)
            if (cv[static_cast<std::size_t>(j)] > cw[static_cast<std::size_t>(j)]) return false;
    }
    return true;
}

bool permuted_bruhat_leq(const Permutation& v, const Permutation& w, const Permutation& gamma) {
    require_same_rank(v, w, "permuted_bruhat_leq");
    require_same_rank(v, gamma, "permuted_bruhat_leq");
    auto gi = inverse(gamma);
    return bruhat_leq(compose(gi, v), compose(gi, w));
}

std::vector<Permutation> enumerate(int n, int bound) {
    if (n < 1) throw InvalidInput("enumerate: n must be >= 1");
    if (n > bound)
        throw LimitExceeded("enumerate: n=" + std::to_string(n) + " exceeds bound " + std::to_string(bound));
    std::vector<int> cur(static_cast<std::size_t>(n));
    std::iota(cur.begin(), cur.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(cur);
    } while (std::next_permutation(cur.begin(), cur.end()));
    return out;
}

WeightVector act_on_weights(const Permutation& gamma, const WeightVector& lambda) {
    if (gamma.rank() != lambda.rank())
        throw InvalidInput("act_on_weights: rank mismatch");
    auto gi = inverse(gamma);
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(lambda.rank()));
    for (int i = 1; i <= lambda.rank(); ++i) out.push_back(lambda(gi(i)));
    return WeightVector(std::move(out));
}

std::size_t PermutationHash::operator()(const Permutation& w) const noexcept {
    std::size_t h = 0;
    for (int v : w.images()) h = h * 31 + static_cast<std::size_t>(v);
    return h;
}

} // namespace kflag
