#include "kflag/groth.hpp"

#include <mutex>

#include "kflag/ddo.hpp"
#include "kflag/errors.hpp"

namespace kflag {

LaurentPoly top(int n) {
    auto g = LaurentPoly::one(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            Exponents e(static_cast<std::size_t>(2 * n), 0);
            e[static_cast<std::size_t>(i - 1)] = -1;
            e[static_cast<std::size_t>(n + j - 1)] = 1;
            g *= LaurentPoly::one(n) - LaurentPoly::monomial(n, std::move(e));
        }
    return g;
}

LaurentPoly grothendieck(const Permutation& w) { return pi_word(inverse(w), top(w.rank())); }

LaurentPoly permuted_grothendieck(const Permutation& w, const Permutation& gamma) {
    if (w.rank() != gamma.rank()) throw InvalidInput("permuted_grothendieck: rank mismatch");
    return pi_word(compose(inverse(w), gamma), permute_y(gamma, top(w.rank())));
}

const LaurentPoly& GrothendieckCache::permuted(const Permutation& w, const Permutation& gamma) {
    if (w.rank() != gamma.rank()) throw InvalidInput("permuted_grothendieck: rank mismatch");
    GrothendieckKey key{w, gamma};
    if (const auto* hit = find(key)) return *hit;

    const int n = w.rank();
    const auto u = compose(inverse(w), gamma);
    if (u.is_identity()) return insert(std::move(key), permute_y(gamma, top(n)));

    // u = s_i * u' with i the first letter of the canonical word; the suffix
    // of a lex-minimal reduced word is again lex-minimal, so the shorter
    // entry G_{w'}^gamma with w'^{-1} gamma = u' is itself a cache entry.
    const int i = canonical_reduced_word(u).front();
    const auto shorter = compose(Permutation::simple(n, i), u);
    const auto w_shorter = compose(gamma, inverse(shorter));
    const LaurentPoly& base = permuted(w_shorter, gamma);
    return insert(std::move(key), pi(i, base));
}

const LaurentPoly* GrothendieckCache::find(const GrothendieckKey& key) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    return it == table_.end() ? nullptr : &it->second;
}

const LaurentPoly& GrothendieckCache::insert(GrothendieckKey key, LaurentPoly value) {
    std::unique_lock lock(mutex_);
    return table_.try_emplace(std::move(key), std::move(value)).first->second;
}

std::size_t GrothendieckCache::size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
}

void GrothendieckCache::clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
}

GrothendieckCache& shared_cache() {
    static GrothendieckCache cache;
    return cache;
}

} // namespace kflag
