#pragma once

#include <cstddef>
#include <shared_mutex>
#include <unordered_map>

#include "kflag/laurent.hpp"
#include "kflag/perm.hpp"

namespace kflag {

/// Top Grothendieck polynomial G_id = prod_{i<j} (1 - y_j/x_i), expanded.
LaurentPoly top(int n);

/// Double Grothendieck polynomial G_w = pi_{w^{-1}} G_id.
LaurentPoly grothendieck(const Permutation& w);

/// Permuted double Grothendieck polynomial
/// G_w^gamma = pi_{w^{-1} gamma} G_id(x, y_gamma).
LaurentPoly permuted_grothendieck(const Permutation& w, const Permutation& gamma);

struct GrothendieckKey {
    Permutation w;
    Permutation gamma;

    friend bool operator==(const GrothendieckKey&, const GrothendieckKey&) = default;
};

struct GrothendieckKeyHash {
    std::size_t operator()(const GrothendieckKey& k) const noexcept {
        PermutationHash h;
        return h(k.w) * 1000003u ^ h(k.gamma);
    }
};

/// Memo table for G_w^gamma, safe for concurrent use.
///
/// Each entry is computed by a single pi_i from the entry one letter shorter
/// along the canonical reduced word, so sweeps over S_n x S_n cost one
/// operator application per pair.  Racing fills of the same key are allowed;
/// the first insert wins and every racer computed the same value.
/// References returned stay valid until clear() or destruction.
class GrothendieckCache {
public:
    const LaurentPoly& permuted(const Permutation& w, const Permutation& gamma);
    const LaurentPoly& get(const Permutation& w) { return permuted(w, Permutation::identity(w.rank())); }

    std::size_t size() const;
    void clear();

private:
    const LaurentPoly* find(const GrothendieckKey& key) const;
    const LaurentPoly& insert(GrothendieckKey key, LaurentPoly value);

    mutable std::shared_mutex mutex_;
    std::unordered_map<GrothendieckKey, LaurentPoly, GrothendieckKeyHash> table_;
};

/// Process-wide cache used by the CLI and the sweeps.
GrothendieckCache& shared_cache();

} // namespace kflag
