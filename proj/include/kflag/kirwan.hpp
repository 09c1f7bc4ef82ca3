#pragma once

#include <optional>
#include <vector>

#include "kflag/groth.hpp"
#include "kflag/laurent.hpp"
#include "kflag/perm.hpp"
#include "kflag/weight.hpp"

namespace kflag {

/// Image of the fixed point p_omega under the moment map: lambda_omega.
WeightVector moment_image(const WeightVector& lambda, const Permutation& omega);

/// Linear functional xi = sum_i b_i e_i on t^*, cutting out the half-space
/// {p : <xi, p> <= <xi, mu>}.
class HalfSpaceSpec {
public:
    struct Origin {
        Permutation gamma;
        int k;
    };

    explicit HalfSpaceSpec(std::vector<Rational> coefficients, std::optional<Origin> origin = std::nullopt);

    /// eta_k^gamma = e_{gamma(k+1)} + ... + e_{gamma(n)}, 1 <= k <= n-1.
    static HalfSpaceSpec eta(const Permutation& gamma, int k);

    int rank() const noexcept { return static_cast<int>(b_.size()); }
    std::span<const Rational> coefficients() const noexcept { return b_; }
    const std::optional<Origin>& origin() const noexcept { return origin_; }

    Rational evaluate(const WeightVector& nu) const;
    /// <xi, point> <= <xi, mu>.
    bool contains(const WeightVector& point, const WeightVector& mu) const;

private:
    std::vector<Rational> b_;
    std::optional<Origin> origin_;
};

/// eta_k^gamma(nu) = sum_{i=k+1}^{n} nu_{gamma(i)}.
Rational eta_value(const Permutation& gamma, int k, const WeightVector& nu);

/// A triple where sum_{i>k} lambda_{v(i)} == sum_{i>k} mu_{gamma(i)}.
struct WallTriple {
    Permutation v;
    Permutation gamma;
    int k;
};

struct RegularityReport {
    bool regular;
    std::vector<WallTriple> walls; // every equality triple, sorted by (v, gamma, k)
};

inline constexpr int kDefaultKirwanBound = 6;

/// Checks that no (v, gamma, k) puts (lambda, mu) on a tail-sum wall.
/// Requires lambda generic (InvalidInput otherwise).
RegularityReport is_regular(const WeightVector& lambda, const WeightVector& mu, int bound = kDefaultKirwanBound);

struct KernelGenerator {
    Permutation v;
    Permutation gamma;
    std::vector<int> witnesses; // every k with sum_{i>k} lambda_{v(i)} < sum_{i>k} mu_{gamma(i)}
    LaurentPoly poly;           // pi_v G_id(x, y_gamma)
};

/// All (v, gamma) with at least one witness k, sorted by (v, gamma).
/// Throws NotRegular on a wall.
std::vector<KernelGenerator> kernel_generators(const WeightVector& lambda, const WeightVector& mu, int jobs = 1,
                                               GrothendieckCache* cache = nullptr, int bound = kDefaultKirwanBound);

struct SoundnessCheck {
    Permutation z;
    int k;
    Rational lhs; // eta_k^gamma(lambda_z)
    Rational rhs; // eta_k^gamma(mu)
};

/// Every support point of gen.poly lies strictly inside the half-space of
/// every witness k.  Throws SoundnessFailure naming the offending (z, k).
std::vector<SoundnessCheck> half_space_soundness(const KernelGenerator& gen, const WeightVector& lambda,
                                                 const WeightVector& mu);

struct Presentation {
    int n;
    WeightVector lambda;
    WeightVector mu;
    std::vector<LaurentPoly> ideal_I; // e_i(x) - e_i(y), i = 1..n
    LaurentPoly det_relation;         // y_1...y_n - 1
    std::vector<KernelGenerator> kernel;
};

Presentation presentation(const WeightVector& lambda, const WeightVector& mu, int jobs = 1,
                          GrothendieckCache* cache = nullptr);

} // namespace kflag
