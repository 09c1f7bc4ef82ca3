#pragma once

#include <functional>
#include <map>
#include <set>
#include <vector>

#include "kflag/groth.hpp"
#include "kflag/laurent.hpp"
#include "kflag/perm.hpp"

namespace kflag {

/// Restriction to the fixed flag p_z: x_i -> y_{z(i)}, y untouched.
LaurentPoly restrict_at(const LaurentPoly& f, const Permutation& z);

/// True iff restrict_at(f, z) vanishes in R(T) = Z[y^{+-1}]/(y_1...y_n - 1).
/// Same answer as canonical_zero_test(restrict_at(f, z)), in a single pass.
bool restricts_to_zero(const LaurentPoly& f, const Permutation& z);

/// Localized class: one y-only Laurent polynomial per fixed point, dense
/// over S_n in lexicographic order.
class RestrictionClass {
public:
    /// Throws InvalidInput unless there is one x-free entry of rank n per
    /// element of S_n (in enumerate(n) order).
    RestrictionClass(int n, std::vector<LaurentPoly> entries);
    static RestrictionClass zero(int n);

    int rank() const noexcept { return n_; }
    const std::vector<Permutation>& points() const noexcept { return points_; }
    const std::vector<LaurentPoly>& entries() const noexcept { return entries_; }
    const LaurentPoly& at(const Permutation& z) const;

    RestrictionClass& operator+=(const RestrictionClass& other);
    /// Entrywise product with a y-only scalar.
    RestrictionClass scaled(const LaurentPoly& c) const;

    /// Entrywise equality in R(T).
    bool equivalent(const RestrictionClass& other) const;

    friend bool operator==(const RestrictionClass&, const RestrictionClass&) = default;

private:
    int n_;
    std::vector<Permutation> points_;
    std::vector<LaurentPoly> entries_;
};

/// Index of z in the lexicographic enumeration of S_n.
std::size_t lex_rank(const Permutation& z);

RestrictionClass restrict_all(const LaurentPoly& f);

using SupportSet = std::set<Permutation>;

/// {z : f|_z != 0 in R(T)}.
SupportSet support(const LaurentPoly& f);

/// {v : v <=_gamma w}.
SupportSet permuted_bruhat_interval(const Permutation& w, const Permutation& gamma);

struct Counterexample {
    Permutation z;
    LaurentPoly restriction;
    bool in_support;
    bool in_interval;
};

struct PairResult {
    Permutation w;
    Permutation gamma;
    bool pass;
    SupportSet support;
    SupportSet interval;
    std::vector<Counterexample> counterexamples; // empty when pass
};

struct SupportReport {
    int n;
    std::vector<PairResult> pairs; // sorted by (w, gamma)

    std::size_t failures() const;
    bool all_pass() const { return failures() == 0; }
};

inline constexpr int kDefaultVerifyBound = 5;

/// Checks Supp(G_w^gamma) == {v : v <=_gamma w} for every (w, gamma) in
/// S_n x S_n.  `jobs` workers share `cache`; the report does not depend on
/// the schedule.  `progress`, when set, is called with the number of pairs
/// finished so far (from worker threads, serialized).
SupportReport verify_support_theorem(int n, int jobs = 1, int bound = kDefaultVerifyBound,
                                     GrothendieckCache* cache = nullptr,
                                     const std::function<void(std::size_t, std::size_t)>& progress = {});

using Decomposition = std::map<Permutation, LaurentPoly>;

/// Coefficients a_w in R(T) with alpha = sum_w a_w G_w^gamma (restricted
/// entrywise).  Zero coefficients are omitted; nonzero ones are returned as
/// y_n-free representatives.  Throws NotInSpan when some step has no exact
/// quotient.
Decomposition decompose(const RestrictionClass& alpha, const Permutation& gamma, GrothendieckCache* cache = nullptr);

/// sum_w a_w * restrict_all(G_w^gamma).
RestrictionClass recompose(int n, const Decomposition& coeffs, const Permutation& gamma,
                           GrothendieckCache* cache = nullptr);

} // namespace kflag
