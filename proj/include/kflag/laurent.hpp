#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <gmpxx.h>

#include "kflag/perm.hpp"

namespace kflag {

using Coefficient = mpz_class;

/// Exponent vector of a monomial: x_1..x_n followed by y_1..y_n.
using Exponents = boost::container::small_vector<std::int32_t, 16>;

struct Term {
    Exponents exps;
    Coefficient coeff;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Which block of variables an operation refers to.
enum class Block { X, Y };

/// Exact Laurent polynomial in x_1..x_n, y_1..y_n over the integers.
///
/// Canonical form: no zero coefficients, terms sorted strictly descending by
/// the lexicographic order on the concatenated exponent vector (x block
/// first).  Two values are equal iff their term lists are identical.
class LaurentPoly {
public:
    /// The zero polynomial of rank n.
    explicit LaurentPoly(int n);

    static LaurentPoly constant(int n, const Coefficient& c);
    static LaurentPoly one(int n) { return constant(n, 1); }
    static LaurentPoly monomial(int n, Exponents exps, const Coefficient& c = 1);
    /// x_i^power (i is 1-based).
    static LaurentPoly x(int n, int i, int power = 1);
    /// y_i^power (i is 1-based).
    static LaurentPoly y(int n, int i, int power = 1);
    /// Combines like terms, drops zeros and sorts.
    static LaurentPoly from_terms(int n, std::vector<Term> terms);

    int rank() const noexcept { return n_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    std::span<const Term> terms() const noexcept { return terms_; }
    /// Largest term in the fixed order.  Precondition: nonzero.
    const Term& leading_term() const { return terms_.front(); }

    /// All x-exponents are zero.
    bool is_x_free() const noexcept;
    /// Single term with coefficient exactly +1.
    bool is_unit_monomial() const noexcept;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& g);
    LaurentPoly& operator-=(const LaurentPoly& g);
    LaurentPoly& operator*=(const LaurentPoly& g);
    friend LaurentPoly operator+(LaurentPoly f, const LaurentPoly& g) { return f += g; }
    friend LaurentPoly operator-(LaurentPoly f, const LaurentPoly& g) { return f -= g; }
    friend LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g);
    LaurentPoly scaled(const Coefficient& c) const;

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    /// "1 - y3*x1^-1": terms in the fixed order, positive powers before
    /// negative ones inside a monomial.
    std::string to_string() const;

private:
    int n_;
    std::vector<Term> terms_;
};

/// Strict "greater" in the fixed monomial order (lex on x-then-y exponents).
bool exps_greater(const Exponents& a, const Exponents& b);

struct ExponentsHash {
    std::size_t operator()(const Exponents& e) const noexcept;
};

/// Relabel variables: x_i -> x_{sigma(i)}.
LaurentPoly permute_x(const Permutation& sigma, const LaurentPoly& f);
/// Relabel variables: y_i -> y_{sigma(i)}.
LaurentPoly permute_y(const Permutation& sigma, const LaurentPoly& f);

struct Variable {
    Block block;
    int index; // 1-based

    friend auto operator<=>(const Variable&, const Variable&) = default;
};

/// Variable -> monomial map.  Values must be monomials with coefficient +1;
/// unassigned variables are left alone.
using Assignment = std::map<Variable, LaurentPoly>;

/// Ring homomorphism induced by `assignment`.  Throws InvalidInput on a
/// non-monomial value or rank mismatch.
LaurentPoly substitute(const LaurentPoly& f, const Assignment& assignment);

/// q with q * g == f.  Throws NotDivisible when no Laurent quotient exists,
/// InvalidInput when g is zero.
LaurentPoly exact_div(const LaurentPoly& f, const LaurentPoly& g);

/// Representative of f in Z[y^{+-1}]/(y_1...y_n - 1) with y_n eliminated via
/// y_n = (y_1...y_{n-1})^{-1}.  f must be x-free (InvalidInput otherwise).
LaurentPoly eliminate_last_y(const LaurentPoly& f);

/// f lies in the ideal (y_1...y_n - 1).  f must be x-free.
bool canonical_zero_test(const LaurentPoly& f);

/// e_i in the chosen variable block; 1 <= i <= n.
LaurentPoly elementary_symmetric(int i, Block block, int n);

} // namespace kflag
