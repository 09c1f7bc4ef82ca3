#include "kflag/ddo.hpp"

#include "kflag/errors.hpp"

namespace kflag {

namespace {

void check_index(int i, int n, const char* op) {
    if (i < 1 || i >= n)
        throw InvalidInput(std::string(op) + ": index " + std::to_string(i) + " out of range for n=" +
                           std::to_string(n));
}

} // namespace

LaurentPoly delta(int i, const LaurentPoly& f) {
    const int n = f.rank();
    check_index(i, n, "delta");
    LaurentPoly numerator = f - permute_x(Permutation::simple(n, i), f);
    try {
        return exact_div(numerator, LaurentPoly::x(n, i) - LaurentPoly::x(n, i + 1));
    } catch (const NotDivisible& e) {
        // The numerator is antisymmetric in x_i, x_{i+1}, so this cannot happen.
        throw InternalError(std::string("divided difference was not exact: ") + e.what());
    }
}

LaurentPoly pi(int i, const LaurentPoly& f) {
    check_index(i, f.rank(), "pi");
    return delta(i, LaurentPoly::x(f.rank(), i) * f);
}

LaurentPoly pi_along(std::span<const int> word, const LaurentPoly& f) {
    LaurentPoly g = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it) g = pi(*it, g);
    return g;
}

LaurentPoly pi_word(const Permutation& w, const LaurentPoly& f) {
    if (w.rank() != f.rank()) throw InvalidInput("pi_word: rank mismatch");
    auto word = canonical_reduced_word(w);
    return pi_along(word, f);
}

} // namespace kflag
