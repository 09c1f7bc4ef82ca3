#include <doctest.h>

#include "kflag/errors.hpp"
#include "kflag/gkm.hpp"
#include "kflag/groth.hpp"

using namespace kflag;

namespace {

LaurentPoly X(int n, int i, int p = 1) { return LaurentPoly::x(n, i, p); }
LaurentPoly Y(int n, int i, int p = 1) { return LaurentPoly::y(n, i, p); }

LaurentPoly factor(int n, int i, int j) { return LaurentPoly::one(n) - Y(n, j) * X(n, i, -1); }

// Strips factors 1 - y_a/y_b one at a time; a product of such factors
// leaves a unit monomial.
bool is_root_product(LaurentPoly f) {
    const int n = f.rank();
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            if (a == b) continue;
            const auto root = LaurentPoly::one(n) - Y(n, a) * Y(n, b, -1);
            while (true) {
                try {
                    f = exact_div(f, root);
                } catch (const NotDivisible&) {
                    break;
                }
            }
        }
    return f.size() == 1 && (f.terms()[0].coeff == 1 || f.terms()[0].coeff == -1);
}

} // namespace

TEST_CASE("top class") {
    CHECK(top(1) == LaurentPoly::one(1));
    CHECK(top(2) == factor(2, 1, 2));
    CHECK(top(3) == factor(3, 1, 2) * factor(3, 1, 3) * factor(3, 2, 3));
    CHECK(top(3).size() == 8);
}

TEST_CASE("small Grothendieck polynomials") {
    CHECK(grothendieck(Permutation{2, 1}) == LaurentPoly::one(2));
    CHECK(grothendieck(Permutation{1, 2}) == top(2));
    for (int n = 1; n <= 4; ++n) CHECK(grothendieck(Permutation::longest(n)) == LaurentPoly::one(n));
    CHECK(permuted_grothendieck(Permutation{1, 3, 2}, Permutation{2, 1, 3}).to_string() == "1 - y3*x1^-1");
    CHECK(permuted_grothendieck(Permutation{1, 2, 3}, Permutation::identity(3)) == top(3));
    CHECK_THROWS_AS(permuted_grothendieck(Permutation{1, 2}, Permutation{1, 2, 3}), InvalidInput);
}

TEST_CASE("defining identity over S_3 and S_4") {
    for (int n = 3; n <= 4; ++n) {
        const auto perms = enumerate(n);
        int checked = 0;
        for (const auto& w : perms)
            for (const auto& g : perms) {
                CHECK(permuted_grothendieck(w, g) == permute_y(g, grothendieck(compose(inverse(g), w))));
                ++checked;
            }
        CHECK(checked == (n == 3 ? 36 : 576));
    }
}

TEST_CASE("cached and uncached agree") {
    GrothendieckCache cache;
    for (int n = 1; n <= 4; ++n) {
        const auto perms = enumerate(n);
        for (const auto& w : perms)
            for (const auto& g : perms) CHECK(cache.permuted(w, g) == permuted_grothendieck(w, g));
        for (const auto& w : perms) CHECK(cache.get(w) == grothendieck(w));
    }
    CHECK(cache.size() > 0);
    cache.clear();
    CHECK(cache.size() == 0);
}

TEST_CASE("restriction at the diagonal and at gamma is a product of root factors") {
    for (int n = 2; n <= 4; ++n) {
        const auto perms = enumerate(n);
        for (const auto& w : perms)
            for (const auto& g : perms) {
                const auto f = shared_cache().permuted(w, g);
                CHECK_FALSE(restricts_to_zero(f, w));
                CHECK_FALSE(restricts_to_zero(f, g));
                CHECK(is_root_product(restrict_at(f, w)));
            }
    }
}
