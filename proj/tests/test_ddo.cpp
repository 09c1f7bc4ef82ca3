#include <doctest.h>

#include <random>

#include "kflag/ddo.hpp"
#include "kflag/errors.hpp"
#include "kflag/groth.hpp"
#include "oracles.hpp"

using namespace kflag;

namespace {

LaurentPoly X(int n, int i, int p = 1) { return LaurentPoly::x(n, i, p); }
LaurentPoly Y(int n, int i, int p = 1) { return LaurentPoly::y(n, i, p); }

std::vector<LaurentPoly> corpus(unsigned seed, int n, int count) {
    std::mt19937 rng(seed);
    std::vector<LaurentPoly> out;
    for (int k = 0; k < count; ++k) out.push_back(oracle::random_poly(rng, n));
    return out;
}

} // namespace

TEST_CASE("delta on small inputs") {
    const int n = 2;
    CHECK(delta(1, X(n, 1)) == LaurentPoly::one(n));
    CHECK(delta(1, X(n, 2)) == LaurentPoly::constant(n, -1));
    CHECK(delta(1, X(n, 1) * X(n, 2)).is_zero());
    CHECK(delta(1, X(n, 1, 2)) == X(n, 1) + X(n, 2));
    CHECK(delta(1, X(n, 1, -1)) == -(X(n, 1, -1) * X(n, 2, -1)));
    CHECK(delta(1, Y(n, 2)).is_zero());
    CHECK(pi(1, LaurentPoly::one(n)) == LaurentPoly::one(n));
    CHECK_THROWS_AS(delta(0, X(n, 1)), InvalidInput);
    CHECK_THROWS_AS(delta(2, X(n, 1)), InvalidInput);
}

TEST_CASE("delta agrees with the quotient evaluated pointwise") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + trial % 3;
        const int i = 1 + trial % (n - 1);
        const auto f = oracle::random_poly(rng, n);
        const auto d = delta(i, f);
        auto p = oracle::random_point(rng, n);
        while (p[static_cast<std::size_t>(i - 1)] == p[static_cast<std::size_t>(i)]) p = oracle::random_point(rng, n);
        auto q = p;
        std::swap(q[static_cast<std::size_t>(i - 1)], q[static_cast<std::size_t>(i)]);
        const mpq_class expected = (oracle::evaluate(f, p) - oracle::evaluate(f, q)) /
                                   (p[static_cast<std::size_t>(i - 1)] - p[static_cast<std::size_t>(i)]);
        CHECK(oracle::evaluate(d, p) == expected);
    }
}

TEST_CASE("delta output is symmetric in x_i, x_{i+1}") {
    for (int n = 2; n <= 4; ++n)
        for (const auto& f : corpus(100 + n, n, 30))
            for (int i = 1; i < n; ++i) {
                const auto d = delta(i, f);
                CHECK(permute_x(Permutation::simple(n, i), d) == d);
            }
}

TEST_CASE("nil-Hecke relations") {
    for (int n = 2; n <= 4; ++n) {
        for (const auto& f : corpus(7 * n, n, 40)) {
            for (int i = 1; i < n; ++i) {
                CHECK(delta(i, delta(i, f)).is_zero());
                CHECK(pi(i, pi(i, f)) == pi(i, f));
                if (i + 1 < n) {
                    CHECK(delta(i, delta(i + 1, delta(i, f))) == delta(i + 1, delta(i, delta(i + 1, f))));
                    CHECK(pi(i, pi(i + 1, pi(i, f))) == pi(i + 1, pi(i, pi(i + 1, f))));
                }
                for (int j = i + 2; j < n; ++j) {
                    CHECK(delta(i, delta(j, f)) == delta(j, delta(i, f)));
                    CHECK(pi(i, pi(j, f)) == pi(j, pi(i, f)));
                }
            }
        }
    }
}

TEST_CASE("pi is linear over symmetric factors") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + trial % 3;
        const int i = 1 + trial % (n - 1);
        const auto P = oracle::random_poly(rng, n);
        const auto R = oracle::random_poly(rng, n, 3, 3);
        const auto Q = R + permute_x(Permutation::simple(n, i), R);
        CHECK(pi(i, P * Q) == pi(i, P) * Q);
    }
}

TEST_CASE("pi_word is independent of the reduced word") {
    const int n = 4;
    const auto polys = corpus(77, n, 10);
    for (const auto& w : enumerate(n)) {
        const auto words = oracle::all_reduced_words({w.images().begin(), w.images().end()});
        for (const auto& f : polys) {
            const auto expected = pi_word(w, f);
            for (const auto& word : words) CHECK(pi_along(word, f) == expected);
        }
    }
}

TEST_CASE("rightmost letter acts first") {
    const int n = 3;
    const auto f = X(n, 1, 2) * X(n, 3, -1);
    const std::vector<int> word{1, 2};
    CHECK(pi_along(word, f) == pi(1, pi(2, f)));
}

TEST_CASE("worked example, step by step") {
    // G_{(23)}^{(12)} = pi_2 pi_1 G_id(x, y_gamma), since w^{-1} gamma = [3,1,2] = s_2 s_1.
    const int n = 3;
    const Permutation gamma{2, 1, 3};
    const auto start = permute_y(gamma, top(n));
    const auto u = compose(inverse(Permutation{1, 3, 2}), gamma);
    CHECK(u == Permutation{3, 1, 2});
    const auto word = canonical_reduced_word(u);
    CHECK(word == ReducedWord{2, 1});
    const auto g = pi(2, pi(1, start));
    CHECK(g == pi_word(u, start));
    CHECK(g.to_string() == "1 - y3*x1^-1");
}
