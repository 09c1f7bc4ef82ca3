#include <doctest.h>

#include <random>

#include "kflag/errors.hpp"
#include "kflag/io.hpp"
#include "oracles.hpp"

using namespace kflag;
using io::Json;

TEST_CASE("permutation parsing") {
    CHECK(io::parse_permutation("2,3,1") == Permutation{2, 3, 1});
    CHECK(io::parse_permutation(" 1 , 2 ") == Permutation{1, 2});
    CHECK_THROWS_AS(io::parse_permutation("1,,2"), InvalidInput);
    CHECK_THROWS_AS(io::parse_permutation("1,-2"), InvalidInput);
    CHECK_THROWS_AS(io::parse_permutation("1,2,2"), InvalidInput);
    try {
        io::parse_permutation("(12)");
        FAIL("cycle notation accepted");
    } catch (const InvalidInput& e) {
        CHECK(std::string(e.what()).find("(12) -> 2,1,3") != std::string::npos);
    }
}

TEST_CASE("polynomial JSON round trip") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + trial % 4;
        auto f = oracle::random_poly(rng, n);
        f *= LaurentPoly::constant(n, mpz_class("123456789012345678901234567890"));
        const auto j = io::to_json(f);
        CHECK(io::poly_from_json(Json::parse(io::dump(j)), n) == f);
    }
    const auto g = LaurentPoly::one(3) - LaurentPoly::y(3, 3) * LaurentPoly::x(3, 1, -1);
    CHECK(io::dump(io::to_json(g)) ==
          "[\n  {\n    \"coeff\": \"1\",\n    \"x\": [\n      0,\n      0,\n      0\n    ],\n"
          "    \"y\": [\n      0,\n      0,\n      0\n    ]\n  },\n"
          "  {\n    \"coeff\": \"-1\",\n    \"x\": [\n      -1,\n      0,\n      0\n    ],\n"
          "    \"y\": [\n      0,\n      0,\n      1\n    ]\n  }\n]\n");
    CHECK(io::poly_from_json(Json::parse(R"({"n": 2, "terms": []})")).is_zero());
    CHECK(io::poly_from_json(Json::parse(R"([{"coeff": 3, "x": [1, 0], "y": [0, 0]}])")) ==
          LaurentPoly::x(2, 1).scaled(3));
    CHECK_THROWS_AS(io::poly_from_json(Json::parse("[]")), InvalidInput);
    CHECK_THROWS_AS(io::poly_from_json(Json::parse(R"([{"coeff": "x", "x": [1], "y": [0]}])")), InvalidInput);
    CHECK_THROWS_AS(io::poly_from_json(Json::parse(R"([{"coeff": "1", "x": [1, 0], "y": [0]}])")), InvalidInput);
    CHECK_THROWS_AS(io::poly_from_json(Json::parse(R"({"n": 2})")), InvalidInput);
}

TEST_CASE("weights") {
    const auto w = io::parse_weights("1/4,1/8,-3/8");
    CHECK(io::parse_weights(io::to_json(w).dump()) == w);
    CHECK(io::to_json(w).dump() == R"([{"num":1,"den":4},{"num":1,"den":8},{"num":-3,"den":8}])");
    CHECK_THROWS_AS(io::parse_weights("[{\"num\": 1, \"den\": 0}]"), InvalidInput);
    CHECK_THROWS_AS(io::parse_weights("[1,2"), InvalidInput);
}

TEST_CASE("restriction class and decomposition round trip") {
    const Permutation g{2, 1, 3};
    const auto alpha = restrict_all(permuted_grothendieck(Permutation{1, 3, 2}, g));
    const auto back = io::restriction_class_from_json(Json::parse(io::dump(io::to_json(alpha))));
    CHECK(back == alpha);

    auto j = io::to_json(alpha);
    j["entries"].erase(0);
    CHECK_THROWS_AS(io::restriction_class_from_json(j), InvalidInput);
    j = io::to_json(alpha);
    j["entries"][1]["z"] = Json::array({1, 2, 3});
    CHECK_THROWS_AS(io::restriction_class_from_json(j), InvalidInput);

    const auto d = decompose(alpha, g);
    CHECK(io::decomposition_from_json(io::to_json(d), 3) == d);
}

TEST_CASE("support report JSON lists counterexamples only on failure") {
    const auto report = verify_support_theorem(2);
    const auto j = io::to_json(report);
    REQUIRE(j.size() == 4);
    CHECK(j[0]["pass"] == true);
    CHECK_FALSE(j[0].contains("counterexamples"));
    CHECK(j[0]["support"] == j[0]["bruhat_interval"]);
}
