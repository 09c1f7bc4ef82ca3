#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "kflag/cli.hpp"

using kflag::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = run(args, in, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("groth") {
    auto r = invoke({"groth", "--n", "3", "--w", "1,3,2", "--gamma", "2,1,3"});
    CHECK(r.code == 0);
    CHECK(r.out == "1 - y3*x1^-1\n");
    r = invoke({"groth", "--n", "3", "--w", "3,2,1"});
    CHECK(r.out == "1\n");
}

TEST_CASE("bad input exits 2 with a message") {
    auto r = invoke({"groth", "--n", "3", "--w", "(23)"});
    CHECK(r.code == 2);
    CHECK(r.err.find("cycle notation") != std::string::npos);
    CHECK(invoke({"groth", "--n", "3", "--w", "1,2"}).code == 2);
    CHECK(invoke({"groth", "--n", "3"}).code == 2);
    CHECK(invoke({"frobnicate"}).code == 2);
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"verify", "--n", "7"}).code == 2);
    CHECK(invoke({"verify", "--n", "6", "--quiet"}).code == 2);
    CHECK(invoke({"regular", "--lambda", "1,1", "--mu", "0,0"}).code == 2);
    CHECK(invoke({"ddo", "--op", "delta", "--i", "1", "--poly", "-"}, "not json").code == 2);
    CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("ddo reads JSON from stdin") {
    const std::string x1 = R"([{"coeff": "1", "x": [2, 0], "y": [0, 0]}])";
    auto r = invoke({"ddo", "--op", "delta", "--i", "1", "--poly", "-"}, x1);
    CHECK(r.code == 0);
    CHECK(r.out == "x1 + x2\n");
    r = invoke({"ddo", "--op", "pi", "--i", "1", "--poly", "-", "--json"}, R"({"n": 2, "terms": []})");
    CHECK(r.out == "[]\n");
    CHECK(invoke({"ddo", "--op", "delta", "--i", "2", "--poly", "-"}, x1).code == 2);
}

TEST_CASE("restrict and support") {
    auto r = invoke({"restrict", "--n", "3", "--w", "1,3,2", "--gamma", "2,1,3", "--at", "3,2,1"});
    CHECK(r.out == "0\n");
    r = invoke({"support", "--n", "3", "--w", "1,3,2", "--gamma", "2,1,3"});
    CHECK(r.out == "1,2,3\n1,3,2\n2,1,3\n2,3,1\n");
}

TEST_CASE("restrict feeds decompose") {
    const auto cls = invoke({"restrict", "--n", "3", "--w", "2,3,1", "--gamma", "3,1,2", "--json"});
    REQUIRE(cls.code == 0);
    auto r = invoke({"decompose", "--n", "3", "--gamma", "3,1,2", "--class", "-"}, cls.out);
    CHECK(r.code == 0);
    CHECK(r.out == "2,3,1: 1\n");
    r = invoke({"decompose", "--n", "2", "--class", "-"}, cls.out);
    CHECK(r.code == 2);
}

TEST_CASE("decompose outside the span exits 2") {
    const std::string cls = R"({"n": 2, "entries": [
        {"z": [1, 2], "value": [{"coeff": "2", "x": [0, 0], "y": [1, 0]}]},
        {"z": [2, 1], "value": {"n": 2, "terms": []}}]})";
    auto r = invoke({"decompose", "--n", "2", "--class", "-"}, cls);
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("verify") {
    auto r = invoke({"verify", "--n", "3", "--quiet"});
    CHECK(r.code == 0);
    CHECK(r.out == "n=3 pairs=36 passed=36 failed=0\n");
    CHECK(r.err.empty());
    r = invoke({"verify", "--n", "3"});
    CHECK(r.err.find("36/36") != std::string::npos);
    CHECK(invoke({"verify", "--n", "3", "--jobs", "1", "--json", "--quiet"}).out ==
          invoke({"verify", "--n", "3", "--jobs", "4", "--json", "--quiet"}).out);
}

TEST_CASE("regular, kernel and presentation") {
    auto r = invoke({"regular", "--lambda", "1,0,-1", "--mu", "1/4,1/8,-3/8"});
    CHECK(r.code == 0);
    CHECK(r.out == "regular\n");
    r = invoke({"regular", "--lambda", "1,0,-1", "--mu", "0,0,0"});
    CHECK(r.code == 3);
    CHECK(r.out.rfind("not regular\n", 0) == 0);
    CHECK(invoke({"kernel", "--lambda", "1,0,-1", "--mu", "0,0,0"}).code == 3);

    r = invoke({"kernel", "--lambda", "1/2,-1/2", "--mu", "0,0"});
    CHECK(r.code == 0);
    CHECK(r.out == "v=1,2 gamma=1,2 k=1: 1 - y2*x1^-1\nv=1,2 gamma=2,1 k=1: 1 - y1*x1^-1\n");

    const auto path = std::filesystem::temp_directory_path() / "kflag_test_presentation.json";
    r = invoke({"presentation", "--lambda", "1/2,-1/2", "--mu", "0,0", "--out", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream file(path);
    std::stringstream text;
    text << file.rdbuf();
    CHECK(text.str() == invoke({"presentation", "--lambda", "1/2,-1/2", "--mu", "0,0"}).out);
    std::filesystem::remove(path);
}
