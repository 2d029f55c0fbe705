#include "doctest.h"

#include <sstream>

#include "helpers.hpp"
#include "mrba/cli.hpp"
#include "mrba/coalgebra.hpp"
#include "mrba/sampling.hpp"
#include "mrba/serialize.hpp"

using namespace mrba;

namespace {

struct Outcome {
    int code;
    std::string out, err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("parser builds expression trees") {
    CHECK(to_debug_string(parse_expr("P(a)*P(b)", "ab")) == "Prod(Op(Gen(a)), Op(Gen(b)))");
    CHECK(to_debug_string(parse_expr("1/2*P(1) + a", "ab")) == "Sum(Scale(1/2, Op(Unit)), Gen(a))");
    CHECK(to_debug_string(parse_expr(" 1 ", "ab")) == "Unit");
    CHECK(to_debug_string(parse_expr("a - 2*b", "ab")) == "Sum(Gen(a), Scale(-2, Gen(b)))");
    CHECK(to_debug_string(parse_expr("-a", "ab")) == "Scale(-1, Gen(a))");
    CHECK(parse_expr("(a+b)*P(a)", "ab").product_nodes() == 1);
    CHECK(parse_expr("P(P(a))*P(1)", "ab").op_nodes() == 3);
}

TEST_CASE("parser errors report offsets") {
    try {
        parse_expr("P(a", "ab");
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 3);
        CHECK(std::string(e.what()) == "expected ')' at offset 3");
    }
    CHECK_THROWS_AS(parse_expr("P(c)", "ab"), UnknownIdentifier);
    CHECK_THROWS_AS(parse_expr("a +", "ab"), ParseError);
    CHECK_THROWS_AS(parse_expr("1/0*a", "ab"), ParseError);
    CHECK_THROWS_AS(parse_expr("", "ab"), ParseError);
    CHECK_THROWS_AS(parse_expr("a b", "ab"), ParseError);
}

TEST_CASE("json serialization") {
    Algebra alg(test::free_ab(), Params::hopf(1));
    CHECK(to_json(alg.one()).dump() == R"({"terms":[{"coeff":"1/1","word":[]}]})");
    CHECK(to_json(test::ev(alg, "P(a)")).dump() == R"({"terms":[{"coeff":"1/1","word":[{"bracket":[{"letter":"a"}]}]}]})");
    CHECK(to_json(Rational(-3, 6)).dump() == R"({"value":"-1/2"})");
    CHECK(to_json(LinComb()).dump() == R"({"terms":[]})");

    LinComb u = test::ev(alg, "P(a)*b*P(P(1)) - 2/3*a*b + 5");
    CHECK(lincomb_from_json(to_json(u)) == u);
    CHECK(lincomb_from_json(nlohmann::json::parse(to_json(u).dump())) == u);
    Tensor2 t = tensor(u, test::ev(alg, "P(b)"));
    CHECK(tensor2_from_json(to_json(t)) == t);

    CHECK_THROWS_AS(word_from_json(nlohmann::json::parse(R"([{"letter":"a"},{"letter":"b"}])")), std::invalid_argument);
    CHECK_THROWS_AS(word_from_json(nlohmann::json::parse(R"([{"letter":""}])")), std::invalid_argument);
    CHECK_THROWS_AS(lincomb_from_json(nlohmann::json::parse(R"({"terms":[{"coeff":"x","word":[]}]})")), std::invalid_argument);
}

TEST_CASE("text and expression forms") {
    Algebra alg(test::free_ab(), Params::hopf(1));
    CHECK(to_text(LinComb()) == "0");
    CHECK(to_text(test::ev(alg, "-1/2*P(1) + 3")) == "3 - 1/2 P(1)");
    CHECK(to_text(test::ev(alg, "-1")) == "-1");
    Sampler s(11, "ab");
    for (int i = 0; i < 50; ++i) {
        LinComb u = s.lincomb();
        CHECK(test::ev(alg, to_expression(u)) == u);
    }
}

TEST_CASE("cli commands") {
    auto r = run({"eval", "P(a)*P(b)", "--lambda", "1", "--format", "text"});
    CHECK(r.code == 0);
    CHECK(r.out == "P(P(a)*b) + P(a*P(b)) - 1 ab\n");

    r = run({"counit", "P(1)", "--lambda", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "-2\n");

    r = run({"--lambda", "1/2", "antipode", "P(1)"});
    CHECK(r.out == "-1 - 1 P(1)\n");

    r = run({"deg", "P(a)*b"});
    CHECK(r.out == "3\n");
    r = run({"deg", "P(a)*b", "--format", "json"});
    CHECK(r.out == "{\"degree\":3}\n");

    r = run({"eval", "P(a)", "--format", "json"});
    CHECK(r.out == "{\"terms\":[{\"coeff\":\"1/1\",\"word\":[{\"bracket\":[{\"letter\":\"a\"}]}]}]}\n");

    r = run({"eval", "P(a)*P(a)", "--kappa", "3", "--alphabet", "a"});
    CHECK(r.code == 0);
    CHECK(r.out == "P(P(a)*a) + P(a*P(a)) + 3 aa\n");

    r = run({"coprod", "a", "--generator", "free"});
    CHECK(r.out == "1 (x) a + a (x) 1\n");

    r = run({"eval", "P(1)*P(1)", "--generator", "trivial"});
    CHECK(r.code == 0);
}

TEST_CASE("cli errors") {
    auto r = run({"eval", "P(a"});
    CHECK(r.code == 2);
    CHECK(r.err == "parse error: expected ')' at offset 3\n");

    r = run({"coprod", "P(a)", "--kappa", "3"});
    CHECK(r.code == 2);
    CHECK(r.err.find("kappa = -lambda^2") != std::string::npos);

    r = run({"check", "--suite", "antipode", "--kappa", "3"});
    CHECK(r.code == 2);

    CHECK(run({"eval", "c"}).code == 2);
    CHECK(run({"eval", "a", "--lambda", "x"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"check", "--suite", "nope"}).code == 2);
    CHECK(run({"eval", "a", "--alphabet", "aa"}).code == 2);
}

TEST_CASE("cli check") {
    auto r = run({"check", "--suite", "assoc", "--seed", "3", "--cases", "20"});
    CHECK(r.code == 0);
    CHECK(r.out == "PASS assoc (40 checks)\nall suites passed\n");

    r = run({"check", "--suite", "mrb", "--kappa", "3", "--cases", "10", "--format", "json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["passed"] == true);
    CHECK(j["suites"][0]["name"] == "mrb");

    // same seed, same bytes
    auto a = run({"check", "--suite", "all", "--seed", "5", "--cases", "5"});
    auto b = run({"check", "--suite", "all", "--seed", "5", "--cases", "5"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}
