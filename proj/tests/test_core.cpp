#include "doctest.h"

#include "mrba/generator.hpp"
#include "mrba/rational.hpp"
#include "mrba/word.hpp"

using namespace mrba;

TEST_CASE("rational parsing and printing") {
    CHECK(Rational::parse("3/6").str() == "1/2");
    CHECK(Rational::parse("-4/2").str() == "-2/1");
    CHECK(Rational::parse("-4/2").text() == "-2");
    CHECK(Rational::parse("+7").text() == "7");
    CHECK(Rational::parse("0").str() == "0/1");
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational arithmetic is exact") {
    Rational third(1, 3);
    CHECK(third + third + third == Rational(1));
    CHECK((Rational(1, 2) - Rational(3, 4)).str() == "-1/4");
    CHECK(Rational(-3, 4).abs() == Rational(3, 4));
    CHECK(Rational(2, 3) < Rational(3, 4));
    CHECK(Rational(2, -4) == Rational(-1, 2));
}

TEST_CASE("word structure") {
    Word a = Word::letter("a");
    Word pa = Word::bracket(a);
    // [x1] x2 [x3]
    Word w({Factor::bracket(Word::letter("a")), Factor::letter("b"), Factor::bracket(Word())});
    CHECK(w.breadth() == 3);
    CHECK(w.head() == 1);
    CHECK(w.tail() == 1);
    CHECK(a.breadth() == 1);
    CHECK(a.head() == 0);
    CHECK(a.tail() == 0);
    Word apb({Factor::letter("a"), Factor::bracket(Word::letter("b"))});
    CHECK(apb.breadth() == 2);
    CHECK(apb.head() == 0);
    CHECK(apb.tail() == 1);

    CHECK(Word().depth() == 0);
    CHECK(a.depth() == 0);
    CHECK(Word::bracket(pa).depth() == 2);
    CHECK(w.depth() == 1);

    CHECK_THROWS_AS(Word().breadth(), std::domain_error);
    CHECK_THROWS_AS(Word().head(), std::domain_error);
    CHECK_THROWS_AS(Word().tail(), std::domain_error);
    CHECK_THROWS_AS(Word({Factor::letter("a"), Factor::letter("b")}), std::invalid_argument);
    CHECK_THROWS_AS(Factor::letter(""), std::invalid_argument);
}

TEST_CASE("word text and ordering") {
    Word w({Factor::letter("ab"), Factor::bracket(Word::bracket(Word()))});
    CHECK(to_text(w) == "ab*P(P(1))");
    CHECK(to_text(Word()) == "1");
    CHECK(is_canonical(w));
    // brackets sort before letters; the unit is smallest
    CHECK(Word() < Word::bracket(Word()));
    CHECK(Word::bracket(Word::letter("b")) < Word::letter("a"));
    CHECK(Word::letter("a") < Word::letter("b"));
}

TEST_CASE("degree adds letters and brackets") {
    FreePrimitiveGenerator gen("ab");
    Word w({Factor::letter("ab"), Factor::bracket(Word::bracket(Word()))});
    CHECK(degree(w, gen) == 4);
    CHECK(degree(Word(), gen) == 0);
    CHECK(degree(Word::bracket(Word()), gen) == 1);
}

TEST_CASE("combinations drop zeros") {
    LinComb u = LinComb::of(Word::letter("a"), 2);
    u.add_term(Word::letter("a"), -2);
    CHECK(u.is_zero());
    LinComb v = LinComb::of(Word(), Rational(1, 2)) + LinComb::of(Word::letter("b"));
    CHECK(v.size() == 2);
    CHECK((v - v).is_zero());
    CHECK((Rational(2) * v).coefficient(Word()) == Rational(1));
    CHECK(v.coefficient(Word::letter("a")).is_zero());
}
