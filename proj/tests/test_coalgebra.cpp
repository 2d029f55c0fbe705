#include "doctest.h"

#include "helpers.hpp"
#include "mrba/coalgebra.hpp"
#include "mrba/serialize.hpp"

using namespace mrba;
using test::ev;

TEST_CASE("counit") {
    for (const Rational lambda : {Rational(1), Rational(2), Rational(1, 2)}) {
        Algebra alg(test::free_ab(), Params::hopf(lambda));
        Coalgebra co(alg);
        CHECK(co.counit(ev(alg, "P(1)")) == -lambda);
        CHECK(co.counit(ev(alg, "P(P(1))")) == lambda * lambda);
        CHECK(co.counit(ev(alg, "1")) == Rational(1));
        CHECK(co.counit(ev(alg, "P(a)")).is_zero());
        CHECK(co.counit(ev(alg, "a*P(1)")).is_zero());
    }
}

TEST_CASE("coalgebra needs the Hopf weight") {
    Algebra alg(test::free_ab(), Params::algebra_only(3));
    CHECK_THROWS_AS(Coalgebra{alg}, std::invalid_argument);
}

TEST_CASE("coproduct of small words") {
    Algebra alg(test::free_ab(), Params::hopf(1));
    Coalgebra co(alg);
    CHECK(to_text(co.coproduct(ev(alg, "1"))) == "1 (x) 1");
    CHECK(to_text(co.coproduct(ev(alg, "a"))) == "1 (x) a + a (x) 1");
    CHECK(to_text(co.coproduct(ev(alg, "P(1)"))) == "1 (x) 1 + 1 (x) P(1) + P(1) (x) 1");
    CHECK(to_text(co.coproduct(ev(alg, "P(a)"))) == "1 (x) P(a) + P(a) (x) 1 + a (x) 1 + a (x) P(1)");

    Algebra alg2(test::free_ab(), Params::hopf(2));
    Coalgebra co2(alg2);
    CHECK(to_text(co2.coproduct(ev(alg2, "P(1)"))) == "2 1 (x) 1 + 1 (x) P(1) + P(1) (x) 1");
}

TEST_CASE("tensor operators") {
    Algebra alg(test::free_ab(), Params::hopf(1));
    Coalgebra co(alg);
    const LinComb one = alg.one(), p1 = ev(alg, "P(1)"), a = ev(alg, "a");

    // Pt(1 (x) 1) = P(1) (x) 1 + 1 (x) 1 + 1 (x) P(1)
    CHECK(co.op(tensor(one, one)) == tensor(p1, one) + tensor(one, one) + tensor(one, p1));
    // eps(a) = 0 kills the first part
    CHECK(co.op(tensor(one, a)) == tensor(one, ev(alg, "P(a)")));

    Tensor3 t = co.op(tensor(one, one, one));
    Tensor3 expected = tensor(p1 + one, one, one);
    expected += tensor(one, p1 + one, one);
    expected += tensor(one, one, p1);
    CHECK(t == expected);

    CHECK(co.op_residual(tensor(a, p1), tensor(ev(alg, "P(b)"), a)).is_zero());
    CHECK(co.op_residual(tensor(one, one, a), tensor(p1, one, one)).is_zero());
}

TEST_CASE("coalgebra laws on sample words") {
    Algebra alg(test::free_ab(), Params::hopf(Rational(1, 2)));
    Coalgebra co(alg);
    for (const char* text : {"P(a)*b", "P(P(1)*a)", "a*P(b*P(1))*a", "P(a)*b*P(b)"}) {
        CAPTURE(text);
        LinComb u = ev(alg, text);
        CHECK(co.coproduct_left(u) == co.coproduct_right(u));
        CHECK(co.counit_left(u) == u);
        CHECK(co.counit_right(u) == u);
        // Delta(P(u)) = P(u) (x) 1 + lambda u (x) 1 + (id (x) P) Delta(u)
        Tensor2 rhs = tensor(alg.apply_op(u), alg.one());
        rhs.add(tensor(u, alg.one()), co.lambda());
        for (const auto& [p, c] : co.coproduct(u)) rhs.add_term({p.first, Word::bracket(p.second)}, c);
        CHECK(co.coproduct(alg.apply_op(u)) == rhs);
    }
    LinComb x = ev(alg, "P(a)"), y = ev(alg, "P(1)*b");
    CHECK(co.coproduct(alg.mul(x, y)) == co.mul(co.coproduct(x), co.coproduct(y)));
}
