#include "doctest.h"

#include "helpers.hpp"
#include "mrba/hopf.hpp"
#include "mrba/serialize.hpp"

using namespace mrba;
using test::ev;

TEST_CASE("antipode on small words") {
    for (const Rational lambda : {Rational(1), Rational(3), Rational(-1, 2)}) {
        CAPTURE(lambda);
        Algebra alg(test::free_ab(), Params::hopf(lambda));
        Coalgebra co(alg);
        Hopf h(co);
        CHECK(h.antipode(alg.one()) == alg.one());
        CHECK(h.antipode(ev(alg, "a")) == ev(alg, "-1*a"));
        CHECK(h.antipode(ev(alg, "a*b")) == ev(alg, "b*a"));
        // S(P(1)) = -P(1) - 2 lambda
        LinComb expected = ev(alg, "-1*P(1)");
        expected.add_term(Word(), Rational(-2) * lambda);
        CHECK(h.antipode(ev(alg, "P(1)")) == expected);
    }
}

TEST_CASE("antipode is a convolution inverse") {
    Algebra alg(test::free_ab(), Params::hopf(1));
    Coalgebra co(alg);
    Hopf h(co);
    for (const auto& w : words_up_to_degree(alg.generator(), 3)) {
        CAPTURE(to_text(w));
        LinComb u = LinComb::of(w);
        LinComb e = h.apply(EndoMap::unit_counit(), u);
        CHECK(h.convolution(EndoMap::antipode(), EndoMap::identity(), u) == e);
        CHECK(h.convolution(EndoMap::identity(), EndoMap::antipode(), u) == e);
    }
}

TEST_CASE("antipode reverses products") {
    Algebra alg(test::free_ab(), Params::hopf(2));
    Coalgebra co(alg);
    Hopf h(co);
    LinComb x = ev(alg, "P(a)*b"), y = ev(alg, "P(1)");
    CHECK(h.antipode(alg.mul(x, y)) == alg.mul(h.antipode(y), h.antipode(x)));
    CHECK(h.antipode(ev(alg, "1/2*a + 3")) == ev(alg, "-1/2*a + 3"));
}

TEST_CASE("endomorphisms") {
    Algebra alg(test::free_ab(), Params::hopf(1));
    Coalgebra co(alg);
    Hopf h(co);
    LinComb u = ev(alg, "P(a) + 2");
    CHECK(h.apply(EndoMap::op(), u) == alg.apply_op(u));
    CHECK(h.apply(EndoMap::compose(EndoMap::op(), EndoMap::op()), u) == alg.apply_op(alg.apply_op(u)));
    CHECK(EndoMap::compose(EndoMap::antipode(), EndoMap::op()).name() == "S . P");
    auto twice = EndoMap::custom([](const Word& w) { return LinComb::of(w, 2); }, "2id");
    CHECK(h.apply(twice, u) == u.scaled(2));
    CHECK(twice.name() == "2id");
    CHECK_THROWS_AS(EndoMap::custom(nullptr), std::invalid_argument);
    // (id * eta.eps) = id
    CHECK(h.convolution(EndoMap::identity(), EndoMap::unit_counit(), u) == u);
}

TEST_CASE("filtration degree") {
    auto gen = test::free_ab();
    Algebra alg(gen, Params::hopf(1));
    CHECK(filtration_degree(ev(alg, "1"), *gen) == 0);
    CHECK(filtration_degree(ev(alg, "P(a)*b + a"), *gen) == 3);
    CHECK(filtration_degree(ev(alg, "P(P(1))"), *gen) == 2);
    CHECK_THROWS_AS(filtration_degree(LinComb(), *gen), std::domain_error);
}
