#include "doctest.h"

#include "mrba/generator.hpp"

using namespace mrba;

namespace {

GenTensor tensor(const GenElement& x, const GenElement& y) {
    GenTensor t;
    for (const auto& [i, a] : x)
        for (const auto& [j, b] : y) t.add_term({i, j}, a * b);
    return t;
}

GenElement mul(const GeneratorBialgebra& g, const GenElement& x, const GenElement& y) {
    GenElement out;
    for (const auto& [i, a] : x)
        for (const auto& [j, b] : y) out.add(g.mul(i, j), a * b);
    return out;
}

GenTensor mul(const GeneratorBialgebra& g, const GenTensor& s, const GenTensor& t) {
    GenTensor out;
    for (const auto& [p, a] : s)
        for (const auto& [q, b] : t)
            out.add(tensor(g.mul(p.first, q.first), g.mul(p.second, q.second)), a * b);
    return out;
}

} // namespace

TEST_CASE("free primitive generator structure constants") {
    FreePrimitiveGenerator g("ab");
    CHECK(g.mul("a", "b") == GenElement::of("ab"));
    CHECK(g.mul("ab", "") == GenElement::of("ab"));
    CHECK(g.counit("") == Rational(1));
    CHECK(g.counit("a").is_zero());
    CHECK(g.degree("aba") == 3);

    GenTensor da = GenTensor::of({"a", ""});
    da.add_term({"", "a"}, 1);
    CHECK(g.coproduct("a") == da);
    // aa splits as aa(x)1 + 2 a(x)a + 1(x)aa
    CHECK(g.coproduct("aa").coefficient({"a", "a"}) == Rational(2));
    CHECK(g.coproduct("aa").size() == 3);

    CHECK_THROWS_AS(g.mul("c", "a"), std::out_of_range);
    CHECK_THROWS_AS(FreePrimitiveGenerator("aa"), std::invalid_argument);
    CHECK_THROWS_AS(FreePrimitiveGenerator("P"), std::invalid_argument);
    CHECK_THROWS_AS(FreePrimitiveGenerator("a1"), std::invalid_argument);
}

TEST_CASE("trivial generator") {
    TrivialGenerator g;
    CHECK(g.basis_up_to(5) == std::vector<GenIndex>{""});
    CHECK(g.mul("", "") == GenElement::of(""));
    CHECK(g.counit("") == Rational(1));
    CHECK_THROWS_AS(g.counit("a"), std::out_of_range);
}

TEST_CASE("generator bialgebra axioms hold exhaustively") {
    for (const std::string alphabet : {"a", "ab", "abc"}) {
        FreePrimitiveGenerator g(alphabet);
        const auto basis = g.basis_up_to(alphabet.size() == 3 ? 3 : 4);
        CAPTURE(alphabet);
        for (const auto& x : basis) {
            const GenTensor dx = g.coproduct(x);
            // counit laws
            GenElement left, right;
            for (const auto& [p, c] : dx) {
                left.add_term(p.second, c * g.counit(p.first));
                right.add_term(p.first, c * g.counit(p.second));
            }
            CHECK(left == GenElement::of(x));
            CHECK(right == GenElement::of(x));
            // coassociativity
            using Key3 = std::tuple<GenIndex, GenIndex, GenIndex>;
            Combination<Key3> l3, r3;
            for (const auto& [p, c] : dx) {
                for (const auto& [q, d] : g.coproduct(p.first)) l3.add_term({q.first, q.second, p.second}, c * d);
                for (const auto& [q, d] : g.coproduct(p.second)) r3.add_term({p.first, q.first, q.second}, c * d);
            }
            CHECK(l3 == r3);
            // connected filtered basis
            CHECK((g.degree(x) == 0) == x.empty());
            CHECK(g.counit(x) == Rational(x.empty() ? 1 : 0));
            for (const auto& [p, c] : dx) CHECK(g.degree(p.first) + g.degree(p.second) <= g.degree(x));

            for (const auto& y : basis) {
                CHECK(g.coproduct(g.mul(x, y).begin()->first) == mul(g, dx, g.coproduct(y)));
                CHECK(g.counit(g.mul(x, y).begin()->first) == g.counit(x) * g.counit(y));
                for (const auto& z : basis)
                    CHECK(mul(g, mul(g, GenElement::of(x), GenElement::of(y)), GenElement::of(z)) ==
                          mul(g, GenElement::of(x), mul(g, GenElement::of(y), GenElement::of(z))));
            }
        }
    }
}

TEST_CASE("degree-bounded word enumeration") {
    FreePrimitiveGenerator a("a");
    // degree 0: 1; degree 1: a, [1]
    CHECK(words_up_to_degree(a, 0).size() == 1);
    CHECK(words_up_to_degree(a, 1).size() == 3);
    for (const auto& w : words_up_to_degree(a, 4)) {
        CHECK(is_canonical(w));
        CHECK(degree(w, a) <= 4);
    }
    TrivialGenerator t;
    // [1], [[1]]
    CHECK(words_up_to_degree(t, 2).size() == 3);
}
