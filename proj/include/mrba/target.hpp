#ifndef MRBA_TARGET_HPP
#define MRBA_TARGET_HPP

#include <concepts>
#include <stdexcept>
#include <vector>

#include "mrba/algebra.hpp"
#include "mrba/generator.hpp"
#include "mrba/word.hpp"

namespace mrba {

template <class R>
concept AssociativeRing = requires(const R& r, const typename R::Element& x, const Rational& c) {
    { r.one() } -> std::convertible_to<typename R::Element>;
    { r.mul(x, x) } -> std::convertible_to<typename R::Element>;
    { r.add(x, x) } -> std::convertible_to<typename R::Element>;
    { r.scale(c, x) } -> std::convertible_to<typename R::Element>;
    { r.equal(x, x) } -> std::convertible_to<bool>;
};

// A modified Rota-Baxter algebra that can receive the universal morphism.
template <class T>
concept TargetMRBA = AssociativeRing<T> && requires(const T& t, const typename T::Element& x) {
    { t.op(x) } -> std::convertible_to<typename T::Element>;
    { t.kappa() } -> std::convertible_to<Rational>;
};

// P(x)P(y) - P(xP(y)) - P(P(x)y) - kappa xy in the target.
template <TargetMRBA T>
typename T::Element target_residual(const T& t, const typename T::Element& x, const typename T::Element& y) {
    auto px = t.op(x);
    auto py = t.op(y);
    auto r = t.mul(px, py);
    r = t.add(r, t.scale(Rational(-1), t.op(t.mul(x, py))));
    r = t.add(r, t.scale(Rational(-1), t.op(t.mul(px, y))));
    r = t.add(r, t.scale(-t.kappa(), t.mul(x, y)));
    return r;
}

// --- rings --------------------------------------------------------------------

// The generator algebra A itself.
class GeneratorRing {
public:
    using Element = GenElement;
    explicit GeneratorRing(const GeneratorBialgebra& gen) : gen_(gen) {}

    Element one() const { return GenElement::of(GeneratorBialgebra::unit()); }
    Element mul(const Element& x, const Element& y) const {
        Element out;
        for (const auto& [i, a] : x)
            for (const auto& [j, b] : y) out.add(gen_.mul(i, j), a * b);
        return out;
    }
    Element add(const Element& x, const Element& y) const { return x + y; }
    Element scale(const Rational& c, const Element& x) const { return x.scaled(c); }
    bool equal(const Element& x, const Element& y) const { return x == y; }

private:
    const GeneratorBialgebra& gen_;
};

// F(A) as a plain associative algebra.
class FreeRing {
public:
    using Element = LinComb;
    explicit FreeRing(const Algebra& alg) : alg_(alg) {}

    Element one() const { return alg_.one(); }
    Element mul(const Element& x, const Element& y) const { return alg_.mul(x, y); }
    Element add(const Element& x, const Element& y) const { return x + y; }
    Element scale(const Rational& c, const Element& x) const { return x.scaled(c); }
    bool equal(const Element& x, const Element& y) const { return x == y; }

private:
    const Algebra& alg_;
};

// --- targets ------------------------------------------------------------------

// k with P = -lambda id, weight -lambda^2.
class ScalarMRBA {
public:
    using Element = Rational;
    explicit ScalarMRBA(Rational lambda) : lambda_(std::move(lambda)) {}

    Element one() const { return 1; }
    Element mul(const Element& x, const Element& y) const { return x * y; }
    Element add(const Element& x, const Element& y) const { return x + y; }
    Element scale(const Rational& c, const Element& x) const { return c * x; }
    bool equal(const Element& x, const Element& y) const { return x == y; }
    Element op(const Element& x) const { return -lambda_ * x; }
    Rational kappa() const { return -(lambda_ * lambda_); }

private:
    Rational lambda_;
};

// Any associative algebra with P = lambda id, weight -lambda^2.
template <AssociativeRing Ring>
class ScaledIdentityMRBA {
public:
    using Element = typename Ring::Element;
    ScaledIdentityMRBA(Ring ring, Rational lambda) : ring_(std::move(ring)), lambda_(std::move(lambda)) {}

    Element one() const { return ring_.one(); }
    Element mul(const Element& x, const Element& y) const { return ring_.mul(x, y); }
    Element add(const Element& x, const Element& y) const { return ring_.add(x, y); }
    Element scale(const Rational& c, const Element& x) const { return ring_.scale(c, x); }
    bool equal(const Element& x, const Element& y) const { return ring_.equal(x, y); }
    Element op(const Element& x) const { return ring_.scale(lambda_, x); }
    Rational kappa() const { return -(lambda_ * lambda_); }

    const Ring& ring() const { return ring_; }

private:
    Ring ring_;
    Rational lambda_;
};

// F(A) with its own operator, as a target.
class FreeTarget {
public:
    using Element = LinComb;
    explicit FreeTarget(const Algebra& alg) : alg_(alg) {}

    Element one() const { return alg_.one(); }
    Element mul(const Element& x, const Element& y) const { return alg_.mul(x, y); }
    Element add(const Element& x, const Element& y) const { return x + y; }
    Element scale(const Rational& c, const Element& x) const { return x.scaled(c); }
    bool equal(const Element& x, const Element& y) const { return x == y; }
    Element op(const Element& x) const { return alg_.apply_op(x); }
    Rational kappa() const { return alg_.kappa(); }

private:
    const Algebra& alg_;
};

// --- universal morphism ---------------------------------------------------------

namespace detail {

template <TargetMRBA T, class F>
typename T::Element image_of(const T& target, const F& f, const Word& w,
                             std::vector<typename T::Element>& operands) {
    auto out = target.one();
    for (const auto& fac : w.factors()) {
        if (fac.is_letter()) {
            out = target.mul(out, f(fac.key()));
        } else {
            auto inner = image_of(target, f, fac.inner(), operands);
            if (operands.size() < 3) operands.push_back(inner);
            out = target.mul(out, target.op(inner));
        }
    }
    return out;
}

} // namespace detail

// The unique operator-preserving algebra map F(A) -> target extending f,
// where f sends basis keys of A (never the unit) to target elements and is
// assumed to extend to an algebra map. Letters go through f, brackets
// through target.op, factors multiply in the target.
//
// Throws std::invalid_argument when the target weight differs from the
// algebra weight, and std::domain_error when the target operator fails the
// identity on the bracket operands met while evaluating u.
template <TargetMRBA T, class F>
typename T::Element universal_map(const T& target, const F& f, const LinComb& u, const Params& params) {
    if (!(Rational(target.kappa()) == params.kappa))
        throw std::invalid_argument("target weight " + Rational(target.kappa()).text() +
                                    " does not match algebra weight " + params.kappa.text());
    std::vector<typename T::Element> operands;
    auto out = target.scale(Rational(0), target.one());
    for (const auto& [w, c] : u) out = target.add(out, target.scale(c, detail::image_of(target, f, w, operands)));

    const auto zero = target.scale(Rational(0), target.one());
    for (const auto& x : operands)
        for (const auto& y : operands)
            if (!target.equal(target_residual(target, x, y), zero))
                throw std::domain_error("target operator violates the modified Rota-Baxter identity");
    return out;
}

} // namespace mrba

#endif
