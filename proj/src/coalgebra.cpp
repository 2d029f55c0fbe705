#include "mrba/coalgebra.hpp"

#include <stdexcept>

namespace mrba {

Tensor2 tensor(const LinComb& a, const LinComb& b) {
    Tensor2 out;
    for (const auto& [x, ca] : a)
        for (const auto& [y, cb] : b) out.add_term({x, y}, ca * cb);
    return out;
}

Tensor3 tensor(const LinComb& a, const LinComb& b, const LinComb& c) {
    Tensor3 out;
    for (const auto& [x, ca] : a)
        for (const auto& [y, cb] : b)
            for (const auto& [z, cc] : c) out.add_term({x, y, z}, ca * cb * cc);
    return out;
}

Coalgebra::Coalgebra(const Algebra& alg, bool memoize) : alg_(alg), memoize_(memoize) {
    if (!alg_.params().is_hopf())
        throw std::invalid_argument("coalgebra structure requires kappa = -lambda^2 (got lambda = " +
                                    alg_.params().lambda.text() + ", kappa = " + alg_.params().kappa.text() + ")");
}

Rational Coalgebra::counit(const Word& w) const {
    Rational out(1);
    for (const auto& f : w.factors()) {
        out *= f.is_letter() ? alg_.generator().counit(f.key()) : -lambda() * counit(f.inner());
        if (out.is_zero()) break;
    }
    return out;
}

Rational Coalgebra::counit(const LinComb& u) const {
    Rational out;
    for (const auto& [w, c] : u) out += c * counit(w);
    return out;
}

Tensor2 Coalgebra::coproduct(const Word& w) const {
    if (memoize_) {
        std::lock_guard lock(cache_mutex_);
        if (auto it = cache_.find(w); it != cache_.end()) return it->second;
    }
    Tensor2 out = Tensor2::of({Word(), Word()});
    for (const auto& f : w.factors()) {
        Tensor2 factor;
        if (f.is_letter()) {
            for (const auto& [pair, c] : alg_.generator().coproduct(f.key()))
                factor.add(tensor(alg_.embed(pair.first), alg_.embed(pair.second)), c);
        } else {
            factor = op(coproduct(f.inner()));
        }
        out = mul(out, factor);
    }
    if (memoize_) {
        std::lock_guard lock(cache_mutex_);
        cache_.try_emplace(w, out);
    }
    return out;
}

Tensor2 Coalgebra::coproduct(const LinComb& u) const {
    Tensor2 out;
    for (const auto& [w, c] : u) out.add(coproduct(w), c);
    return out;
}

Tensor2 Coalgebra::mul(const Tensor2& s, const Tensor2& t) const {
    Tensor2 out;
    for (const auto& [p, a] : s)
        for (const auto& [q, b] : t) {
            LinComb left = alg_.mul(p.first, q.first);
            LinComb right = alg_.mul(p.second, q.second);
            out.add(tensor(left, right), a * b);
        }
    return out;
}

Tensor3 Coalgebra::mul(const Tensor3& s, const Tensor3& t) const {
    Tensor3 out;
    for (const auto& [p, a] : s)
        for (const auto& [q, b] : t) {
            LinComb x = alg_.mul(std::get<0>(p), std::get<0>(q));
            LinComb y = alg_.mul(std::get<1>(p), std::get<1>(q));
            LinComb z = alg_.mul(std::get<2>(p), std::get<2>(q));
            out.add(tensor(x, y, z), a * b);
        }
    return out;
}

Tensor2 Coalgebra::op(const Tensor2& t) const {
    Tensor2 out;
    for (const auto& [p, c] : t) {
        const auto& [x, y] = p;
        Rational ey = counit(y);
        if (!ey.is_zero()) {
            out.add_term({Word::bracket(x), Word()}, c * ey);
            out.add_term({x, Word()}, c * ey * lambda());
        }
        out.add_term({x, Word::bracket(y)}, c);
    }
    return out;
}

Tensor3 Coalgebra::op(const Tensor3& t) const {
    Tensor3 out;
    for (const auto& [p, c] : t) {
        const auto& [x, y, z] = p;
        Rational ey = counit(y);
        Rational ez = counit(z);
        if (!(ey * ez).is_zero()) {
            out.add_term({Word::bracket(x), Word(), Word()}, c * ey * ez);
            out.add_term({x, Word(), Word()}, c * ey * ez * lambda());
        }
        if (!ez.is_zero()) {
            out.add_term({x, Word::bracket(y), Word()}, c * ez);
            out.add_term({x, y, Word()}, c * ez * lambda());
        }
        out.add_term({x, y, Word::bracket(z)}, c);
    }
    return out;
}

Tensor2 Coalgebra::op_residual(const Tensor2& s, const Tensor2& t) const {
    const Tensor2 ps = op(s);
    const Tensor2 pt = op(t);
    Tensor2 r = mul(ps, pt);
    r -= op(mul(s, pt));
    r -= op(mul(ps, t));
    r.add(mul(s, t), lambda() * lambda());
    return r;
}

Tensor3 Coalgebra::op_residual(const Tensor3& s, const Tensor3& t) const {
    const Tensor3 ps = op(s);
    const Tensor3 pt = op(t);
    Tensor3 r = mul(ps, pt);
    r -= op(mul(s, pt));
    r -= op(mul(ps, t));
    r.add(mul(s, t), lambda() * lambda());
    return r;
}

Tensor3 Coalgebra::coproduct_left(const LinComb& u) const {
    Tensor3 out;
    for (const auto& [p, c] : coproduct(u))
        for (const auto& [q, d] : coproduct(p.first)) out.add_term({q.first, q.second, p.second}, c * d);
    return out;
}

Tensor3 Coalgebra::coproduct_right(const LinComb& u) const {
    Tensor3 out;
    for (const auto& [p, c] : coproduct(u))
        for (const auto& [q, d] : coproduct(p.second)) out.add_term({p.first, q.first, q.second}, c * d);
    return out;
}

LinComb Coalgebra::counit_left(const LinComb& u) const {
    LinComb out;
    for (const auto& [p, c] : coproduct(u)) out.add_term(p.second, c * counit(p.first));
    return out;
}

LinComb Coalgebra::counit_right(const LinComb& u) const {
    LinComb out;
    for (const auto& [p, c] : coproduct(u)) out.add_term(p.first, c * counit(p.second));
    return out;
}

} // namespace mrba
