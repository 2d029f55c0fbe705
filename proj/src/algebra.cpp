#include "mrba/algebra.hpp"

#include <stdexcept>

namespace mrba {

namespace {

Word word_of(std::span<const Factor> fs) { return Word::join(fs, {}); }

bool collides(const Factor& a, const Factor& b) { return a.kind() == b.kind(); }

} // namespace

Algebra::Algebra(std::shared_ptr<const GeneratorBialgebra> gen, Params params, bool memoize)
    : gen_(std::move(gen)), params_(std::move(params)), memoize_(memoize) {
    if (!gen_) throw std::invalid_argument("algebra needs a generator");
}

LinComb Algebra::embed(const GenIndex& i) const {
    if (!gen_->contains(i)) throw std::out_of_range("unknown generator basis element '" + i + "'");
    return LinComb::of(i.empty() ? Word() : Word::letter(i));
}

LinComb Algebra::embed(const GenElement& a) const {
    LinComb out;
    for (const auto& [i, c] : a) out.add(embed(i), c);
    return out;
}

LinComb Algebra::mul(const Word& x, const Word& y) const {
    if (x.empty()) return LinComb::of(y);
    if (y.empty()) return LinComb::of(x);
    const auto& xf = x.factors();
    const auto& yf = y.factors();
    if (!collides(x.back(), y.front())) return LinComb::of(Word::join(xf, yf));

    std::span<const Factor> prefix(xf.data(), xf.size() - 1);
    std::span<const Factor> suffix(yf.data() + 1, yf.size() - 1);
    LinComb middle;
    if (x.back().is_letter()) {
        for (const auto& [k, c] : gen_->mul(x.back().key(), y.front().key()))
            middle.add_term(k.empty() ? Word() : Word::letter(k), c);
    } else {
        middle = bracket_product(x.back().inner(), y.front().inner());
    }
    return splice(prefix, middle, suffix);
}

LinComb Algebra::bracket_product(const Word& u, const Word& v) const {
    if (memoize_) {
        std::lock_guard lock(cache_mutex_);
        if (auto it = cache_.find({u, v}); it != cache_.end()) return it->second;
    }
    // [u][v] = [[u]v] + [u[v]] + kappa uv
    LinComb out = apply_op(mul(Word::bracket(u), v));
    out += apply_op(mul(u, Word::bracket(v)));
    out.add(mul(u, v), params_.kappa);
    if (memoize_) {
        std::lock_guard lock(cache_mutex_);
        cache_.try_emplace({u, v}, out);
    }
    return out;
}

LinComb Algebra::splice(std::span<const Factor> prefix, const LinComb& middle,
                        std::span<const Factor> suffix) const {
    LinComb out;
    for (const auto& [m, c] : middle) {
        const auto& mf = m.factors();
        bool clean;
        if (m.empty())
            clean = prefix.empty() || suffix.empty() || !collides(prefix.back(), suffix.front());
        else
            clean = (prefix.empty() || !collides(prefix.back(), m.front())) &&
                    (suffix.empty() || !collides(m.back(), suffix.front()));
        if (clean) {
            out.add_term(Word::join(prefix, mf, suffix), c);
            continue;
        }
        const Word right = word_of(suffix);
        for (const auto& [w, c2] : mul(word_of(prefix), m)) out.add(mul(w, right), c * c2);
    }
    return out;
}

LinComb Algebra::mul(const LinComb& u, const LinComb& v) const {
    LinComb out;
    for (const auto& [x, a] : u)
        for (const auto& [y, b] : v) out.add(mul(x, y), a * b);
    return out;
}

LinComb Algebra::mul(const LinComb& u, const Word& y) const {
    LinComb out;
    for (const auto& [x, a] : u) out.add(mul(x, y), a);
    return out;
}

LinComb Algebra::mul(const Word& x, const LinComb& v) const {
    LinComb out;
    for (const auto& [y, b] : v) out.add(mul(x, y), b);
    return out;
}

LinComb Algebra::apply_op(const LinComb& u) const {
    LinComb out;
    for (const auto& [w, c] : u) out.add_term(Word::bracket(w), c);
    return out;
}

LinComb Algebra::mrb_residual(const LinComb& u, const LinComb& v) const {
    const LinComb pu = apply_op(u);
    const LinComb pv = apply_op(v);
    LinComb r = mul(pu, pv);
    r -= apply_op(mul(u, pv));
    r -= apply_op(mul(pu, v));
    r.add(mul(u, v), -params_.kappa);
    return r;
}

LinComb Algebra::evaluate(const Expr& e) const {
    switch (e.kind) {
    case Expr::Kind::sum: {
        LinComb out;
        for (const auto& c : e.children) out += evaluate(c);
        return out;
    }
    case Expr::Kind::scale: return evaluate(e.children.at(0)).scaled(e.coeff);
    case Expr::Kind::product: {
        LinComb out = one();
        for (const auto& c : e.children) out = mul(out, evaluate(c));
        return out;
    }
    case Expr::Kind::op: return apply_op(evaluate(e.children.at(0)));
    case Expr::Kind::gen: return embed(e.symbol);
    case Expr::Kind::unit: return one();
    }
    throw std::logic_error("unhandled expression kind");
}

std::size_t Algebra::cache_size() const {
    std::lock_guard lock(cache_mutex_);
    return cache_.size();
}

} // namespace mrba
