#include "mrba/hopf.hpp"

#include <algorithm>
#include <stdexcept>

namespace mrba {

std::size_t filtration_degree(const LinComb& u, const GeneratorBialgebra& gen) {
    if (u.is_zero()) throw std::domain_error("filtration degree of zero is undefined");
    std::size_t d = 0;
    for (const auto& [w, c] : u) d = std::max(d, degree(w, gen));
    return d;
}

EndoMap EndoMap::compose(EndoMap outer, EndoMap inner) {
    EndoMap m(Kind::compose);
    m.outer_ = std::make_shared<const EndoMap>(std::move(outer));
    m.inner_ = std::make_shared<const EndoMap>(std::move(inner));
    return m;
}

EndoMap EndoMap::custom(Fn fn, std::string name) {
    if (!fn) throw std::invalid_argument("custom endomorphism needs a callable");
    EndoMap m(Kind::custom);
    m.fn_ = std::move(fn);
    m.name_ = std::move(name);
    return m;
}

std::string EndoMap::name() const {
    switch (kind_) {
    case Kind::identity: return "id";
    case Kind::unit_counit: return "eta.eps";
    case Kind::antipode: return "S";
    case Kind::op: return "P";
    case Kind::compose: return outer_->name() + " . " + inner_->name();
    case Kind::custom: return name_;
    }
    return {};
}

Hopf::Hopf(const Coalgebra& co, bool memoize) : co_(co), memoize_(memoize) {}

LinComb Hopf::antipode(const Word& w) const {
    if (w.empty()) return algebra().one();
    if (memoize_) {
        std::lock_guard lock(cache_mutex_);
        if (auto it = cache_.find(w); it != cache_.end()) return it->second;
    }
    const auto& gen = algebra().generator();
    const std::size_t dw = degree(w, gen);
    const Rational ew = co_.counit(w);

    // S(w) = eps(w) 1 + S(pi w), S(pi w) = -pi(w) - sum c S(pi x1) pi(x2)
    LinComb out = algebra().one().scaled(ew);
    LinComb pi_w = LinComb::of(w);
    pi_w.add_term(Word(), -ew);
    out -= pi_w;
    for (const auto& [pair, c] : co_.coproduct(w)) {
        const auto& [x1, x2] = pair;
        if (x1.empty() || x2.empty()) continue;  // pi(1) = 0
        if (degree(x1, gen) >= dw || degree(x2, gen) >= dw)
            throw std::logic_error("antipode recursion met a coproduct leg of non-decreasing degree");
        LinComb s1 = antipode(x1);
        s1.add_term(Word(), -co_.counit(x1));
        LinComb p2 = LinComb::of(x2);
        p2.add_term(Word(), -co_.counit(x2));
        out.add(algebra().mul(s1, p2), -c);
    }
    if (memoize_) {
        std::lock_guard lock(cache_mutex_);
        cache_.try_emplace(w, out);
    }
    return out;
}

LinComb Hopf::antipode(const LinComb& u) const {
    LinComb out;
    for (const auto& [w, c] : u) out.add(antipode(w), c);
    return out;
}

LinComb Hopf::apply(const EndoMap& f, const Word& w) const {
    switch (f.kind_) {
    case EndoMap::Kind::identity: return LinComb::of(w);
    case EndoMap::Kind::unit_counit: return algebra().one().scaled(co_.counit(w));
    case EndoMap::Kind::antipode: return antipode(w);
    case EndoMap::Kind::op: return LinComb::of(Word::bracket(w));
    case EndoMap::Kind::compose: return apply(*f.outer_, apply(*f.inner_, w));
    case EndoMap::Kind::custom: return f.fn_(w);
    }
    throw std::logic_error("unhandled endomorphism kind");
}

LinComb Hopf::apply(const EndoMap& f, const LinComb& u) const {
    LinComb out;
    for (const auto& [w, c] : u) out.add(apply(f, w), c);
    return out;
}

LinComb Hopf::convolution(const EndoMap& f, const EndoMap& g, const LinComb& u) const {
    LinComb out;
    for (const auto& [pair, c] : co_.coproduct(u))
        out.add(algebra().mul(apply(f, pair.first), apply(g, pair.second)), c);
    return out;
}

} // namespace mrba
