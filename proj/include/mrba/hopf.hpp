#ifndef MRBA_HOPF_HPP
#define MRBA_HOPF_HPP

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "mrba/coalgebra.hpp"

namespace mrba {

// Largest word degree in the support. Throws std::domain_error for 0.
std::size_t filtration_degree(const LinComb& u, const GeneratorBialgebra& gen);

// Linear endomorphisms of F(A) usable in convolutions: identity, eta.eps,
// the antipode, the operator P, compositions, and caller supplied maps.
class EndoMap {
public:
    enum class Kind { identity, unit_counit, antipode, op, compose, custom };
    using Fn = std::function<LinComb(const Word&)>;

    static EndoMap identity() { return EndoMap(Kind::identity); }
    static EndoMap unit_counit() { return EndoMap(Kind::unit_counit); }
    static EndoMap antipode() { return EndoMap(Kind::antipode); }
    static EndoMap op() { return EndoMap(Kind::op); }
    // outer . inner
    static EndoMap compose(EndoMap outer, EndoMap inner);
    static EndoMap custom(Fn fn, std::string name = "custom");

    Kind kind() const { return kind_; }
    std::string name() const;

private:
    explicit EndoMap(Kind k) : kind_(k) {}
    friend class Hopf;

    Kind kind_;
    std::shared_ptr<const EndoMap> outer_, inner_;
    Fn fn_;
    std::string name_;
};

// Antipode and convolution on F(A) for a connected filtered generator.
// The referenced Coalgebra must outlive this object.
class Hopf {
public:
    explicit Hopf(const Coalgebra& co, bool memoize = true);

    const Coalgebra& coalgebra() const { return co_; }
    const Algebra& algebra() const { return co_.algebra(); }

    // S(1) = 1 and, for u in ker eps,
    //   S(u) = -u - sum S(u'_(1)) u'_(2),  sum u'_(1) (x) u'_(2) = (pi (x) pi) Delta(u)
    // with pi(v) = v - eps(v) 1. Both legs have strictly lower filtration
    // degree than u; a violation throws std::logic_error.
    LinComb antipode(const Word& w) const;
    LinComb antipode(const LinComb& u) const;

    LinComb apply(const EndoMap& f, const Word& w) const;
    LinComb apply(const EndoMap& f, const LinComb& u) const;

    // (f * g)(u) = mul . (f (x) g) . Delta (u)
    LinComb convolution(const EndoMap& f, const EndoMap& g, const LinComb& u) const;

private:
    const Coalgebra& co_;
    bool memoize_;
    mutable std::mutex cache_mutex_;
    mutable std::map<Word, LinComb> cache_;
};

} // namespace mrba

#endif
