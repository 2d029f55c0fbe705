#ifndef MRBA_ALGEBRA_HPP
#define MRBA_ALGEBRA_HPP

#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <utility>

#include "mrba/expr.hpp"
#include "mrba/generator.hpp"
#include "mrba/params.hpp"
#include "mrba/word.hpp"

namespace mrba {

// The free modified Rota-Baxter algebra F(A) of weight kappa on a generator
// algebra A: bracketed words with the product defined by recursion on
// depth and breadth, and the operator P(w) = [w].
//
// All operations are pure. With memoize = true, bracket-bracket products
// are cached; the cache is internally synchronised and never changes a
// result.
class Algebra {
public:
    Algebra(std::shared_ptr<const GeneratorBialgebra> gen, Params params, bool memoize = false);

    Algebra(const Algebra&) = delete;
    Algebra& operator=(const Algebra&) = delete;

    const GeneratorBialgebra& generator() const { return *gen_; }
    std::shared_ptr<const GeneratorBialgebra> generator_ptr() const { return gen_; }
    const Params& params() const { return params_; }
    const Rational& kappa() const { return params_.kappa; }

    LinComb one() const { return LinComb::of(Word()); }
    // j_A on a basis element; the unit maps to the empty word.
    LinComb embed(const GenIndex& i) const;
    LinComb embed(const GenElement& a) const;

    LinComb mul(const Word& x, const Word& y) const;
    LinComb mul(const LinComb& u, const LinComb& v) const;
    LinComb mul(const LinComb& u, const Word& y) const;
    LinComb mul(const Word& x, const LinComb& v) const;

    LinComb apply_op(const LinComb& u) const;

    // prefix * m * suffix for every term m of middle, re-canonicalised:
    // colliding letters multiply in A and, when m is the unit, the
    // neighbouring factors of prefix and suffix are multiplied out.
    LinComb splice(std::span<const Factor> prefix, const LinComb& middle,
                   std::span<const Factor> suffix) const;

    // P(u)P(v) - P(uP(v)) - P(P(u)v) - kappa uv; zero exactly when the
    // operator identity holds on (u, v).
    LinComb mrb_residual(const LinComb& u, const LinComb& v) const;

    // Evaluates an expression tree through mul / apply_op. Generator leaves
    // must be basis keys of A.
    LinComb evaluate(const Expr& e) const;

    std::size_t cache_size() const;

private:
    LinComb bracket_product(const Word& u, const Word& v) const;

    std::shared_ptr<const GeneratorBialgebra> gen_;
    Params params_;
    bool memoize_;
    mutable std::mutex cache_mutex_;
    mutable std::map<std::pair<Word, Word>, LinComb> cache_;
};

} // namespace mrba

#endif
