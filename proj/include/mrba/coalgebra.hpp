#ifndef MRBA_COALGEBRA_HPP
#define MRBA_COALGEBRA_HPP

#include <map>
#include <mutex>

#include "mrba/algebra.hpp"
#include "mrba/word.hpp"

namespace mrba {

// Tensor helpers. Tensor2 / Tensor3 elements live in F(A)^{(x)2,3}.
Tensor2 tensor(const LinComb& a, const LinComb& b);
Tensor3 tensor(const LinComb& a, const LinComb& b, const LinComb& c);

// Counit, coproduct and the tensor-level operators on F(A). Requires
// kappa == -lambda^2; the constructor throws std::invalid_argument
// otherwise. The referenced Algebra must outlive this object.
//
// The coproduct is the operator-preserving algebra map determined by
// Delta(a) = Delta_A(a) on letters:
//   Delta(1)        = 1 (x) 1
//   Delta([w])      = Pt(Delta(w))
//   Delta(x1...xb)  = Delta(x1) * ... * Delta(xb)      (componentwise)
// where Pt is the weight -lambda^2 operator on F(A) (x) F(A).
class Coalgebra {
public:
    explicit Coalgebra(const Algebra& alg, bool memoize = false);

    const Algebra& algebra() const { return alg_; }
    const Rational& lambda() const { return alg_.params().lambda; }

    // Multiplicative on factors, eps_A on letters, eps([w]) = -lambda eps(w).
    Rational counit(const Word& w) const;
    Rational counit(const LinComb& u) const;

    Tensor2 coproduct(const Word& w) const;
    Tensor2 coproduct(const LinComb& u) const;

    Tensor2 mul(const Tensor2& s, const Tensor2& t) const;
    Tensor3 mul(const Tensor3& s, const Tensor3& t) const;

    // Pt(x (x) y) = (P(x) + lambda x) (x) eps(y) 1 + x (x) P(y)
    Tensor2 op(const Tensor2& t) const;
    // Ptt(x (x) y (x) z) = (P(x) + lambda x) (x) eps(y)1 (x) eps(z)1
    //                    + x (x) (P(y) + lambda y) (x) eps(z)1 + x (x) y (x) P(z)
    Tensor3 op(const Tensor3& t) const;

    // Pt(s)Pt(t) - Pt(s Pt(t)) - Pt(Pt(s) t) + lambda^2 st, and the Tensor3
    // analogue.
    Tensor2 op_residual(const Tensor2& s, const Tensor2& t) const;
    Tensor3 op_residual(const Tensor3& s, const Tensor3& t) const;

    // (Delta (x) id) Delta and (id (x) Delta) Delta.
    Tensor3 coproduct_left(const LinComb& u) const;
    Tensor3 coproduct_right(const LinComb& u) const;

    // (eps (x) id) Delta and (id (x) eps) Delta.
    LinComb counit_left(const LinComb& u) const;
    LinComb counit_right(const LinComb& u) const;

private:
    const Algebra& alg_;
    bool memoize_;
    mutable std::mutex cache_mutex_;
    mutable std::map<Word, Tensor2> cache_;
};

} // namespace mrba

#endif
