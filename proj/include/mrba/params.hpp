#ifndef MRBA_PARAMS_HPP
#define MRBA_PARAMS_HPP

#include "mrba/rational.hpp"

namespace mrba {

// lambda drives the coalgebra; kappa is the weight of the operator identity.
// The bialgebra and Hopf structures exist only when kappa == -lambda^2.
struct Params {
    Rational lambda{1};
    Rational kappa{-1};

    static Params hopf(const Rational& lambda) { return {lambda, -(lambda * lambda)}; }
    static Params algebra_only(const Rational& kappa) { return {Rational(0), kappa}; }

    bool is_hopf() const { return kappa == -(lambda * lambda); }

    friend bool operator==(const Params&, const Params&) = default;
};

} // namespace mrba

#endif
