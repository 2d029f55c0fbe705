#ifndef MRBA_ORACLE_HPP
#define MRBA_ORACLE_HPP

#include "mrba/expr.hpp"
#include "mrba/generator.hpp"
#include "mrba/params.hpp"
#include "mrba/word.hpp"

namespace mrba {

// Normal form of an expression by exhaustive string rewriting, without
// going through Algebra::mul. Terms are flat token strings over
// {letter, '[', ']'}; the two rules are
//
//   x y      -> x.y expanded by the structure constants of A
//   [u][v]   -> [[u]v] + [u[v]] + kappa uv
//
// applied innermost-first (deepest redex, then leftmost) after every
// subexpression has itself been normalised.
LinComb oracle_normal_form(const Expr& e, const Params& params, const GeneratorBialgebra& gen);

} // namespace mrba

#endif
