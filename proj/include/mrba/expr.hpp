#ifndef MRBA_EXPR_HPP
#define MRBA_EXPR_HPP

#include <string>
#include <vector>

#include "mrba/rational.hpp"

namespace mrba {

// Formal expression over the free algebra: sums, rational scalings,
// products, operator applications, generator basis leaves and the unit.
struct Expr {
    enum class Kind { sum, scale, product, op, gen, unit };

    Kind kind = Kind::unit;
    Rational coeff;                // scale
    std::string symbol;            // gen
    std::vector<Expr> children;    // sum, product: any count; scale, op: one

    static Expr sum(std::vector<Expr> terms);
    static Expr scale(Rational c, Expr e);
    static Expr product(std::vector<Expr> factors);
    static Expr op(Expr e);
    static Expr gen(std::string symbol);
    static Expr unit();

    std::size_t product_nodes() const;
    std::size_t op_nodes() const;

    friend bool operator==(const Expr&, const Expr&) = default;
};

// Structural dump, e.g. Sum(Scale(1/2, Op(Unit)), Gen(a)).
std::string to_debug_string(const Expr& e);

} // namespace mrba

#endif
