#include "mrba/expr.hpp"

namespace mrba {

Expr Expr::sum(std::vector<Expr> terms) {
    Expr e;
    e.kind = Kind::sum;
    e.children = std::move(terms);
    return e;
}

Expr Expr::scale(Rational c, Expr inner) {
    Expr e;
    e.kind = Kind::scale;
    e.coeff = std::move(c);
    e.children.push_back(std::move(inner));
    return e;
}

Expr Expr::product(std::vector<Expr> factors) {
    Expr e;
    e.kind = Kind::product;
    e.children = std::move(factors);
    return e;
}

Expr Expr::op(Expr inner) {
    Expr e;
    e.kind = Kind::op;
    e.children.push_back(std::move(inner));
    return e;
}

Expr Expr::gen(std::string symbol) {
    Expr e;
    e.kind = Kind::gen;
    e.symbol = std::move(symbol);
    return e;
}

Expr Expr::unit() { return Expr{}; }

std::size_t Expr::product_nodes() const {
    std::size_t n = 0;
    if (kind == Kind::product && !children.empty()) n += children.size() - 1;
    for (const auto& c : children) n += c.product_nodes();
    return n;
}

std::size_t Expr::op_nodes() const {
    std::size_t n = kind == Kind::op ? 1 : 0;
    for (const auto& c : children) n += c.op_nodes();
    return n;
}

std::string to_debug_string(const Expr& e) {
    auto list = [](const std::vector<Expr>& xs) {
        std::string s;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (i) s += ", ";
            s += to_debug_string(xs[i]);
        }
        return s;
    };
    switch (e.kind) {
    case Expr::Kind::sum: return "Sum(" + list(e.children) + ")";
    case Expr::Kind::scale: return "Scale(" + e.coeff.text() + ", " + to_debug_string(e.children.at(0)) + ")";
    case Expr::Kind::product: return "Prod(" + list(e.children) + ")";
    case Expr::Kind::op: return "Op(" + to_debug_string(e.children.at(0)) + ")";
    case Expr::Kind::gen: return "Gen(" + e.symbol + ")";
    case Expr::Kind::unit: return "Unit";
    }
    return {};
}

} // namespace mrba
