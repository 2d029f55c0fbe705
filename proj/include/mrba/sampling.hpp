#ifndef MRBA_SAMPLING_HPP
#define MRBA_SAMPLING_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mrba/expr.hpp"
#include "mrba/word.hpp"

namespace mrba {

struct WordShape {
    std::size_t max_depth = 3;
    std::size_t max_breadth = 3;
    std::size_t max_letter_length = 1;  // letters are generator words of length 1..max
    std::size_t max_degree = 0;         // 0: unbounded
};

// Degree of a sampled word: letter length plus one per bracket.
std::size_t shape_degree(const Word& w);

// Seeded source of random words, combinations and expression trees over a
// single-character alphabet. Draws use only raw engine output, so a seed
// reproduces the same stream on every platform.
class Sampler {
public:
    Sampler(std::uint64_t seed, std::string alphabet, WordShape shape = {});

    std::uint64_t below(std::uint64_t n);
    bool coin() { return below(2) == 1; }

    GenIndex letter();
    // Canonical word of depth <= shape.max_depth and degree <= max_degree;
    // the unit is drawn with small probability.
    Word word();
    Word word(std::size_t max_depth);
    // 1..max_terms words with small nonzero rational coefficients.
    LinComb lincomb(std::size_t max_terms = 3);
    Rational coefficient();

    // Expression tree with at most the given product and P node counts.
    Expr expr(std::size_t max_products, std::size_t max_ops);

    const std::string& alphabet() const { return alphabet_; }

private:
    Word draw(std::size_t max_depth);
    Expr expr_with(std::size_t products, std::size_t ops);

    std::mt19937_64 rng_;
    std::string alphabet_;
    WordShape shape_;
};

// All expression trees built from binary products and unary P over the
// leaves {1} + alphabet, with at most max_products products and at most
// max_ops P nodes.
std::vector<Expr> enumerate_trees(const std::string& alphabet, std::size_t max_products, std::size_t max_ops);

} // namespace mrba

#endif
