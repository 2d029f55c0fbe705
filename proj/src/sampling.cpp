#include "mrba/sampling.hpp"

#include <map>
#include <stdexcept>

namespace mrba {

Sampler::Sampler(std::uint64_t seed, std::string alphabet, WordShape shape)
    : rng_(seed), alphabet_(std::move(alphabet)), shape_(shape) {
    if (shape_.max_breadth == 0 || shape_.max_letter_length == 0)
        throw std::invalid_argument("word shape needs positive breadth and letter length");
}

std::uint64_t Sampler::below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("empty range");
    // rejection sampling keeps the draw unbiased and platform independent
    const std::uint64_t limit = rng_.max() - (rng_.max() % n);
    std::uint64_t x;
    do x = rng_(); while (x >= limit);
    return x % n;
}

GenIndex Sampler::letter() {
    if (alphabet_.empty()) throw std::logic_error("no letters in an empty alphabet");
    std::size_t len = 1 + below(shape_.max_letter_length);
    GenIndex key;
    for (std::size_t i = 0; i < len; ++i) key += alphabet_[below(alphabet_.size())];
    return key;
}

std::size_t shape_degree(const Word& w) {
    std::size_t d = 0;
    for (const auto& f : w.factors()) d += f.is_letter() ? f.key().size() : shape_degree(f.inner()) + 1;
    return d;
}

Word Sampler::word() { return word(shape_.max_depth); }

Word Sampler::word(std::size_t max_depth) {
    for (;;) {
        Word w = draw(max_depth);
        if (shape_.max_degree == 0 || shape_degree(w) <= shape_.max_degree) return w;
    }
}

Word Sampler::draw(std::size_t max_depth) {
    if (below(12) == 0) return Word();
    const std::size_t breadth = 1 + below(shape_.max_breadth);
    bool bracket = alphabet_.empty() || (max_depth > 0 && coin());
    std::vector<Factor> fs;
    for (std::size_t i = 0; i < breadth; ++i) {
        if (bracket) {
            if (max_depth == 0) break;
            fs.push_back(Factor::bracket(draw(max_depth - 1)));
        } else {
            fs.push_back(Factor::letter(letter()));
        }
        bracket = !bracket;
        if (alphabet_.empty() && !bracket) break;
    }
    return Word(std::move(fs));
}

Rational Sampler::coefficient() {
    static constexpr long nums[] = {1, 1, 1, -1, 2, -2, 3, -1, 1, 5};
    static constexpr long dens[] = {1, 1, 1, 1, 1, 2, 3};
    return Rational(nums[below(std::size(nums))], dens[below(std::size(dens))]);
}

LinComb Sampler::lincomb(std::size_t max_terms) {
    LinComb out;
    const std::size_t n = 1 + below(max_terms);
    for (std::size_t i = 0; i < n; ++i) out.add_term(word(), coefficient());
    if (out.is_zero()) out.add_term(word(), Rational(1));
    return out;
}

Expr Sampler::expr(std::size_t max_products, std::size_t max_ops) {
    return expr_with(below(max_products + 1), below(max_ops + 1));
}

Expr Sampler::expr_with(std::size_t products, std::size_t ops) {
    const std::size_t choices = (products > 0 ? 1 : 0) + (ops > 0 ? 1 : 0);
    if (choices == 0) {
        std::size_t pick = below(alphabet_.size() + 1);
        return pick == 0 ? Expr::unit() : Expr::gen(std::string(1, alphabet_[pick - 1]));
    }
    const bool use_op = ops > 0 && (products == 0 || coin());
    if (use_op) return Expr::op(expr_with(products, ops - 1));
    const std::size_t left_products = below(products);
    const std::size_t left_ops = below(ops + 1);
    return Expr::product({expr_with(left_products, left_ops),
                          expr_with(products - 1 - left_products, ops - left_ops)});
}

std::vector<Expr> enumerate_trees(const std::string& alphabet, std::size_t max_products, std::size_t max_ops) {
    // exact[p][q]: trees with exactly p products and q P nodes
    std::vector<std::vector<std::vector<Expr>>> exact(max_products + 1,
                                                      std::vector<std::vector<Expr>>(max_ops + 1));
    for (std::size_t p = 0; p <= max_products; ++p)
        for (std::size_t q = 0; q <= max_ops; ++q) {
            auto& cell = exact[p][q];
            if (p == 0 && q == 0) {
                cell.push_back(Expr::unit());
                for (char c : alphabet) cell.push_back(Expr::gen(std::string(1, c)));
                continue;
            }
            if (q > 0)
                for (const auto& t : exact[p][q - 1]) cell.push_back(Expr::op(t));
            if (p > 0)
                for (std::size_t lp = 0; lp < p; ++lp)
                    for (std::size_t lq = 0; lq <= q; ++lq)
                        for (const auto& l : exact[lp][lq])
                            for (const auto& r : exact[p - 1 - lp][q - lq]) cell.push_back(Expr::product({l, r}));
        }
    std::vector<Expr> out;
    for (auto& row : exact)
        for (auto& cell : row) out.insert(out.end(), cell.begin(), cell.end());
    return out;
}

} // namespace mrba
