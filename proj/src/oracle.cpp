#include "mrba/oracle.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace mrba {

namespace {

struct Token {
    enum Kind : unsigned char { open, close, letter } kind;
    GenIndex key;

    friend auto operator<=>(const Token&, const Token&) = default;
};

using Raw = std::vector<Token>;
using RawSum = std::map<Raw, Rational>;

void accumulate(RawSum& sum, Raw raw, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = sum.try_emplace(std::move(raw), c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) sum.erase(it);
}

struct Redex {
    std::size_t pos;  // index of the left token of the adjacent pair
    bool letters;
};

// Deepest adjacent letter-letter or ']' '[' pair; ties go to the leftmost.
bool find_redex(const Raw& raw, Redex& out) {
    long best_depth = -1;
    long depth = 0;
    for (std::size_t i = 0; i + 1 < raw.size(); ++i) {
        if (raw[i].kind == Token::open) ++depth;
        if (raw[i].kind == Token::close) --depth;
        bool ll = raw[i].kind == Token::letter && raw[i + 1].kind == Token::letter;
        bool bb = raw[i].kind == Token::close && raw[i + 1].kind == Token::open;
        if ((ll || bb) && depth > best_depth) {
            best_depth = depth;
            out = {i, ll};
        }
    }
    return best_depth >= 0;
}

class Rewriter {
public:
    Rewriter(const Params& p, const GeneratorBialgebra& g) : params_(p), gen_(g) {}

    RawSum normalize(RawSum pending) const {
        RawSum done;
        while (!pending.empty()) {
            auto node = pending.extract(pending.begin());
            const Raw& raw = node.key();
            const Rational& c = node.mapped();
            Redex r{};
            if (!find_redex(raw, r)) {
                accumulate(done, raw, c);
                continue;
            }
            if (r.letters)
                rewrite_letters(raw, c, r.pos, pending);
            else
                rewrite_brackets(raw, c, r.pos, pending);
        }
        return done;
    }

private:
    void rewrite_letters(const Raw& raw, const Rational& c, std::size_t i, RawSum& out) const {
        for (const auto& [k, coeff] : gen_.mul(raw[i].key, raw[i + 1].key)) {
            Raw next(raw.begin(), raw.begin() + static_cast<long>(i));
            if (!k.empty()) next.push_back({Token::letter, k});
            next.insert(next.end(), raw.begin() + static_cast<long>(i) + 2, raw.end());
            accumulate(out, std::move(next), c * coeff);
        }
    }

    void rewrite_brackets(const Raw& raw, const Rational& c, std::size_t i, RawSum& out) const {
        // raw[j] '[' u raw[i] ']'  raw[i+1] '[' v raw[k] ']'
        std::size_t j = i;
        for (long level = 0;; --j) {
            if (raw[j].kind == Token::close) ++level;
            if (raw[j].kind == Token::open && --level == 0) break;
        }
        std::size_t k = i + 1;
        for (long level = 0;; ++k) {
            if (raw[k].kind == Token::open) ++level;
            if (raw[k].kind == Token::close && --level == 0) break;
        }
        auto at = [&](std::size_t p) { return raw.begin() + static_cast<long>(p); };
        const Raw before(raw.begin(), at(j));
        const Raw u(at(j + 1), at(i));
        const Raw v(at(i + 2), at(k));
        const Raw after(at(k + 1), raw.end());
        const Token lb{Token::open, {}};
        const Token rb{Token::close, {}};

        auto build = [&](std::initializer_list<const Raw*> parts) {
            Raw r;
            for (const Raw* p : parts) r.insert(r.end(), p->begin(), p->end());
            return r;
        };
        const Raw L{lb}, R{rb};
        // [[u]v]
        accumulate(out, build({&before, &L, &L, &u, &R, &v, &R, &after}), c);
        // [u[v]]
        accumulate(out, build({&before, &L, &u, &L, &v, &R, &R, &after}), c);
        // kappa uv
        accumulate(out, build({&before, &u, &v, &after}), c * params_.kappa);
    }

    const Params& params_;
    const GeneratorBialgebra& gen_;
};

RawSum product(const RawSum& a, const RawSum& b) {
    RawSum out;
    for (const auto& [x, cx] : a)
        for (const auto& [y, cy] : b) {
            Raw r = x;
            r.insert(r.end(), y.begin(), y.end());
            accumulate(out, std::move(r), cx * cy);
        }
    return out;
}

RawSum reduce(const Expr& e, const Rewriter& rw, const GeneratorBialgebra& gen) {
    switch (e.kind) {
    case Expr::Kind::unit: return {{Raw{}, Rational(1)}};
    case Expr::Kind::gen: {
        if (!gen.contains(e.symbol)) throw std::out_of_range("unknown generator basis element '" + e.symbol + "'");
        if (e.symbol.empty()) return {{Raw{}, Rational(1)}};
        return {{Raw{{Token::letter, e.symbol}}, Rational(1)}};
    }
    case Expr::Kind::sum: {
        RawSum out;
        for (const auto& c : e.children)
            for (auto& [r, coeff] : reduce(c, rw, gen)) accumulate(out, r, coeff);
        return out;
    }
    case Expr::Kind::scale: {
        RawSum out;
        for (auto& [r, coeff] : reduce(e.children.at(0), rw, gen)) accumulate(out, r, coeff * e.coeff);
        return out;
    }
    case Expr::Kind::op: {
        RawSum out;
        for (auto& [r, coeff] : reduce(e.children.at(0), rw, gen)) {
            Raw wrapped{{Token::open, {}}};
            wrapped.insert(wrapped.end(), r.begin(), r.end());
            wrapped.push_back({Token::close, {}});
            accumulate(out, std::move(wrapped), coeff);
        }
        return out;
    }
    case Expr::Kind::product: {
        RawSum acc{{Raw{}, Rational(1)}};
        for (const auto& c : e.children) acc = rw.normalize(product(acc, reduce(c, rw, gen)));
        return acc;
    }
    }
    throw std::logic_error("unhandled expression kind");
}

// Token string in normal form -> Word.
Word to_word(const Raw& raw, std::size_t& pos) {
    std::vector<Factor> fs;
    while (pos < raw.size() && raw[pos].kind != Token::close) {
        if (raw[pos].kind == Token::letter) {
            fs.push_back(Factor::letter(raw[pos].key));
            ++pos;
        } else {
            ++pos;
            Word inner = to_word(raw, pos);
            ++pos;  // ']'
            fs.push_back(Factor::bracket(std::move(inner)));
        }
    }
    return Word(std::move(fs));
}

} // namespace

LinComb oracle_normal_form(const Expr& e, const Params& params, const GeneratorBialgebra& gen) {
    Rewriter rw(params, gen);
    RawSum nf = rw.normalize(reduce(e, rw, gen));
    LinComb out;
    for (const auto& [raw, c] : nf) {
        std::size_t pos = 0;
        out.add_term(to_word(raw, pos), c);
    }
    return out;
}

} // namespace mrba
