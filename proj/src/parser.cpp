#include "mrba/parser.hpp"

#include <cctype>

namespace mrba {

namespace {

class Parser {
public:
    Parser(std::string_view text, std::string_view alphabet) : text_(text), alphabet_(alphabet) {}

    Expr parse() {
        Expr e = expr();
        skip_ws();
        if (pos_ < text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    static Expr negate(Expr e) {
        if (e.kind == Expr::Kind::scale) {
            e.coeff = -e.coeff;
            return e;
        }
        return Expr::scale(Rational(-1), std::move(e));
    }

    Expr expr() {
        std::vector<Expr> terms;
        bool negative = accept('-');
        terms.push_back(negative ? negate(term()) : term());
        for (;;) {
            if (accept('+'))
                terms.push_back(term());
            else if (accept('-'))
                terms.push_back(negate(term()));
            else
                break;
        }
        if (terms.size() == 1) return std::move(terms.front());
        return Expr::sum(std::move(terms));
    }

    std::string digits() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    Expr term() {
        std::vector<Expr> factors;
        bool has_coeff = false;
        Rational coeff(1);
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::size_t start = pos_;
            std::string num = digits();
            std::string den;
            if (accept('/')) {
                skip_ws();
                den = digits();
                if (den.empty()) fail("expected denominator");
                if (den.find_first_not_of('0') == std::string::npos) fail("zero denominator");
            }
            if (num == "1" && den.empty()) {
                factors.push_back(Expr::unit());
            } else {
                has_coeff = true;
                try {
                    coeff = Rational::parse(den.empty() ? num : num + "/" + den);
                } catch (const std::invalid_argument&) {
                    pos_ = start;
                    fail("malformed coefficient");
                }
            }
        } else {
            factors.push_back(factor());
        }
        while (accept('*')) factors.push_back(factor());

        Expr body = factors.empty() ? Expr::unit()
                    : factors.size() == 1 ? std::move(factors.front())
                                          : Expr::product(std::move(factors));
        return has_coeff ? Expr::scale(coeff, std::move(body)) : body;
    }

    Expr factor() {
        char c = peek();
        if (c == '\0') fail("unexpected end of input");
        if (c == 'P') {
            ++pos_;
            expect('(');
            Expr inner = expr();
            expect(')');
            return Expr::op(std::move(inner));
        }
        if (c == '(') {
            ++pos_;
            Expr inner = expr();
            expect(')');
            return inner;
        }
        if (c == '1') {
            std::size_t start = pos_;
            std::string num = digits();
            if (num != "1") {
                pos_ = start;
                fail("coefficient in factor position");
            }
            return Expr::unit();
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            if (alphabet_.find(c) == std::string_view::npos) throw UnknownIdentifier(c, pos_);
            ++pos_;
            return Expr::gen(std::string(1, c));
        }
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view text_;
    std::string_view alphabet_;
    std::size_t pos_ = 0;
};

} // namespace

Expr parse_expr(std::string_view text, std::string_view alphabet) {
    return Parser(text, alphabet).parse();
}

} // namespace mrba
