#include "mrba/serialize.hpp"

#include <stdexcept>
#include <vector>

namespace mrba {

using nlohmann::json;

json word_to_json(const Word& w) {
    json out = json::array();
    for (const auto& f : w.factors()) {
        if (f.is_letter())
            out.push_back({{"letter", f.key()}});
        else
            out.push_back({{"bracket", word_to_json(f.inner())}});
    }
    return out;
}

Word word_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("word must be a JSON array");
    std::vector<Factor> fs;
    for (const auto& f : j) {
        if (!f.is_object() || f.size() != 1) throw std::invalid_argument("factor must be a one-key object");
        if (f.contains("letter")) {
            if (!f["letter"].is_string()) throw std::invalid_argument("letter must be a string");
            fs.push_back(Factor::letter(f["letter"].get<std::string>()));
        } else if (f.contains("bracket")) {
            fs.push_back(Factor::bracket(word_from_json(f["bracket"])));
        } else {
            throw std::invalid_argument("factor must be a letter or a bracket");
        }
    }
    return Word(std::move(fs));
}

namespace {

Rational coeff_from_json(const json& term) {
    if (!term.contains("coeff") || !term["coeff"].is_string())
        throw std::invalid_argument("term needs a string coeff");
    return Rational::parse(term["coeff"].get<std::string>());
}

const json& terms_of(const json& j) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw std::invalid_argument("expected an object with a terms array");
    return j["terms"];
}

// Appends " + " / " - " (or a leading "-") and the coefficient prefix.
void append_coeff(std::string& out, const Rational& c, bool first, bool unit_word) {
    if (first) {
        if (c.sign() < 0) out += '-';
    } else {
        out += c.sign() < 0 ? " - " : " + ";
    }
    const Rational mag = c.abs();
    if (unit_word)
        out += mag.text();
    else if (!(c == Rational(1)))
        out += mag.text() + " ";
}

std::string letter_expression(const std::string& key) {
    std::string out;
    for (std::size_t i = 0; i < key.size(); ++i) {
        if (i) out += '*';
        out += key[i];
    }
    return out;
}

} // namespace

json to_json(const LinComb& u) {
    json terms = json::array();
    for (const auto& [w, c] : u) terms.push_back({{"coeff", c.str()}, {"word", word_to_json(w)}});
    return {{"terms", terms}};
}

json to_json(const Tensor2& t) {
    json terms = json::array();
    for (const auto& [p, c] : t)
        terms.push_back({{"coeff", c.str()}, {"left", word_to_json(p.first)}, {"right", word_to_json(p.second)}});
    return {{"terms", terms}};
}

json to_json(const Rational& r) { return {{"value", r.str()}}; }

LinComb lincomb_from_json(const json& j) {
    LinComb out;
    for (const auto& term : terms_of(j)) {
        if (!term.contains("word")) throw std::invalid_argument("term needs a word");
        out.add_term(word_from_json(term["word"]), coeff_from_json(term));
    }
    return out;
}

Tensor2 tensor2_from_json(const json& j) {
    Tensor2 out;
    for (const auto& term : terms_of(j)) {
        if (!term.contains("left") || !term.contains("right"))
            throw std::invalid_argument("tensor term needs left and right");
        out.add_term({word_from_json(term["left"]), word_from_json(term["right"])}, coeff_from_json(term));
    }
    return out;
}

std::string to_text(const LinComb& u) {
    if (u.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : u) {
        append_coeff(out, c, first, w.empty());
        if (!w.empty()) out += to_text(w);
        first = false;
    }
    return out;
}

std::string to_text(const Tensor2& t) {
    if (t.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [p, c] : t) {
        append_coeff(out, c, first, false);
        out += to_text(p.first) + " (x) " + to_text(p.second);
        first = false;
    }
    return out;
}

std::string to_expression(const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.factors().size(); ++i) {
        if (i) out += '*';
        const auto& f = w.factors()[i];
        out += f.is_letter() ? letter_expression(f.key()) : "P(" + to_expression(f.inner()) + ")";
    }
    return out;
}

std::string to_expression(const LinComb& u) {
    if (u.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : u) {
        if (first)
            out += c.sign() < 0 ? "-" : "";
        else
            out += c.sign() < 0 ? " - " : " + ";
        out += c.abs().text() + "*" + to_expression(w);
        first = false;
    }
    return out;
}

} // namespace mrba
