#ifndef MRBA_SERIALIZE_HPP
#define MRBA_SERIALIZE_HPP

#include <string>

#include "json.hpp"

#include "mrba/word.hpp"

namespace mrba {

// JSON schema:
//   word     = [factor...]            (unit = [])
//   factor   = {"letter": "<key>"} | {"bracket": word}
//   LinComb  = {"terms": [{"coeff": "p/q", "word": word}, ...]}
//   Tensor2  = {"terms": [{"coeff": "p/q", "left": word, "right": word}, ...]}
//   Rational = {"value": "p/q"}
// Terms appear in word order. Parsing throws std::invalid_argument on any
// schema violation, including non-canonical words.
nlohmann::json word_to_json(const Word& w);
Word word_from_json(const nlohmann::json& j);

nlohmann::json to_json(const LinComb& u);
nlohmann::json to_json(const Tensor2& t);
nlohmann::json to_json(const Rational& r);

LinComb lincomb_from_json(const nlohmann::json& j);
Tensor2 tensor2_from_json(const nlohmann::json& j);

// Text form: terms joined by " + " / " - ", a coefficient other than +1
// printed before the word as "|c| word", the unit word printed as its
// coefficient alone, and "0" for the empty combination.
std::string to_text(const LinComb& u);
std::string to_text(const Tensor2& t);

// Expression syntax that parse_expr accepts and that evaluates back to u
// under the free generator: letters become products of symbols.
std::string to_expression(const LinComb& u);
std::string to_expression(const Word& w);

} // namespace mrba

#endif
