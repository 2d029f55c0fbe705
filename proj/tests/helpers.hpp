#ifndef MRBA_TEST_HELPERS_HPP
#define MRBA_TEST_HELPERS_HPP

#include <string>

#include "mrba/algebra.hpp"
#include "mrba/parser.hpp"

namespace mrba::test {

inline std::shared_ptr<const GeneratorBialgebra> free_ab() { return make_generator("free", "ab"); }

inline LinComb ev(const Algebra& alg, const std::string& text, const std::string& alphabet = "ab") {
    return alg.evaluate(parse_expr(text, alphabet));
}

// Single basis word written in expression syntax.
inline Word word(const Algebra& alg, const std::string& text, const std::string& alphabet = "ab") {
    LinComb u = ev(alg, text, alphabet);
    if (u.size() != 1 || !(u.begin()->second == Rational(1))) throw std::logic_error(text + " is not a basis word");
    return u.begin()->first;
}

} // namespace mrba::test

#endif
