#ifndef MRBA_PARSER_HPP
#define MRBA_PARSER_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mrba/expr.hpp"

namespace mrba {

// Syntax error with the byte offset where parsing stopped.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Identifier that is not in the configured alphabet.
class UnknownIdentifier : public ParseError {
public:
    UnknownIdentifier(char symbol, std::size_t offset)
        : ParseError(std::string("unknown identifier '") + symbol + "'", offset) {}
};

// Grammar (whitespace is ignored):
//
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := coeff ('*' factor)* | factor ('*' factor)*
//   factor := 'P(' expr ')' | ident | '1' | '(' expr ')'
//   coeff  := int ('/' posint)?
//
// Identifiers are single characters from `alphabet`. A lone "1" is the unit;
// any other bare coefficient c is Scale(c, Unit).
Expr parse_expr(std::string_view text, std::string_view alphabet);

} // namespace mrba

#endif
