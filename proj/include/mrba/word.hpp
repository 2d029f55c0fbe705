#ifndef MRBA_WORD_HPP
#define MRBA_WORD_HPP

#include <compare>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "mrba/combination.hpp"
#include "mrba/rational.hpp"

namespace mrba {

class Word;
class GeneratorBialgebra;

// Key of a basis element of the generator algebra A. The empty key is the
// unit of A; it never appears as a letter inside a Word.
using GenIndex = std::string;

enum class FactorKind : unsigned char { bracket = 0, letter = 1 };

// One factor of a standard decomposition: either a non-unit basis element of
// A or a bracketed word. Bracket contents are shared and immutable.
class Factor {
public:
    static Factor letter(GenIndex key);
    static Factor bracket(Word inner);

    FactorKind kind() const { return inner_ ? FactorKind::bracket : FactorKind::letter; }
    bool is_letter() const { return !inner_; }
    bool is_bracket() const { return static_cast<bool>(inner_); }

    const GenIndex& key() const { return key_; }
    const Word& inner() const { return *inner_; }

    friend bool operator==(const Factor& a, const Factor& b);
    friend std::strong_ordering operator<=>(const Factor& a, const Factor& b);

private:
    Factor() = default;
    GenIndex key_;
    std::shared_ptr<const Word> inner_;
};

// A bracketed word in canonical form: letters and brackets alternate. The
// empty word is the unit of the free algebra. Ordering is lexicographic on
// the factor sequence, brackets before letters, recursing into brackets.
class Word {
public:
    Word() = default;
    // Throws std::invalid_argument when two neighbours have the same kind
    // or a letter carries the unit key.
    explicit Word(std::vector<Factor> factors);

    static Word letter(GenIndex key);
    static Word bracket(Word inner);
    // Concatenation of fragments known to be alternation-compatible.
    static Word join(std::span<const Factor> left, std::span<const Factor> right);
    static Word join(std::span<const Factor> left, std::span<const Factor> middle,
                     std::span<const Factor> right);

    const std::vector<Factor>& factors() const { return factors_; }
    bool empty() const { return factors_.empty(); }
    const Factor& front() const { return factors_.front(); }
    const Factor& back() const { return factors_.back(); }

    // Number of factors in the standard decomposition. Rejects the empty word.
    std::size_t breadth() const;
    // 0 when the first (last) factor is a letter, 1 when it is a bracket.
    // Both reject the empty word.
    int head() const;
    int tail() const;
    // Minimal n with the word in X_n.
    std::size_t depth() const;

    friend bool operator==(const Word& a, const Word& b) { return a.factors_ == b.factors_; }
    friend std::strong_ordering operator<=>(const Word& a, const Word& b);

private:
    std::vector<Factor> factors_;
};

// Filtration degree: deg_A on letters, +1 per bracket, additive over factors.
std::size_t degree(const Word& w, const GeneratorBialgebra& gen);

// Walks the whole word (recursively) and checks alternation and that no
// letter is the unit.
bool is_canonical(const Word& w);

// Elements of the free algebra and its tensor powers.
using LinComb = Combination<Word>;
using WordPair = std::pair<Word, Word>;
using WordTriple = std::tuple<Word, Word, Word>;
using Tensor2 = Combination<WordPair>;
using Tensor3 = Combination<WordTriple>;

// Human readable form: letters print their key, brackets as P(...), factors
// joined with '*', the empty word as "1".
std::string to_text(const Word& w);

} // namespace mrba

#endif
