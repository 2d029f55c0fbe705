#include "mrba/word.hpp"

#include <algorithm>
#include <stdexcept>

#include "mrba/generator.hpp"

namespace mrba {

Factor Factor::letter(GenIndex key) {
    if (key.empty()) throw std::invalid_argument("the unit of A cannot be a letter");
    Factor f;
    f.key_ = std::move(key);
    return f;
}

Factor Factor::bracket(Word inner) {
    Factor f;
    f.inner_ = std::make_shared<const Word>(std::move(inner));
    return f;
}

bool operator==(const Factor& a, const Factor& b) {
    if (a.is_letter() != b.is_letter()) return false;
    if (a.is_letter()) return a.key_ == b.key_;
    return a.inner_ == b.inner_ || *a.inner_ == *b.inner_;
}

std::strong_ordering operator<=>(const Factor& a, const Factor& b) {
    if (a.kind() != b.kind()) return a.kind() <=> b.kind();
    if (a.is_letter()) return a.key_ <=> b.key_;
    if (a.inner_ == b.inner_) return std::strong_ordering::equal;
    return *a.inner_ <=> *b.inner_;
}

Word::Word(std::vector<Factor> factors) : factors_(std::move(factors)) {
    for (std::size_t i = 1; i < factors_.size(); ++i)
        if (factors_[i - 1].kind() == factors_[i].kind())
            throw std::invalid_argument("adjacent factors of the same kind break alternation");
}

Word Word::letter(GenIndex key) {
    Word w;
    w.factors_.push_back(Factor::letter(std::move(key)));
    return w;
}

Word Word::bracket(Word inner) {
    Word w;
    w.factors_.push_back(Factor::bracket(std::move(inner)));
    return w;
}

Word Word::join(std::span<const Factor> left, std::span<const Factor> right) {
    Word w;
    w.factors_.reserve(left.size() + right.size());
    w.factors_.insert(w.factors_.end(), left.begin(), left.end());
    w.factors_.insert(w.factors_.end(), right.begin(), right.end());
    return w;
}

Word Word::join(std::span<const Factor> left, std::span<const Factor> middle,
                std::span<const Factor> right) {
    Word w;
    w.factors_.reserve(left.size() + middle.size() + right.size());
    w.factors_.insert(w.factors_.end(), left.begin(), left.end());
    w.factors_.insert(w.factors_.end(), middle.begin(), middle.end());
    w.factors_.insert(w.factors_.end(), right.begin(), right.end());
    return w;
}

std::size_t Word::breadth() const {
    if (empty()) throw std::domain_error("breadth is undefined for the empty word");
    return factors_.size();
}

int Word::head() const {
    if (empty()) throw std::domain_error("head is undefined for the empty word");
    return factors_.front().is_bracket() ? 1 : 0;
}

int Word::tail() const {
    if (empty()) throw std::domain_error("tail is undefined for the empty word");
    return factors_.back().is_bracket() ? 1 : 0;
}

std::size_t Word::depth() const {
    std::size_t d = 0;
    for (const auto& f : factors_)
        if (f.is_bracket()) d = std::max(d, f.inner().depth() + 1);
    return d;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
    return std::lexicographical_compare_three_way(a.factors_.begin(), a.factors_.end(),
                                                  b.factors_.begin(), b.factors_.end());
}

std::size_t degree(const Word& w, const GeneratorBialgebra& gen) {
    std::size_t d = 0;
    for (const auto& f : w.factors())
        d += f.is_letter() ? gen.degree(f.key()) : degree(f.inner(), gen) + 1;
    return d;
}

bool is_canonical(const Word& w) {
    const auto& fs = w.factors();
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (i > 0 && fs[i - 1].kind() == fs[i].kind()) return false;
        if (fs[i].is_letter() && fs[i].key().empty()) return false;
        if (fs[i].is_bracket() && !is_canonical(fs[i].inner())) return false;
    }
    return true;
}

std::string to_text(const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.factors().size(); ++i) {
        if (i > 0) out += '*';
        const auto& f = w.factors()[i];
        if (f.is_letter())
            out += f.key();
        else
            out += "P(" + to_text(f.inner()) + ")";
    }
    return out;
}

} // namespace mrba
