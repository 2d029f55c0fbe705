#include "mrba/generator.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <stdexcept>

namespace mrba {

void GeneratorBialgebra::require(const GenIndex& i) const {
    if (!contains(i)) throw std::out_of_range("unknown basis element '" + i + "' of generator " + name());
}

// --- trivial ---------------------------------------------------------------

GenElement TrivialGenerator::mul(const GenIndex& i, const GenIndex& j) const {
    require(i);
    require(j);
    return GenElement::of(unit());
}

GenTensor TrivialGenerator::coproduct(const GenIndex& i) const {
    require(i);
    return GenTensor::of({unit(), unit()});
}

Rational TrivialGenerator::counit(const GenIndex& i) const {
    require(i);
    return 1;
}

std::size_t TrivialGenerator::degree(const GenIndex& i) const {
    require(i);
    return 0;
}

std::vector<GenIndex> TrivialGenerator::basis_up_to(std::size_t) const {
    return {unit()};
}

// --- free algebra with primitive generators ----------------------------------

FreePrimitiveGenerator::FreePrimitiveGenerator(std::string alphabet) : alphabet_(std::move(alphabet)) {
    if (alphabet_.empty()) throw std::invalid_argument("alphabet must not be empty");
    for (std::size_t i = 0; i < alphabet_.size(); ++i) {
        char c = alphabet_[i];
        if (!std::isalpha(static_cast<unsigned char>(c)) || c == 'P')
            throw std::invalid_argument(std::string("invalid alphabet symbol '") + c + "'");
        if (alphabet_.find(c) != i)
            throw std::invalid_argument(std::string("repeated alphabet symbol '") + c + "'");
    }
}

bool FreePrimitiveGenerator::contains(const GenIndex& i) const {
    return std::all_of(i.begin(), i.end(), [&](char c) { return alphabet_.find(c) != std::string::npos; });
}

GenElement FreePrimitiveGenerator::mul(const GenIndex& i, const GenIndex& j) const {
    require(i);
    require(j);
    return GenElement::of(i + j);
}

GenTensor FreePrimitiveGenerator::coproduct(const GenIndex& i) const {
    require(i);
    if (i.size() >= 8 * sizeof(unsigned long) - 1)
        throw std::length_error("coproduct of an overly long generator word");
    GenTensor out;
    const unsigned long splits = 1UL << i.size();
    for (unsigned long mask = 0; mask < splits; ++mask) {
        GenIndex left, right;
        for (std::size_t p = 0; p < i.size(); ++p)
            ((mask >> p) & 1UL ? left : right) += i[p];
        out.add_term({std::move(left), std::move(right)}, 1);
    }
    return out;
}

Rational FreePrimitiveGenerator::counit(const GenIndex& i) const {
    require(i);
    return i.empty() ? 1 : 0;
}

std::size_t FreePrimitiveGenerator::degree(const GenIndex& i) const {
    require(i);
    return i.size();
}

std::vector<GenIndex> FreePrimitiveGenerator::basis_up_to(std::size_t max_degree) const {
    std::vector<GenIndex> out{unit()};
    std::vector<GenIndex> layer{unit()};
    for (std::size_t d = 1; d <= max_degree; ++d) {
        std::vector<GenIndex> next;
        for (const auto& w : layer)
            for (char c : alphabet_) next.push_back(w + c);
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

std::shared_ptr<const GeneratorBialgebra> make_generator(const std::string& kind, const std::string& alphabet) {
    if (kind == "trivial") return std::make_shared<TrivialGenerator>();
    if (kind == "free") return std::make_shared<FreePrimitiveGenerator>(alphabet);
    throw std::invalid_argument("unknown generator '" + kind + "' (expected trivial or free)");
}

// --- enumeration -------------------------------------------------------------

namespace {

class WordEnumerator {
public:
    explicit WordEnumerator(const GeneratorBialgebra& gen, std::size_t max_degree) : gen_(gen) {
        for (const auto& key : gen.basis_up_to(max_degree))
            if (!key.empty()) letters_.emplace_back(key, gen.degree(key));
    }

    const std::vector<Word>& words(std::size_t budget) {
        if (auto it = words_.find(budget); it != words_.end()) return it->second;
        std::vector<Word> out;
        std::vector<Factor> current;
        extend(budget, std::nullopt, current, out);
        std::sort(out.begin(), out.end());
        return words_.emplace(budget, std::move(out)).first->second;
    }

private:
    void extend(std::size_t budget, std::optional<FactorKind> prev, std::vector<Factor>& current,
                std::vector<Word>& out) {
        out.emplace_back(current);
        if (prev != FactorKind::letter) {
            for (const auto& [key, d] : letters_) {
                if (d == 0 || d > budget) continue;
                current.push_back(Factor::letter(key));
                extend(budget - d, FactorKind::letter, current, out);
                current.pop_back();
            }
        }
        if (prev != FactorKind::bracket && budget >= 1) {
            // copy: recursion may rehash words_
            std::vector<Word> inner = words(budget - 1);
            for (const auto& w : inner) {
                std::size_t d = degree(w, gen_) + 1;
                current.push_back(Factor::bracket(w));
                extend(budget - d, FactorKind::bracket, current, out);
                current.pop_back();
            }
        }
    }

    const GeneratorBialgebra& gen_;
    std::vector<std::pair<GenIndex, std::size_t>> letters_;
    std::map<std::size_t, std::vector<Word>> words_;
};

} // namespace

std::vector<Word> words_up_to_degree(const GeneratorBialgebra& gen, std::size_t max_degree) {
    WordEnumerator e(gen, max_degree);
    return e.words(max_degree);
}

} // namespace mrba
