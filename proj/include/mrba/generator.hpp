#ifndef MRBA_GENERATOR_HPP
#define MRBA_GENERATOR_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "mrba/combination.hpp"
#include "mrba/word.hpp"

namespace mrba {

// Elements of A and A (x) A in terms of the generator basis.
using GenElement = Combination<GenIndex>;
using GenTensor = Combination<std::pair<GenIndex, GenIndex>>;

// A connected filtered bialgebra with a filtered basis, given through its
// structure constants. Basis elements are addressed by string keys; the
// empty key is the unit and is the only element of degree 0.
//
// Implementations are immutable and every query is pure. Unknown keys raise
// std::out_of_range.
class GeneratorBialgebra {
public:
    virtual ~GeneratorBialgebra() = default;

    virtual std::string name() const = 0;
    virtual bool contains(const GenIndex& i) const = 0;

    virtual GenElement mul(const GenIndex& i, const GenIndex& j) const = 0;
    virtual GenTensor coproduct(const GenIndex& i) const = 0;
    virtual Rational counit(const GenIndex& i) const = 0;
    virtual std::size_t degree(const GenIndex& i) const = 0;

    // All basis keys of degree <= max_degree, unit first.
    virtual std::vector<GenIndex> basis_up_to(std::size_t max_degree) const = 0;

    static GenIndex unit() { return {}; }

protected:
    void require(const GenIndex& i) const;
};

// A = k: the basis is the unit alone.
class TrivialGenerator final : public GeneratorBialgebra {
public:
    std::string name() const override { return "trivial"; }
    bool contains(const GenIndex& i) const override { return i.empty(); }
    GenElement mul(const GenIndex& i, const GenIndex& j) const override;
    GenTensor coproduct(const GenIndex& i) const override;
    Rational counit(const GenIndex& i) const override;
    std::size_t degree(const GenIndex& i) const override;
    std::vector<GenIndex> basis_up_to(std::size_t max_degree) const override;
};

// The free algebra k<Y> on a finite alphabet of single characters, with
// basis the words over Y, concatenation product, primitive generators
// (Delta y = y(x)1 + 1(x)y) and deg = word length.
class FreePrimitiveGenerator final : public GeneratorBialgebra {
public:
    // Throws std::invalid_argument for an empty alphabet, repeated symbols,
    // or symbols that are not ASCII letters other than 'P'.
    explicit FreePrimitiveGenerator(std::string alphabet);

    const std::string& alphabet() const { return alphabet_; }

    std::string name() const override { return "free"; }
    bool contains(const GenIndex& i) const override;
    GenElement mul(const GenIndex& i, const GenIndex& j) const override;
    // Sum over all ways of splitting the word into a subsequence and its
    // complement; repeated splittings accumulate.
    GenTensor coproduct(const GenIndex& i) const override;
    Rational counit(const GenIndex& i) const override;
    std::size_t degree(const GenIndex& i) const override;
    std::vector<GenIndex> basis_up_to(std::size_t max_degree) const override;

private:
    std::string alphabet_;
};

std::shared_ptr<const GeneratorBialgebra> make_generator(const std::string& kind, const std::string& alphabet);

// Every canonical bracketed word whose filtration degree is at most
// max_degree, sorted in word order.
std::vector<Word> words_up_to_degree(const GeneratorBialgebra& gen, std::size_t max_degree);

} // namespace mrba

#endif
