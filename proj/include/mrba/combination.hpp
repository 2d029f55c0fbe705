#ifndef MRBA_COMBINATION_HPP
#define MRBA_COMBINATION_HPP

#include <cstddef>
#include <map>
#include <utility>

#include "mrba/rational.hpp"

namespace mrba {

// A finitely supported map Key -> Rational, i.e. an element of the free
// module on Key. Zero coefficients are never stored, so two combinations
// are equal exactly when their term maps are equal. Iteration follows the
// ordering of Key.
template <class Key>
class Combination {
public:
    using key_type = Key;
    using map_type = std::map<Key, Rational>;
    using const_iterator = typename map_type::const_iterator;

    Combination() = default;

    static Combination of(Key key, Rational coeff = 1) {
        Combination c;
        c.add_term(std::move(key), std::move(coeff));
        return c;
    }

    void add_term(const Key& key, const Rational& coeff) {
        if (coeff.is_zero()) return;
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(key, coeff);
            return;
        }
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }

    void add_term(Key&& key, const Rational& coeff) {
        if (coeff.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(std::move(key), coeff);
        if (inserted) return;
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }

    // this += scale * other
    void add(const Combination& other, const Rational& scale = 1) {
        if (scale.is_zero()) return;
        for (const auto& [k, c] : other.terms_) add_term(k, c * scale);
    }

    Rational coefficient(const Key& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Rational() : it->second;
    }

    Combination scaled(const Rational& s) const {
        if (s.is_zero()) return {};
        Combination r = *this;
        for (auto& [k, c] : r.terms_) c *= s;
        return r;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }
    const map_type& terms() const { return terms_; }

    Combination& operator+=(const Combination& o) { add(o); return *this; }
    Combination& operator-=(const Combination& o) { add(o, Rational(-1)); return *this; }
    friend Combination operator+(Combination a, const Combination& b) { return a += b; }
    friend Combination operator-(Combination a, const Combination& b) { return a -= b; }
    Combination operator-() const { return scaled(Rational(-1)); }
    friend Combination operator*(const Rational& s, const Combination& a) { return a.scaled(s); }

    friend bool operator==(const Combination& a, const Combination& b) { return a.terms_ == b.terms_; }

private:
    map_type terms_;
};

} // namespace mrba

#endif
