#pragma once

// Exact-rational linear combinations of Omega-words and of pairs of words.

#include <functional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "rbs/terms.hpp"

namespace rbs {

/// Exact rational, always in canonical reduced form.
using Scalar = mpq_class;

class Poly {
public:
    using Map = std::unordered_map<Word, Scalar, WordHash>;

    Poly() = default;
    explicit Poly(Word w, Scalar c = 1);

    /// The polynomial 1.
    static Poly one() { return Poly(Word::unit()); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Scalar coefficient(const Word& w) const;

    /// Accumulate c·w, dropping the term if it cancels.
    void add_term(const Word& w, const Scalar& c);

    /// Terms in descending Deg-lex order.
    std::vector<std::pair<Word, Scalar>> sorted_terms() const;

    Map::const_iterator begin() const { return terms_.begin(); }
    Map::const_iterator end() const { return terms_.end(); }

    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly& operator*=(const Scalar& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a) { return a *= Scalar(-1); }
    friend Poly operator*(const Scalar& c, Poly p) { return p *= c; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

private:
    Map terms_;
};

Poly add(const Poly& p, const Poly& q);
Poly scale(const Scalar& c, const Poly& p);

/// Bilinear extension of word concatenation (no normalization).
Poly concat_mul(const Poly& p, const Poly& q);

/// Q applied to each monomial, coefficients preserved.
Poly apply_operator_linear(SymbolId op, const Poly& p);
/// As above, resolving the operator by name; throws std::invalid_argument if unknown.
Poly apply_operator_linear(const Signature& sig, std::string_view op, const Poly& p);

/// Linear extension of star-word substitution.
Poly substitute(const StarWord& pi, const Poly& s);

using WordPair = std::pair<Word, Word>;

struct WordPairHash {
    std::size_t operator()(const WordPair& p) const noexcept {
        return p.first.hash() * 0x9e3779b97f4a7c15ULL ^ (p.second.hash() + 0x632be59bd9b4e019ULL);
    }
};

class TensorPoly {
public:
    using Map = std::unordered_map<WordPair, Scalar, WordPairHash>;

    TensorPoly() = default;
    TensorPoly(Word left, Word right, Scalar c = 1);

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Scalar coefficient(const Word& left, const Word& right) const;
    void add_term(const Word& left, const Word& right, const Scalar& c);

    /// Left leg ascending, then right leg descending (Deg-lex): 1⊗w comes first.
    std::vector<std::pair<WordPair, Scalar>> sorted_terms() const;

    Map::const_iterator begin() const { return terms_.begin(); }
    Map::const_iterator end() const { return terms_.end(); }

    TensorPoly& operator+=(const TensorPoly& other);
    TensorPoly& operator-=(const TensorPoly& other);
    TensorPoly& operator*=(const Scalar& c);

    friend TensorPoly operator+(TensorPoly a, const TensorPoly& b) { return a += b; }
    friend TensorPoly operator-(TensorPoly a, const TensorPoly& b) { return a -= b; }
    friend TensorPoly operator*(const Scalar& c, TensorPoly t) { return t *= c; }

    friend bool operator==(const TensorPoly& a, const TensorPoly& b) { return a.terms_ == b.terms_; }

private:
    Map terms_;
};

using WordMap = std::function<Poly(const Word&)>;

TensorPoly tensor_add(const TensorPoly& a, const TensorPoly& b);
TensorPoly tensor_scale(const Scalar& c, const TensorPoly& t);
/// p ⊗ q
TensorPoly tensor_of(const Poly& p, const Poly& q);
/// (f ⊗ g)(t), with f and g given by their values on words.
TensorPoly tensor_map(const TensorPoly& t, const WordMap& left, const WordMap& right);

/// Identity on words, for use with tensor_map.
inline Poly identity_map(const Word& w) { return Poly(w); }

}  // namespace rbs
