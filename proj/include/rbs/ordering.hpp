#pragma once

// The Deg-lex monomial order on Omega-words.
//
// Words compare by (degree, breadth, prime factors left to right). Primes
// compare by degree first; at equal degree two generators follow declaration
// order, an operator applied to 1 beats a generator, and two operator
// applications compare by (operator rank, argument word).

#include <utility>

#include "rbs/algebra.hpp"
#include "rbs/terms.hpp"

namespace rbs {

enum class Ordering { Less, Equal, Greater };

Ordering compare_primes(const Prime& p, const Prime& q);
Ordering compare_words(const Word& u, const Word& v);

struct DegLexLess {
    bool operator()(const Word& a, const Word& b) const {
        return compare_words(a, b) == Ordering::Less;
    }
};

struct DegLexGreater {
    bool operator()(const Word& a, const Word& b) const {
        return compare_words(a, b) == Ordering::Greater;
    }
};

/// The Deg-lex greatest monomial and its coefficient.
/// Throws std::invalid_argument for the zero polynomial.
std::pair<Word, Scalar> leading_term(const Poly& p);

inline Word leading_word(const Poly& p) { return leading_term(p).first; }

inline bool is_monic(const Poly& p) { return !p.is_zero() && leading_term(p).second == 1; }

}  // namespace rbs
