#include "rbs/ordering.hpp"

#include <stdexcept>

namespace rbs {

namespace {

template <typename T>
Ordering compare_values(const T& a, const T& b) {
    if (a < b) return Ordering::Less;
    if (b < a) return Ordering::Greater;
    return Ordering::Equal;
}

// Rank of a prime's kind at equal degree: operator applications beat
// generators (only possible at degree 1, where the argument is 1); the hole
// has degree 0 and never ties with anything else.
int kind_rank(const Prime& p) {
    switch (p.kind()) {
        case Prime::Kind::Hole: return 0;
        case Prime::Kind::Generator: return 1;
        case Prime::Kind::Operator: return 2;
    }
    return 0;
}

}  // namespace

Ordering compare_primes(const Prime& p, const Prime& q) {
    if (auto c = compare_values(p.degree(), q.degree()); c != Ordering::Equal) return c;
    if (auto c = compare_values(kind_rank(p), kind_rank(q)); c != Ordering::Equal) return c;
    switch (p.kind()) {
        case Prime::Kind::Hole:
            return Ordering::Equal;
        case Prime::Kind::Generator:
            return compare_values(p.symbol(), q.symbol());
        case Prime::Kind::Operator:
            // lower index = higher rank
            if (auto c = compare_values(q.symbol(), p.symbol()); c != Ordering::Equal) return c;
            return compare_words(p.argument(), q.argument());
    }
    return Ordering::Equal;
}

Ordering compare_words(const Word& u, const Word& v) {
    if (auto c = compare_values(u.degree(), v.degree()); c != Ordering::Equal) return c;
    if (auto c = compare_values(u.breadth(), v.breadth()); c != Ordering::Equal) return c;
    if (u.hash() == v.hash() && u == v) return Ordering::Equal;
    for (std::size_t i = 0; i < u.breadth(); ++i)
        if (auto c = compare_primes(u[i], v[i]); c != Ordering::Equal) return c;
    return Ordering::Equal;
}

std::pair<Word, Scalar> leading_term(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("leading term of the zero polynomial");
    const std::pair<const Word, Scalar>* best = nullptr;
    for (const auto& term : p)
        if (!best || compare_words(term.first, best->first) == Ordering::Greater) best = &term;
    return {best->first, best->second};
}

}  // namespace rbs
