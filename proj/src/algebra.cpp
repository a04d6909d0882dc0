#include "rbs/algebra.hpp"

#include <algorithm>
#include <stdexcept>

#include "rbs/ordering.hpp"

namespace rbs {

// --- Poly ----------------------------------------------------------------

Poly::Poly(Word w, Scalar c) {
    if (c != 0) terms_.emplace(std::move(w), std::move(c));
}

Scalar Poly::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void Poly::add_term(const Word& w, const Scalar& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

std::vector<std::pair<Word, Scalar>> Poly::sorted_terms() const {
    std::vector<std::pair<Word, Scalar>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return DegLexGreater{}(a.first, b.first); });
    return out;
}

Poly& Poly::operator+=(const Poly& other) {
    for (const auto& [w, c] : other.terms_) add_term(w, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& other) {
    for (const auto& [w, c] : other.terms_) add_term(w, -c);
    return *this;
}

Poly& Poly::operator*=(const Scalar& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& term : terms_) term.second *= c;
    return *this;
}

Poly add(const Poly& p, const Poly& q) { return p + q; }

Poly scale(const Scalar& c, const Poly& p) { return c * p; }

Poly concat_mul(const Poly& p, const Poly& q) {
    Poly out;
    for (const auto& [a, ca] : p)
        for (const auto& [b, cb] : q) out.add_term(a * b, ca * cb);
    return out;
}

Poly apply_operator_linear(SymbolId op, const Poly& p) {
    Poly out;
    for (const auto& [w, c] : p) out.add_term(Word(Prime::apply(op, w)), c);
    return out;
}

Poly apply_operator_linear(const Signature& sig, std::string_view op, const Poly& p) {
    auto id = sig.find_operator(op);
    if (!id) throw std::invalid_argument("unknown operator '" + std::string(op) + "'");
    return apply_operator_linear(*id, p);
}

Poly substitute(const StarWord& pi, const Poly& s) {
    Poly out;
    for (const auto& [w, c] : s) out.add_term(pi.substitute(w), c);
    return out;
}

// --- TensorPoly ----------------------------------------------------------

TensorPoly::TensorPoly(Word left, Word right, Scalar c) {
    if (c != 0) terms_.emplace(WordPair{std::move(left), std::move(right)}, std::move(c));
}

Scalar TensorPoly::coefficient(const Word& left, const Word& right) const {
    auto it = terms_.find(WordPair{left, right});
    return it == terms_.end() ? Scalar(0) : it->second;
}

void TensorPoly::add_term(const Word& left, const Word& right, const Scalar& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(WordPair{left, right}, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

std::vector<std::pair<WordPair, Scalar>> TensorPoly::sorted_terms() const {
    std::vector<std::pair<WordPair, Scalar>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        auto c = compare_words(a.first.first, b.first.first);
        if (c != Ordering::Equal) return c == Ordering::Less;
        return compare_words(a.first.second, b.first.second) == Ordering::Greater;
    });
    return out;
}

TensorPoly& TensorPoly::operator+=(const TensorPoly& other) {
    for (const auto& [k, c] : other.terms_) add_term(k.first, k.second, c);
    return *this;
}

TensorPoly& TensorPoly::operator-=(const TensorPoly& other) {
    for (const auto& [k, c] : other.terms_) add_term(k.first, k.second, -c);
    return *this;
}

TensorPoly& TensorPoly::operator*=(const Scalar& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& term : terms_) term.second *= c;
    return *this;
}

TensorPoly tensor_add(const TensorPoly& a, const TensorPoly& b) { return a + b; }

TensorPoly tensor_scale(const Scalar& c, const TensorPoly& t) { return c * t; }

TensorPoly tensor_of(const Poly& p, const Poly& q) {
    TensorPoly out;
    for (const auto& [a, ca] : p)
        for (const auto& [b, cb] : q) out.add_term(a, b, ca * cb);
    return out;
}

TensorPoly tensor_map(const TensorPoly& t, const WordMap& left, const WordMap& right) {
    TensorPoly out;
    for (const auto& [legs, c] : t) {
        auto l = left(legs.first);
        if (l.is_zero()) continue;
        auto r = right(legs.second);
        for (const auto& [a, ca] : l)
            for (const auto& [b, cb] : r) out.add_term(a, b, c * ca * cb);
    }
    return out;
}

}  // namespace rbs
