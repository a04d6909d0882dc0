#pragma once

// Omega-words over a generator alphabet and a finite set of unary operators.
//
// A word is a (possibly empty) product of prime factors; a prime is a
// generator, an operator applied to a word, or the hole symbol used by
// star-words. Words are immutable values: operator arguments are shared
// between copies, and every node caches its degree and structural hash.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rbs {

using SymbolId = std::uint32_t;

/// Generator and operator names.
///
/// Generators are well-ordered by declaration (first = smallest). Operators are
/// listed by descending rank, so the default {R, S} encodes R > S. Symbols are
/// stored in words by index, which lets the monomial order run without the
/// signature at hand.
class Signature {
public:
    explicit Signature(std::vector<std::string> generators,
                       std::vector<std::string> operators = {"R", "S"});

    /// One generator `x`, operators R > S.
    static Signature standard();

    const std::vector<std::string>& generators() const { return generators_; }
    const std::vector<std::string>& operators() const { return operators_; }
    std::size_t generator_count() const { return generators_.size(); }
    std::size_t operator_count() const { return operators_.size(); }

    std::optional<SymbolId> find_generator(std::string_view name) const;
    std::optional<SymbolId> find_operator(std::string_view name) const;
    const std::string& generator_name(SymbolId id) const { return generators_.at(id); }
    const std::string& operator_name(SymbolId id) const { return operators_.at(id); }

    /// Operator playing the role of R in Q(R(u)v) + Q(uS(v)): the highest ranked.
    SymbolId lead_operator() const { return 0; }
    /// Operator playing the role of S: the lowest ranked.
    SymbolId trail_operator() const { return static_cast<SymbolId>(operators_.size() - 1); }

    bool operator==(const Signature&) const = default;

private:
    std::vector<std::string> generators_;
    std::vector<std::string> operators_;
};

class Word;

class Prime {
public:
    enum class Kind : std::uint8_t { Generator, Operator, Hole };

    static Prime generator(SymbolId id);
    static Prime apply(SymbolId op, Word argument);
    static Prime hole();

    Kind kind() const { return kind_; }
    bool is_generator() const { return kind_ == Kind::Generator; }
    bool is_operator() const { return kind_ == Kind::Operator; }
    bool is_hole() const { return kind_ == Kind::Hole; }

    /// Generator or operator index; meaningless for the hole.
    SymbolId symbol() const { return symbol_; }
    /// Precondition: is_operator().
    const Word& argument() const { return *arg_; }

    std::size_t degree() const { return degree_; }
    std::size_t hole_count() const { return holes_; }
    std::size_t hash() const { return hash_; }

    friend bool operator==(const Prime& a, const Prime& b);

private:
    Prime(Kind kind, SymbolId symbol, std::shared_ptr<const Word> arg);

    Kind kind_;
    SymbolId symbol_;
    std::uint32_t degree_;
    std::uint32_t holes_;
    std::size_t hash_;
    std::shared_ptr<const Word> arg_;
};

class Word {
public:
    /// The unit word 1 (empty factor sequence).
    Word();
    explicit Word(std::vector<Prime> factors);
    explicit Word(Prime prime);

    static Word unit() { return Word(); }

    std::span<const Prime> factors() const { return factors_; }
    const Prime& operator[](std::size_t i) const { return factors_[i]; }
    bool is_unit() const { return factors_.empty(); }

    std::size_t degree() const { return degree_; }
    std::size_t breadth() const { return factors_.size(); }
    std::size_t depth() const;
    std::size_t hole_count() const { return holes_; }
    std::size_t hash() const { return hash_; }

    /// Factors [first, last) as a word.
    Word slice(std::size_t first, std::size_t last) const;

    friend Word operator*(const Word& a, const Word& b);
    friend bool operator==(const Word& a, const Word& b);

private:
    void finish();

    std::vector<Prime> factors_;
    std::uint32_t degree_ = 0;
    std::uint32_t holes_ = 0;
    std::size_t hash_ = 0;
};

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept { return w.hash(); }
};

/// Free-function metrics.
inline std::size_t degree(const Word& w) { return w.degree(); }
inline std::size_t breadth(const Word& w) { return w.breadth(); }
inline std::size_t depth(const Word& w) { return w.depth(); }

/// A word containing the hole exactly once.
class StarWord {
public:
    /// Throws std::invalid_argument unless `w` has exactly one hole.
    explicit StarWord(Word w);

    /// The trivial context ★.
    static StarWord hole();

    const Word& word() const { return word_; }
    std::size_t degree() const { return word_.degree(); }

    /// Plug `s` into the hole. A product `s` is spliced into the factor
    /// sequence that held the hole.
    Word substitute(const Word& s) const;

    /// Wrap this context: Q(π).
    StarWord under(SymbolId op) const;
    /// a·π·b
    StarWord between(const Word& left, const Word& right) const;

    friend bool operator==(const StarWord&, const StarWord&) = default;

private:
    Word word_;
};

/// All words of degree <= max_degree, each once, ascending in Deg-lex.
std::vector<Word> enumerate_words(const Signature& sig, std::size_t max_degree);

/// All words of exactly the given degree, ascending in Deg-lex.
std::vector<Word> enumerate_words_of_degree(const Signature& sig, std::size_t degree);

/// All star-words of degree <= max_degree (the hole has degree 0), each once.
/// Grouped by degree; within a degree the order is deterministic.
std::vector<StarWord> enumerate_star_words(const Signature& sig, std::size_t max_degree);

}  // namespace rbs
