#include "rbs/terms.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>
#include <utility>

#include "rbs/ordering.hpp"

namespace rbs {

namespace {

constexpr std::size_t hash_mix(std::size_t seed, std::size_t value) {
    return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

bool is_identifier(std::string_view s) {
    if (s.empty()) return false;
    auto head = static_cast<unsigned char>(s.front());
    if (!(std::isalpha(head) || head == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        auto u = static_cast<unsigned char>(c);
        return std::isalnum(u) || u == '_';
    });
}

}  // namespace

Signature::Signature(std::vector<std::string> generators, std::vector<std::string> operators)
    : generators_(std::move(generators)), operators_(std::move(operators)) {
    if (operators_.empty()) throw std::invalid_argument("signature needs at least one operator");
    std::set<std::string> seen;
    for (const auto* list : {&generators_, &operators_}) {
        for (const auto& name : *list) {
            if (!is_identifier(name))
                throw std::invalid_argument("invalid symbol name '" + name + "'");
            if (!seen.insert(name).second)
                throw std::invalid_argument("duplicate symbol name '" + name + "'");
        }
    }
}

Signature Signature::standard() { return Signature({"x"}, {"R", "S"}); }

std::optional<SymbolId> Signature::find_generator(std::string_view name) const {
    auto it = std::find(generators_.begin(), generators_.end(), name);
    if (it == generators_.end()) return std::nullopt;
    return static_cast<SymbolId>(it - generators_.begin());
}

std::optional<SymbolId> Signature::find_operator(std::string_view name) const {
    auto it = std::find(operators_.begin(), operators_.end(), name);
    if (it == operators_.end()) return std::nullopt;
    return static_cast<SymbolId>(it - operators_.begin());
}

// --- Prime ---------------------------------------------------------------

Prime::Prime(Kind kind, SymbolId symbol, std::shared_ptr<const Word> arg)
    : kind_(kind), symbol_(symbol), arg_(std::move(arg)) {
    std::size_t h = hash_mix(static_cast<std::size_t>(kind_) + 1, symbol_);
    switch (kind_) {
        case Kind::Generator:
            degree_ = 1;
            holes_ = 0;
            break;
        case Kind::Hole:
            degree_ = 0;
            holes_ = 1;
            symbol_ = 0;
            h = 0x5bd1e995;
            break;
        case Kind::Operator:
            degree_ = static_cast<std::uint32_t>(1 + arg_->degree());
            holes_ = static_cast<std::uint32_t>(arg_->hole_count());
            h = hash_mix(h, arg_->hash());
            break;
    }
    hash_ = h;
}

Prime Prime::generator(SymbolId id) { return Prime(Kind::Generator, id, nullptr); }

Prime Prime::apply(SymbolId op, Word argument) {
    return Prime(Kind::Operator, op, std::make_shared<const Word>(std::move(argument)));
}

Prime Prime::hole() { return Prime(Kind::Hole, 0, nullptr); }

bool operator==(const Prime& a, const Prime& b) {
    if (a.kind_ != b.kind_ || a.symbol_ != b.symbol_ || a.hash_ != b.hash_ ||
        a.degree_ != b.degree_)
        return false;
    if (a.kind_ != Prime::Kind::Operator || a.arg_ == b.arg_) return true;
    return *a.arg_ == *b.arg_;
}

// --- Word ----------------------------------------------------------------

Word::Word() { finish(); }

Word::Word(std::vector<Prime> factors) : factors_(std::move(factors)) { finish(); }

Word::Word(Prime prime) : factors_{std::move(prime)} { finish(); }

void Word::finish() {
    std::size_t deg = 0, holes = 0, h = 0xcbf29ce484222325ULL ^ factors_.size();
    for (const auto& p : factors_) {
        deg += p.degree();
        holes += p.hole_count();
        h = hash_mix(h, p.hash());
    }
    degree_ = static_cast<std::uint32_t>(deg);
    holes_ = static_cast<std::uint32_t>(holes);
    hash_ = h;
}

std::size_t Word::depth() const {
    std::size_t d = 0;
    for (const auto& p : factors_)
        if (p.is_operator()) d = std::max(d, 1 + p.argument().depth());
    return d;
}

Word Word::slice(std::size_t first, std::size_t last) const {
    return Word(std::vector<Prime>(factors_.begin() + static_cast<std::ptrdiff_t>(first),
                                   factors_.begin() + static_cast<std::ptrdiff_t>(last)));
}

Word operator*(const Word& a, const Word& b) {
    if (a.is_unit()) return b;
    if (b.is_unit()) return a;
    std::vector<Prime> f;
    f.reserve(a.breadth() + b.breadth());
    f.insert(f.end(), a.factors_.begin(), a.factors_.end());
    f.insert(f.end(), b.factors_.begin(), b.factors_.end());
    return Word(std::move(f));
}

bool operator==(const Word& a, const Word& b) {
    if (a.hash_ != b.hash_ || a.degree_ != b.degree_ || a.factors_.size() != b.factors_.size())
        return false;
    return std::equal(a.factors_.begin(), a.factors_.end(), b.factors_.begin());
}

// --- StarWord ------------------------------------------------------------

StarWord::StarWord(Word w) : word_(std::move(w)) {
    if (word_.hole_count() != 1)
        throw std::invalid_argument("star-word must contain exactly one hole");
}

StarWord StarWord::hole() { return StarWord(Word(Prime::hole())); }

namespace {

Word plug(const Word& w, const Word& s) {
    std::vector<Prime> out;
    out.reserve(w.breadth() + s.breadth());
    for (const auto& p : w.factors()) {
        if (p.hole_count() == 0) {
            out.push_back(p);
        } else if (p.is_hole()) {
            out.insert(out.end(), s.factors().begin(), s.factors().end());
        } else {
            out.push_back(Prime::apply(p.symbol(), plug(p.argument(), s)));
        }
    }
    return Word(std::move(out));
}

}  // namespace

Word StarWord::substitute(const Word& s) const { return plug(word_, s); }

StarWord StarWord::under(SymbolId op) const { return StarWord(Word(Prime::apply(op, word_))); }

StarWord StarWord::between(const Word& left, const Word& right) const {
    return StarWord(left * word_ * right);
}

// --- enumeration ---------------------------------------------------------

namespace {

// words[d] and primes[d] for d <= max_degree, built by degree.
struct WordTable {
    std::vector<std::vector<Word>> words;
    std::vector<std::vector<Prime>> primes;
};

WordTable build_table(const Signature& sig, std::size_t max_degree) {
    WordTable t;
    t.words.resize(max_degree + 1);
    t.primes.resize(max_degree + 1);
    t.words[0].push_back(Word::unit());
    for (std::size_t d = 1; d <= max_degree; ++d) {
        if (d == 1)
            for (SymbolId g = 0; g < sig.generator_count(); ++g)
                t.primes[1].push_back(Prime::generator(g));
        for (SymbolId op = 0; op < sig.operator_count(); ++op)
            for (const auto& arg : t.words[d - 1]) t.primes[d].push_back(Prime::apply(op, arg));
        // first factor of degree i, remainder of degree d - i
        for (std::size_t i = 1; i <= d; ++i)
            for (const auto& head : t.primes[i])
                for (const auto& rest : t.words[d - i]) t.words[d].push_back(Word(head) * rest);
    }
    return t;
}

}  // namespace

std::vector<Word> enumerate_words_of_degree(const Signature& sig, std::size_t degree) {
    auto table = build_table(sig, degree);
    auto out = std::move(table.words[degree]);
    std::sort(out.begin(), out.end(), DegLexLess{});
    return out;
}

std::vector<Word> enumerate_words(const Signature& sig, std::size_t max_degree) {
    auto table = build_table(sig, max_degree);
    std::vector<Word> out;
    for (auto& layer : table.words) {
        std::sort(layer.begin(), layer.end(), DegLexLess{});
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

std::vector<StarWord> enumerate_star_words(const Signature& sig, std::size_t max_degree) {
    auto table = build_table(sig, max_degree);
    for (auto& layer : table.words) std::sort(layer.begin(), layer.end(), DegLexLess{});

    // A star-word factors uniquely as a · H · b where H is the hole or Q(π').
    std::vector<std::vector<Word>> holders(max_degree + 1);
    std::vector<std::vector<Word>> stars(max_degree + 1);
    holders[0].push_back(Word(Prime::hole()));
    for (std::size_t d = 0; d <= max_degree; ++d) {
        if (d >= 1)
            for (SymbolId op = 0; op < sig.operator_count(); ++op)
                for (const auto& inner : stars[d - 1]) holders[d].push_back(Word(Prime::apply(op, inner)));
        for (std::size_t h = 0; h <= d; ++h)
            for (std::size_t a = 0; a + h <= d; ++a) {
                std::size_t b = d - h - a;
                for (const auto& left : table.words[a])
                    for (const auto& holder : holders[h])
                        for (const auto& right : table.words[b])
                            stars[d].push_back(left * holder * right);
            }
    }
    std::vector<StarWord> out;
    for (auto& layer : stars)
        for (auto& w : layer) out.emplace_back(std::move(w));
    return out;
}

}  // namespace rbs
