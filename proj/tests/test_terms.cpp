#include <set>
#include <unordered_set>

#include "doctest.h"
#include "oracles.hpp"
#include "rbs/ordering.hpp"
#include "rbs/random.hpp"
#include "rbs/syntax.hpp"
#include "rbs/terms.hpp"

using namespace rbs;

namespace {

const Signature kStd = Signature::standard();
const Signature kTwo({"x1", "x2"});

Word W(const char* s, const Signature& sig = kStd) { return parse_word(s, sig); }

// breadth/depth straight from the printed form: top-level factors are
// separated by spaces outside parentheses; depth is the max paren nesting.
std::size_t text_depth(const std::string& s) {
    std::size_t cur = 0, best = 0;
    for (char c : s) {
        if (c == '(') best = std::max(best, ++cur);
        if (c == ')') --cur;
    }
    return best;
}

}  // namespace

TEST_SUITE("terms") {

TEST_CASE("signature validation") {
    CHECK_THROWS_AS(Signature({"x"}, {}), std::invalid_argument);
    CHECK_THROWS_AS(Signature({"x", "x"}), std::invalid_argument);
    CHECK_THROWS_AS(Signature({"x"}, {"R", "x"}), std::invalid_argument);
    CHECK_THROWS_AS(Signature({"1x"}), std::invalid_argument);
    Signature s({"a", "b"}, {"P"});
    CHECK(s.lead_operator() == 0);
    CHECK(s.trail_operator() == 0);
    CHECK(kStd.operator_name(kStd.lead_operator()) == "R");
    CHECK(kStd.operator_name(kStd.trail_operator()) == "S");
}

TEST_CASE("parse words") {
    CHECK(W("1").is_unit());
    CHECK(W("1").breadth() == 0);
    Word w = W("x1 x2 R(R(x1) S(x2))", kTwo);
    CHECK(w.breadth() == 3);
    CHECK(w.degree() == 7);
    StarWord pi = parse_star_word("R(★ x)", kStd);
    CHECK(pi.word().breadth() == 1);
    CHECK(pi.word()[0].is_operator());
    CHECK(parse_star_word("R(# x)", kStd) == pi);
    CHECK_THROWS_AS(parse_star_word("R(x)", kStd), ParseError);
    CHECK_THROWS_AS(parse_word("R(★)", kStd), ParseError);
    CHECK_THROWS_AS(parse_word("T(x)", kStd), ParseError);
    CHECK_THROWS_AS(parse_word("R x", kStd), ParseError);
}

TEST_CASE("unseparated names split into declared symbols") {
    Signature sig({"x", "y"});
    CHECK(parse_word("xS(y)", sig) == parse_word("x S(y)", sig));
    CHECK(parse_word("xy", sig) == parse_word("x y", sig));
    Signature ambiguous({"a", "ab", "b"});
    CHECK(parse_word("ab", ambiguous).breadth() == 1);
    CHECK_THROWS_AS(parse_word("abb", ambiguous), ParseError);
}

TEST_CASE("format") {
    Signature xy({"x", "y"});
    CHECK(format(Word(), kStd) == "1");
    CHECK(format(Word(Prime::apply(0, parse_word("x y", xy))), xy) == "R(x y)");
    CHECK(format(parse_star_word("R(★ x)", kStd), kStd) == "R(★ x)");
    CHECK(format(parse_star_word("R(★ x)", kStd), kStd, {true}) == "R(# x)");
}

TEST_CASE("degree breadth depth") {
    CHECK(W("1").degree() == 0);
    CHECK(W("R(1)").degree() == 1);
    CHECK(W("x1 x2 R(R(x1) S(x2))", kTwo).breadth() == 3);
    CHECK(parse_word("R(x y)", Signature({"x", "y"})).breadth() == 1);
    Signature xy({"x", "y"});
    CHECK(parse_word("x y", xy).depth() == 0);
    CHECK(W("R(x)").depth() == 1);
    CHECK(parse_word("R(S(x) y)", xy).depth() == 2);
    CHECK(W("1").depth() == 0);

    for (const auto& w : enumerate_words(kStd, 4)) {
        auto text = format(w, kStd);
        CHECK(w.depth() == text_depth(text));
        std::size_t top = 0, nest = 0;
        for (char c : text) {
            if (c == '(') ++nest;
            if (c == ')') --nest;
            if (c == ' ' && nest == 0) ++top;
        }
        CHECK(w.breadth() == (w.is_unit() ? 0 : top + 1));
    }
}

TEST_CASE("star-word substitution") {
    Word w = W("R(x) S(1)");
    CHECK(StarWord::hole().substitute(w) == w);
    CHECK(parse_star_word("R(★ x)", kStd).substitute(W("S(1)")) == W("R(S(1) x)"));
    CHECK(parse_star_word("x ★ x", kStd).substitute(W("R(1) S(1)")) == W("x R(1) S(1) x"));
    CHECK(parse_star_word("R(★)", kStd).substitute(Word()) == W("R(1)"));
    CHECK_THROWS_AS(StarWord(W("x")), std::invalid_argument);
}

TEST_CASE("enumerate_words small cases") {
    auto w0 = enumerate_words(kStd, 0);
    REQUIRE(w0.size() == 1);
    CHECK(w0[0].is_unit());

    auto w1 = enumerate_words(kStd, 1);
    std::set<std::string> got;
    for (const auto& w : w1) got.insert(format(w, kStd));
    CHECK(got == std::set<std::string>{"1", "x", "R(1)", "S(1)"});

    // all Omega-words of degree <= 2: 1 + 3 + 15
    CHECK(enumerate_words(kStd, 2).size() == 19);
}

TEST_CASE("enumerate_words matches the counting recurrence, unique, ascending") {
    for (const auto& [sig, n] : {std::pair{kStd, std::size_t{5}}, {kTwo, std::size_t{4}},
                                 {Signature({"x"}, {"P", "Q", "T"}), std::size_t{4}}}) {
        auto words = enumerate_words(sig, n);
        auto counts = oracle::word_counts(sig.generator_count(), sig.operator_count(), n);
        std::vector<std::size_t> by_degree(n + 1, 0);
        for (const auto& w : words) ++by_degree.at(w.degree());
        for (std::size_t d = 0; d <= n; ++d) CHECK(by_degree[d] == counts[d]);
        std::unordered_set<Word, WordHash> seen(words.begin(), words.end());
        CHECK(seen.size() == words.size());
        for (std::size_t i = 1; i < words.size(); ++i)
            CHECK(compare_words(words[i - 1], words[i]) == Ordering::Less);
        CHECK(enumerate_words_of_degree(sig, n).size() == counts[n]);
    }
}

TEST_CASE("enumerate_star_words") {
    auto s0 = enumerate_star_words(kStd, 0);
    REQUIRE(s0.size() == 1);
    CHECK(s0[0] == StarWord::hole());

    auto s1 = enumerate_star_words(kStd, 1);
    std::set<std::string> got;
    for (const auto& s : s1) {
        CHECK(s.word().hole_count() == 1);
        got.insert(format(s, kStd));
    }
    for (const char* want : {"★", "R(★)", "S(★)", "x ★", "★ x"}) CHECK(got.count(want) == 1);

    for (std::size_t n : {1u, 2u, 3u}) {
        auto stars = enumerate_star_words(kStd, n);
        auto counts = oracle::star_counts(1, 2, n);
        std::size_t total = 0;
        for (auto c : counts) total += c;
        CHECK(stars.size() == total);
        std::unordered_set<Word, WordHash> seen;
        for (const auto& s : stars) seen.insert(s.word());
        CHECK(seen.size() == stars.size());
    }
}

TEST_CASE("degree is additive under substitution") {
    auto words = enumerate_words(kStd, 3);
    for (const auto& pi : enumerate_star_words(kStd, 2))
        for (const auto& w : words) CHECK(pi.substitute(w).degree() == pi.degree() + w.degree());
}

TEST_CASE("parse and format round trip") {
    for (const auto& sig : {kStd, kTwo}) {
        for (const auto& w : enumerate_words(sig, sig.generator_count() == 1 ? 4 : 3)) {
            CHECK(parse_word(format(w, sig), sig) == w);
            CHECK(parse_word(format(w, sig, {true}), sig) == w);
        }
    }
    WordSampler sampler(kTwo, 12);
    Rng rng(7);
    for (int i = 0; i < 1000; ++i) {
        auto d = 5 + static_cast<std::size_t>(draw_below(rng, 8));
        Word w = sampler.word(d, rng);
        REQUIRE(parse_word(format(w, kTwo), kTwo) == w);
    }
}

TEST_CASE("sampler covers every word of a degree") {
    WordSampler sampler(kStd, 3);
    auto counts = oracle::word_counts(1, 2, 3);
    CHECK(sampler.count(3) == counts[3]);
    Rng rng(11);
    std::unordered_set<Word, WordHash> seen;
    for (int i = 0; i < 4000; ++i) seen.insert(sampler.word(3, rng));
    CHECK(seen.size() == counts[3]);
}

}  // TEST_SUITE
