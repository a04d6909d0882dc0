#include "rbs/syntax.hpp"

#include <cctype>
#include <vector>

namespace rbs {

namespace {

constexpr std::string_view kHole = "\xE2\x98\x85";         // ★
constexpr std::string_view kTensor = "\xE2\x8A\x97";       // ⊗
constexpr std::string_view kMinus = "\xE2\x88\x92";        // −
constexpr std::string_view kAsciiHole = "#";
constexpr std::string_view kAsciiTensor = "(x)";

bool ident_start(char c) {
    auto u = static_cast<unsigned char>(c);
    return std::isalpha(u) || c == '_';
}

bool ident_char(char c) {
    auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || c == '_';
}

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Parser {
public:
    Parser(std::string_view text, const Signature& sig, bool allow_holes)
        : s_(text), sig_(sig), allow_holes_(allow_holes) {}

    Poly poly_to_end() {
        auto p = poly();
        expect_end();
        return p;
    }

    TensorPoly tensor_to_end() {
        TensorPoly out;
        Scalar sign = leading_sign();
        for (;;) {
            auto [coef, left] = term();
            skip_ws();
            if (!consume(kTensor) && !consume(kAsciiTensor)) fail("expected tensor sign");
            auto right = word();
            out += tensor_of(Scalar(sign * coef) * left, right);
            if (!next_sign(sign)) break;
        }
        expect_end();
        return out;
    }

    Scalar scalar_to_end() {
        Scalar sign = leading_sign();
        skip_ws();
        if (at_end() || !is_digit(peek())) fail("expected a number");
        Scalar r = rational();
        expect_end();
        return sign * r;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { fail(msg, pos_); }
    [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
        throw ParseError(msg, at);
    }

    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    bool looking_at(std::string_view tok) const { return s_.substr(pos_, tok.size()) == tok; }

    bool consume(std::string_view tok) {
        if (!looking_at(tok)) return false;
        pos_ += tok.size();
        return true;
    }

    void expect_end() {
        skip_ws();
        if (!at_end()) fail("unexpected input");
    }

    Scalar leading_sign() {
        skip_ws();
        if (consume("-") || consume(kMinus)) return -1;
        consume("+");
        return 1;
    }

    bool next_sign(Scalar& sign) {
        skip_ws();
        if (consume("+")) {
            sign = 1;
            return true;
        }
        if (consume("-") || consume(kMinus)) {
            sign = -1;
            return true;
        }
        return false;
    }

    Poly poly() {
        Poly out;
        Scalar sign = leading_sign();
        for (;;) {
            auto [coef, w] = term();
            out += Scalar(sign * coef) * w;
            if (!next_sign(sign)) break;
        }
        return out;
    }

    std::string digits() {
        std::size_t start = pos_;
        while (!at_end() && is_digit(peek())) ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

    Scalar rational() {
        std::size_t start = pos_;
        Scalar r(digits());
        skip_ws();
        if (consume("/")) {
            skip_ws();
            if (at_end() || !is_digit(peek())) fail("expected denominator");
            mpz_class den(digits());
            if (den == 0) fail("zero denominator", start);
            r /= den;
        }
        r.canonicalize();
        return r;
    }

    bool starts_prime() const {
        return !at_end() && (ident_start(peek()) || looking_at(kHole) || looking_at(kAsciiHole));
    }

    std::pair<Scalar, Poly> term() {
        skip_ws();
        if (!at_end() && is_digit(peek())) {
            Scalar coef = rational();
            skip_ws();
            bool star = consume("*");
            skip_ws();
            if (starts_prime() || (!at_end() && is_digit(peek()))) return {coef, word()};
            if (star) fail("expected a word after '*'");
            return {coef, Poly::one()};
        }
        if (!starts_prime()) fail("expected a term");
        return {Scalar(1), word()};
    }

    Poly word() {
        skip_ws();
        if (!at_end() && is_digit(peek())) {
            std::size_t start = pos_;
            if (digits() != "1") fail("only 1 may stand for a word", start);
            return Poly::one();
        }
        if (!starts_prime()) fail("expected a word");
        Poly product = Poly::one();
        while (starts_prime()) {
            product = concat_mul(product, prime());
            skip_ws();
        }
        return product;
    }

    Poly prime() {
        std::size_t start = pos_;
        if (consume(kHole) || consume(kAsciiHole)) {
            if (!allow_holes_) fail("unexpected ★", start);
            return Poly(Word(Prime::hole()));
        }
        while (!at_end() && ident_char(peek())) ++pos_;
        auto names = split_names(s_.substr(start, pos_ - start), start);
        Poly product = Poly::one();
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (auto g = sig_.find_generator(names[i])) {
                product = concat_mul(product, Poly(Word(Prime::generator(*g))));
                continue;
            }
            auto op = *sig_.find_operator(names[i]);
            skip_ws();
            if (i + 1 != names.size() || !consume("("))
                fail("operator '" + std::string(names[i]) + "' needs an argument", start);
            auto arg = poly();
            skip_ws();
            if (!consume(")")) fail("expected ')'");
            product = concat_mul(product, apply_operator_linear(op, arg));
        }
        return product;
    }

    bool known(std::string_view name) const {
        return sig_.find_generator(name) || sig_.find_operator(name);
    }

    // Split an identifier run into declared names; the split must be unique.
    std::vector<std::string_view> split_names(std::string_view run, std::size_t at) const {
        if (known(run)) return {run};
        const std::size_t n = run.size();
        std::vector<int> ways(n + 1, 0);  // ways[i]: splits of run[i..], capped at 2
        std::vector<std::size_t> next(n + 1, 0);
        ways[n] = 1;
        for (std::size_t i = n; i-- > 0;) {
            for (std::size_t j = i + 1; j <= n; ++j) {
                if (ways[j] == 0 || !known(run.substr(i, j - i))) continue;
                if (ways[i] == 0) next[i] = j;
                ways[i] = std::min(2, ways[i] + ways[j]);
            }
        }
        if (ways[0] == 0) fail("unknown identifier '" + std::string(run) + "'", at);
        if (ways[0] > 1) fail("ambiguous identifier '" + std::string(run) + "'", at);
        std::vector<std::string_view> out;
        for (std::size_t i = 0; i < n; i = next[i]) out.push_back(run.substr(i, next[i] - i));
        return out;
    }

    std::string_view s_;
    const Signature& sig_;
    bool allow_holes_;
    std::size_t pos_ = 0;
};

void format_into(std::string& out, const Word& w, const Signature& sig, FormatOptions opts) {
    if (w.is_unit()) {
        out += '1';
        return;
    }
    bool first = true;
    for (const auto& p : w.factors()) {
        if (!first) out += ' ';
        first = false;
        switch (p.kind()) {
            case Prime::Kind::Generator:
                out += sig.generator_name(p.symbol());
                break;
            case Prime::Kind::Hole:
                out += opts.ascii ? kAsciiHole : kHole;
                break;
            case Prime::Kind::Operator:
                out += sig.operator_name(p.symbol());
                out += '(';
                format_into(out, p.argument(), sig, opts);
                out += ')';
                break;
        }
    }
}

// Appends one signed term; `body` is the printed monomial, `is_unit` marks 1.
void append_term(std::string& out, bool first, const Scalar& c, const std::string& body,
                 bool is_unit) {
    Scalar mag = abs(c);
    if (first)
        out += c < 0 ? "-" : "";
    else
        out += c < 0 ? " - " : " + ";
    if (is_unit) {
        out += format_scalar(mag);
    } else if (mag == 1) {
        out += body;
    } else {
        out += format_scalar(mag);
        out += '*';
        out += body;
    }
}

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)),
      position_(position) {}

Poly parse_poly(std::string_view text, const Signature& sig) {
    return Parser(text, sig, false).poly_to_end();
}

Word parse_word(std::string_view text, const Signature& sig) {
    auto p = Parser(text, sig, false).poly_to_end();
    if (p.size() != 1 || p.begin()->second != 1) throw ParseError("expected a single word", 0);
    return p.begin()->first;
}

StarWord parse_star_word(std::string_view text, const Signature& sig) {
    auto p = Parser(text, sig, true).poly_to_end();
    if (p.size() != 1 || p.begin()->second != 1) throw ParseError("expected a single star-word", 0);
    const auto& w = p.begin()->first;
    if (w.hole_count() != 1)
        throw ParseError("star-word needs exactly one ★, found " + std::to_string(w.hole_count()), 0);
    return StarWord(w);
}

TensorPoly parse_tensor(std::string_view text, const Signature& sig) {
    return Parser(text, sig, false).tensor_to_end();
}

Scalar parse_scalar(std::string_view text) {
    static const Signature empty({}, {"R"});
    return Parser(text, empty, false).scalar_to_end();
}

std::string format(const Word& w, const Signature& sig, FormatOptions opts) {
    std::string out;
    format_into(out, w, sig, opts);
    return out;
}

std::string format(const StarWord& pi, const Signature& sig, FormatOptions opts) {
    return format(pi.word(), sig, opts);
}

std::string format(const Poly& p, const Signature& sig, FormatOptions opts) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : p.sorted_terms()) {
        append_term(out, first, c, format(w, sig, opts), w.is_unit());
        first = false;
    }
    return out;
}

std::string format(const TensorPoly& t, const Signature& sig, FormatOptions opts) {
    if (t.is_zero()) return "0";
    std::string out;
    bool first = true;
    const std::string sep = opts.ascii ? std::string(" ") + std::string(kAsciiTensor) + " "
                                       : std::string(kTensor);
    for (const auto& [legs, c] : t.sorted_terms()) {
        append_term(out, first, c, format(legs.first, sig, opts) + sep + format(legs.second, sig, opts),
                    false);
        first = false;
    }
    return out;
}

std::string format_scalar(const Scalar& c) { return c.get_str(); }

}  // namespace rbs
