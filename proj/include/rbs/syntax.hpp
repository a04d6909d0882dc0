#pragma once

// Text syntax for words, star-words, polynomials and tensors.
//
//   poly   := ['+'|'-'] term (('+'|'-') term)*
//   term   := [rational ['*']] word ['⊗' word]       (⊗ only in tensors)
//   word   := '1' | prime+
//   prime  := generator | operator '(' poly ')' | '★'
//
// Concatenation is juxtaposition. Names may be written without separating
// spaces when the run splits uniquely into declared names ("xS(y)").
// Operator arguments may be polynomials; they are distributed on parse.
// ASCII alternatives: '#' for ★, "(x)" for ⊗.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rbs/algebra.hpp"
#include "rbs/terms.hpp"

namespace rbs {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

Poly parse_poly(std::string_view text, const Signature& sig);
/// A single word with coefficient 1.
Word parse_word(std::string_view text, const Signature& sig);
/// A single word with exactly one ★.
StarWord parse_star_word(std::string_view text, const Signature& sig);
TensorPoly parse_tensor(std::string_view text, const Signature& sig);
/// integer ['/' positive-integer], optionally signed.
Scalar parse_scalar(std::string_view text);

struct FormatOptions {
    bool ascii = false;
};

std::string format(const Word& w, const Signature& sig, FormatOptions opts = {});
std::string format(const StarWord& pi, const Signature& sig, FormatOptions opts = {});
/// Monomials in descending Deg-lex order; "0" for the zero polynomial.
std::string format(const Poly& p, const Signature& sig, FormatOptions opts = {});
std::string format(const TensorPoly& t, const Signature& sig, FormatOptions opts = {});
std::string format_scalar(const Scalar& c);

}  // namespace rbs
