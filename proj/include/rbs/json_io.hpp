#pragma once

// JSON encodings of kernel values and verification reports. Output key order
// and array order are deterministic; no timing data is recorded.

#include "json.hpp"

#include "rbs/algebra.hpp"
#include "rbs/gsb.hpp"
#include "rbs/hopf.hpp"
#include "rbs/rewriting.hpp"
#include "rbs/syntax.hpp"

namespace rbs {

using Json = nlohmann::ordered_json;

/// [{coeff: "n/d", word}], descending Deg-lex.
Json to_json(const Poly& p, const Signature& sig);
/// [{coeff, left, right}], same order as the text form.
Json to_json(const TensorPoly& t, const Signature& sig);
Json to_json(const ReductionTrace& trace, const Signature& sig);
Json to_json(const GsbReport& report, const Signature& sig);
Json to_json(const HopfReport& report);

/// Inverse of to_json for polynomials and tensors; throws ParseError.
Poly poly_from_json(const Json& j, const Signature& sig);
TensorPoly tensor_from_json(const Json& j, const Signature& sig);

}  // namespace rbs
