#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "cumulants/scalar.hpp"
#include "cumulants/transforms.hpp"

namespace cumulants::cli {

// Rational  -> "p/q" (or "p" when q = 1)
// Polynomial -> {"symbol": "lambda", "coeffs": ["0", "1", "1"]}  (lambda + lambda^2)
nlohmann::json scalar_to_json(const Scalar& s);
/// Accepts the encodings above, plus bare JSON integers. Throws ParseError.
Scalar scalar_from_json(const nlohmann::json& j);

nlohmann::json sequence_to_json(std::span<const Scalar> values);

/// A sequence read from a JSON document: either a bare array of scalars or
/// {"kind": "moments|classical|boolean|free", "values": [...]}.
struct JsonSequence {
  std::optional<SequenceKind> kind;
  std::vector<Scalar> values;
};

JsonSequence sequence_from_json(const nlohmann::json& j);

/// Comma-separated rationals, e.g. "1/2,3,-4/5". Throws ParseError.
std::vector<Scalar> parse_rational_list(const std::string& text);

}  // namespace cumulants::cli
