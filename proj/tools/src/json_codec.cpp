#include "cumulants_cli/json_codec.hpp"

#include "cumulants/error.hpp"

namespace cumulants::cli {

nlohmann::json scalar_to_json(const Scalar& s) {
  if (s.is_rational()) return s.rational().to_string();
  const Polynomial& p = s.polynomial();
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.to_string());
  return {{"symbol", p.symbol()}, {"coeffs", std::move(coeffs)}};
}

Scalar scalar_from_json(const nlohmann::json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational::parse(j.dump());
  if (j.is_object()) {
    if (!j.contains("symbol") || !j["symbol"].is_string() || !j.contains("coeffs") ||
        !j["coeffs"].is_array()) {
      throw ParseError("polynomial must have string 'symbol' and array 'coeffs'");
    }
    const std::string symbol = j["symbol"].get<std::string>();
    if (symbol.empty()) throw ParseError("polynomial symbol must be non-empty");
    std::vector<Rational> coeffs;
    for (const auto& c : j["coeffs"]) {
      if (!c.is_string() && !c.is_number_integer()) throw ParseError("coefficient must be a string");
      coeffs.push_back(Rational::parse(c.is_string() ? c.get<std::string>() : c.dump()));
    }
    return Polynomial(symbol, std::move(coeffs));
  }
  throw ParseError("scalar must be a rational string or a polynomial object, got " + j.dump());
}

nlohmann::json sequence_to_json(std::span<const Scalar> values) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& v : values) out.push_back(scalar_to_json(v));
  return out;
}

JsonSequence sequence_from_json(const nlohmann::json& j) {
  JsonSequence out;
  const nlohmann::json* values = &j;
  if (j.is_object()) {
    if (j.contains("kind")) {
      if (!j["kind"].is_string()) throw ParseError("'kind' must be a string");
      out.kind = parse_sequence_kind(j["kind"].get<std::string>());
    }
    if (!j.contains("values")) throw ParseError("sequence object needs a 'values' array");
    values = &j["values"];
  }
  if (!values->is_array()) throw ParseError("sequence must be a JSON array");
  for (const auto& v : *values) out.values.push_back(scalar_from_json(v));
  return out;
}

std::vector<Scalar> parse_rational_list(const std::string& text) {
  std::vector<Scalar> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    const std::string item = text.substr(start, comma == std::string::npos ? comma : comma - start);
    out.emplace_back(Rational::parse(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace cumulants::cli
