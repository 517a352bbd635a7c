#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cumulants/scalar.hpp"
#include "cumulants/transforms.hpp"

namespace cumulants {

/// Random rational sequence with small numerators and denominators.
std::vector<Scalar> random_rational_sequence(std::mt19937_64& rng, unsigned length);

struct SelftestOptions {
  unsigned max_order = 8;  // at most oracle::kMaxEnumeration
  unsigned samples = 25;
  std::uint64_t seed = 20080101;
  ConversionWeights weights = ConversionWeights::standard();
};

struct SuiteResult {
  std::string name;
  unsigned cases = 0;
  unsigned failures = 0;
  std::string first_counterexample;

  [[nodiscard]] bool passed() const { return failures == 0; }
};

struct SelftestReport {
  std::vector<SuiteResult> suites;

  [[nodiscard]] bool passed() const;
  /// First failing suite, or nullptr.
  [[nodiscard]] const SuiteResult* first_failure() const;
};

/// Runs the round-trip and oracle-equivalence suites against a Transformer
/// built from options.weights. Throws DomainError if max_order is 0 or
/// exceeds the enumeration cap.
SelftestReport run_selftest(const SelftestOptions& options);

}  // namespace cumulants
