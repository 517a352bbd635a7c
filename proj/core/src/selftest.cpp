#include "cumulants/selftest.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "cumulants/combinatorics.hpp"
#include "cumulants/error.hpp"
#include "cumulants/oracles.hpp"
#include "cumulants/partitions.hpp"

namespace cumulants {

namespace {

std::string render(std::span<const Scalar> values) {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < values.size(); ++k) os << (k ? "," : "") << values[k];
  os << ']';
  return os.str();
}

// Compares two sequences entrywise; returns an empty string when equal.
std::string mismatch(std::span<const Scalar> input, std::span<const Scalar> got,
                     std::span<const Scalar> want) {
  for (std::size_t k = 0; k < std::min(got.size(), want.size()); ++k) {
    if (!(got[k] == want[k])) {
      std::ostringstream os;
      os << "input=" << render(input) << " order " << k + 1 << ": got " << got[k]
         << ", expected " << want[k];
      return os.str();
    }
  }
  if (got.size() != want.size()) return "input=" + render(input) + ": length mismatch";
  return {};
}

using SequenceCheck = std::function<std::string(std::span<const Scalar>)>;

SuiteResult run_suite(std::string name, const SelftestOptions& options, std::uint64_t salt,
                      const SequenceCheck& check) {
  SuiteResult result;
  result.name = std::move(name);
  std::mt19937_64 rng(options.seed ^ salt);
  for (unsigned s = 0; s < options.samples; ++s) {
    const auto input = random_rational_sequence(rng, options.max_order);
    ++result.cases;
    std::string failure = check(input);
    if (!failure.empty()) {
      if (result.failures++ == 0) result.first_counterexample = std::move(failure);
    }
  }
  return result;
}

std::vector<Scalar> values_of(const CumulantSequence& c) { return {c.values().begin(), c.values().end()}; }
std::vector<Scalar> values_of(const MomentSequence& m) { return {m.values().begin(), m.values().end()}; }

// Bell numbers by the Bell triangle.
std::vector<BigInt> bell_numbers(unsigned n) {
  std::vector<BigInt> bell{BigInt(1)};
  std::vector<BigInt> row{BigInt(1)};
  for (unsigned k = 1; k <= n; ++k) {
    std::vector<BigInt> next{row.back()};
    for (const auto& x : row) next.push_back(BigInt(next.back() + x));
    bell.push_back(next.front());
    row = std::move(next);
  }
  return bell;
}

SuiteResult counting_suite(unsigned max_order) {
  SuiteResult result;
  result.name = "partition_counts";
  const auto bell = bell_numbers(max_order);
  auto fail = [&result](std::string what) {
    if (result.failures++ == 0) result.first_counterexample = std::move(what);
  };
  for (unsigned n = 1; n <= max_order; ++n) {
    ++result.cases;
    const auto set_partitions = oracle::enumerate_set_partitions(n);
    if (set_partitions.size() != bell[n]) fail("Bell(" + std::to_string(n) + ") count mismatch");
    if (oracle::enumerate_noncrossing_partitions(n).size() != catalan(n)) {
      fail("Catalan(" + std::to_string(n) + ") count mismatch");
    }
    std::map<std::vector<unsigned>, unsigned> by_shape;
    for (const auto& p : set_partitions) {
      std::vector<unsigned> shape;
      for (const auto& b : p.blocks) shape.push_back(static_cast<unsigned>(b.size()));
      std::sort(shape.rbegin(), shape.rend());
      ++by_shape[shape];
    }
    for (const auto& lambda : enumerate_partitions(n)) {
      if (partition_coefficient(lambda) != by_shape[lambda.descending_parts()]) {
        fail("d_lambda differs from set-partition shape count at n=" + std::to_string(n));
      }
    }
  }
  return result;
}

}  // namespace

std::vector<Scalar> random_rational_sequence(std::mt19937_64& rng, unsigned length) {
  std::uniform_int_distribution<long> numerator(-9, 9);
  std::uniform_int_distribution<long> denominator(1, 6);
  std::vector<Scalar> out;
  out.reserve(length);
  for (unsigned k = 0; k < length; ++k) {
    out.emplace_back(Rational(BigInt(numerator(rng)), BigInt(denominator(rng))));
  }
  return out;
}

bool SelftestReport::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const auto& s) { return s.passed(); });
}

const SuiteResult* SelftestReport::first_failure() const {
  for (const auto& s : suites) {
    if (!s.passed()) return &s;
  }
  return nullptr;
}

SelftestReport run_selftest(const SelftestOptions& options) {
  if (options.max_order == 0 || options.max_order > oracle::kMaxEnumeration) {
    throw DomainError("selftest max_order must be in [1, " +
                      std::to_string(oracle::kMaxEnumeration) + "]");
  }
  const Transformer transformer(options.weights);
  const unsigned n = options.max_order;

  auto to_cumulants = [&transformer](CumulantKind kind, std::span<const Scalar> m) {
    return values_of(transformer.cumulants_from_moments(kind, MomentSequence({m.begin(), m.end()})));
  };
  auto to_moments = [&transformer](CumulantKind kind, std::span<const Scalar> c) {
    return values_of(transformer.moments_from_cumulants(kind, CumulantSequence(kind, {c.begin(), c.end()})));
  };
  auto pointwise = [n](const std::function<Scalar(std::span<const Scalar>, unsigned)>& f,
                       std::span<const Scalar> s) {
    std::vector<Scalar> out;
    for (unsigned i = 1; i <= n; ++i) out.push_back(f(s, i));
    return out;
  };

  SelftestReport report;
  report.suites.push_back(counting_suite(n));

  const std::pair<const char*, CumulantKind> kinds[] = {
      {"roundtrip_classical", CumulantKind::classical},
      {"roundtrip_boolean", CumulantKind::boolean},
      {"roundtrip_free", CumulantKind::free},
  };
  std::uint64_t salt = 1;
  for (const auto& [name, kind] : kinds) {
    report.suites.push_back(run_suite(name, options, salt++, [&, kind = kind](auto m) {
      return mismatch(m, to_moments(kind, to_cumulants(kind, m)), m);
    }));
  }
  report.suites.push_back(run_suite("roundtrip_factorial", options, salt++, [](auto m) {
    const auto f = factorial_moments_from_moments(MomentSequence({m.begin(), m.end()}));
    return mismatch(m, values_of(moments_from_factorial_moments(f)), m);
  }));

  report.suites.push_back(run_suite("oracle_classical_set_partitions", options, salt++, [&](auto m) {
    return mismatch(m, to_cumulants(CumulantKind::classical, m),
                    pointwise(oracle::classical_cumulant, m));
  }));
  report.suites.push_back(run_suite("oracle_classical_series", options, salt++, [&](auto m) {
    return mismatch(m, to_cumulants(CumulantKind::classical, m),
                    oracle::series_classical_cumulants(m));
  }));
  report.suites.push_back(run_suite("oracle_classical_moments", options, salt++, [&](auto k) {
    return mismatch(k, to_moments(CumulantKind::classical, k), pointwise(oracle::classical_moment, k));
  }));
  report.suites.push_back(run_suite("oracle_boolean_compositions", options, salt++, [&](auto m) {
    return mismatch(m, to_cumulants(CumulantKind::boolean, m),
                    pointwise(oracle::boolean_cumulant, m));
  }));
  report.suites.push_back(run_suite("oracle_boolean_series", options, salt++, [&](auto m) {
    return mismatch(m, to_cumulants(CumulantKind::boolean, m), oracle::series_boolean_cumulants(m));
  }));
  report.suites.push_back(run_suite("oracle_boolean_moments", options, salt++, [&](auto h) {
    return mismatch(h, to_moments(CumulantKind::boolean, h), pointwise(oracle::boolean_moment, h));
  }));
  report.suites.push_back(run_suite("oracle_free_noncrossing", options, salt++, [&](auto r) {
    return mismatch(r, to_moments(CumulantKind::free, r), pointwise(oracle::free_moment, r));
  }));
  report.suites.push_back(run_suite("oracle_free_series", options, salt++, [&](auto m) {
    return mismatch(m, to_cumulants(CumulantKind::free, m), oracle::series_free_cumulants(m));
  }));
  return report;
}

}  // namespace cumulants
