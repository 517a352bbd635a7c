#include "cumulants/oracles.hpp"

#include <string>

#include "cumulants/combinatorics.hpp"
#include "cumulants/error.hpp"

namespace cumulants::oracle {

namespace {

void require_length(std::span<const Scalar> s, unsigned i) {
  if (i == 0) throw DomainError("oracle order must be >= 1");
  if (s.size() < i) {
    throw SequenceTooShort("oracle needs " + std::to_string(i) + " terms, got " +
                           std::to_string(s.size()));
  }
}

template <typename Weight>
Scalar block_sum(const std::vector<SetPartition>& partitions, std::span<const Scalar> s,
                 Weight weight) {
  Scalar acc;
  for (const auto& p : partitions) {
    Scalar term = weight(static_cast<unsigned>(p.blocks.size()));
    for (const auto& block : p.blocks) term *= s[block.size() - 1];
    acc += term;
  }
  return acc;
}

template <typename Weight>
Scalar composition_sum(std::span<const Scalar> s, unsigned i, Weight weight) {
  Scalar acc;
  for (const auto& parts : enumerate_compositions(i)) {
    Scalar term = weight(static_cast<unsigned>(parts.size()));
    for (unsigned part : parts) term *= s[part - 1];
    acc += term;
  }
  return acc;
}

Scalar alternating_factorial(unsigned blocks) {
  const BigInt f = factorial(blocks - 1);
  return Scalar(blocks % 2 == 1 ? f : BigInt(-f));
}

}  // namespace

Scalar classical_cumulant(std::span<const Scalar> m, unsigned i) {
  require_length(m, i);
  return block_sum(enumerate_set_partitions(i), m, alternating_factorial);
}

Scalar classical_moment(std::span<const Scalar> kappa, unsigned i) {
  require_length(kappa, i);
  return block_sum(enumerate_set_partitions(i), kappa, [](unsigned) { return Scalar(1); });
}

Scalar boolean_cumulant(std::span<const Scalar> m, unsigned i) {
  require_length(m, i);
  return composition_sum(m, i, [](unsigned k) { return Scalar(k % 2 == 1 ? 1 : -1); });
}

Scalar boolean_moment(std::span<const Scalar> h, unsigned i) {
  require_length(h, i);
  return composition_sum(h, i, [](unsigned) { return Scalar(1); });
}

Scalar free_moment(std::span<const Scalar> r, unsigned i) {
  require_length(r, i);
  return block_sum(enumerate_noncrossing_partitions(i), r, [](unsigned) { return Scalar(1); });
}

std::vector<Scalar> series_classical_cumulants(std::span<const Scalar> m) {
  return series_log(TruncatedSeries::exponential(m)).tail_times_factorial();
}

std::vector<Scalar> series_classical_moments(std::span<const Scalar> kappa) {
  std::vector<Scalar> c{Scalar(0)};
  const auto egf = TruncatedSeries::exponential(kappa);
  c.insert(c.end(), egf.coefficients().begin() + 1, egf.coefficients().end());
  return series_exp(TruncatedSeries(std::move(c))).tail_times_factorial();
}

std::vector<Scalar> series_boolean_cumulants(std::span<const Scalar> m) {
  std::vector<Scalar> h = series_reciprocal(TruncatedSeries::ordinary(m)).tail();
  for (auto& x : h) x = -x;
  return h;
}

std::vector<Scalar> series_boolean_moments(std::span<const Scalar> h) {
  std::vector<Scalar> negated;
  for (const auto& x : h) negated.push_back(-x);
  return series_reciprocal(TruncatedSeries::ordinary(negated)).tail();
}

std::vector<Scalar> series_free_cumulants(std::span<const Scalar> m) {
  return series_free_inverse(TruncatedSeries::ordinary(m)).tail();
}

std::vector<Scalar> series_free_moments(std::span<const Scalar> r) {
  return series_free_fixed_point(TruncatedSeries::ordinary(r)).tail();
}

}  // namespace cumulants::oracle
