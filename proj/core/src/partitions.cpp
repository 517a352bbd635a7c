#include "cumulants/partitions.hpp"

#include <algorithm>
#include <string>

#include "cumulants/combinatorics.hpp"
#include "cumulants/error.hpp"

namespace cumulants {

namespace {

Partition from_descending(unsigned target, const std::vector<unsigned>& parts) {
  std::vector<PartMultiplicity> grouped;
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    if (!grouped.empty() && grouped.back().part == *it) {
      ++grouped.back().multiplicity;
    } else {
      grouped.push_back({*it, 1});
    }
  }
  return Partition(target, std::move(grouped));
}

}  // namespace

Partition::Partition(unsigned target, std::vector<PartMultiplicity> parts)
    : target_(target), parts_(std::move(parts)) {
  if (target_ == 0) throw DomainError("partition target must be positive");
  unsigned sum = 0;
  unsigned previous = 0;
  for (const auto& [part, multiplicity] : parts_) {
    if (part == 0 || multiplicity == 0 || part <= previous) {
      throw DomainError("partition parts must be positive and strictly increasing");
    }
    previous = part;
    sum += part * multiplicity;
    length_ += multiplicity;
  }
  if (sum != target_) {
    throw DomainError("partition parts sum to " + std::to_string(sum) + ", expected " +
                      std::to_string(target_));
  }
}

std::vector<unsigned> Partition::descending_parts() const {
  std::vector<unsigned> out;
  out.reserve(length_);
  for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) {
    out.insert(out.end(), it->multiplicity, it->part);
  }
  return out;
}

std::vector<Partition> enumerate_partitions(unsigned i) {
  if (i == 0) throw DomainError("enumerate_partitions: i must be positive");

  // Walk from (i) down to (1^i) in reverse lexicographic order of the
  // decreasing part list, then reverse.
  std::vector<Partition> out;
  std::vector<unsigned> parts{i};
  for (;;) {
    out.push_back(from_descending(i, parts));

    // Drop trailing ones; stop once nothing larger than 1 is left.
    unsigned ones = 0;
    while (!parts.empty() && parts.back() == 1) {
      parts.pop_back();
      ++ones;
    }
    if (parts.empty()) break;

    // Decrement the last part > 1 and refill the remainder greedily with
    // parts no larger than it.
    const unsigned k = --parts.back();
    unsigned remainder = ones + 1;
    while (remainder > 0) {
      const unsigned next = std::min(k, remainder);
      parts.push_back(next);
      remainder -= next;
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

BigInt partition_count(unsigned i) {
  // Euler's coin-change recurrence.
  std::vector<BigInt> ways(i + 1, BigInt(0));
  ways[0] = 1;
  for (unsigned part = 1; part <= i; ++part) {
    for (unsigned n = part; n <= i; ++n) ways[n] += ways[n - part];
  }
  return ways[i];
}

BigInt partition_coefficient(const Partition& p) {
  // Multinomial i! / prod (j!)^{r_j} as a product of binomials, then the
  // exact division by each r_j!.
  BigInt d(1);
  unsigned placed = 0;
  for (const auto& [part, multiplicity] : p.parts()) {
    for (unsigned t = 0; t < multiplicity; ++t) {
      placed += part;
      d *= binomial(placed, part);
    }
  }
  for (const auto& pm : p.parts()) {
    const BigInt r = factorial(pm.multiplicity);
    mpz_divexact(d.get_mpz_t(), d.get_mpz_t(), r.get_mpz_t());
  }
  return d;
}

BigInt composition_multiplicity(const Partition& p) {
  BigInt out(1);
  unsigned placed = 0;
  for (const auto& pm : p.parts()) {
    placed += pm.multiplicity;
    out *= binomial(placed, pm.multiplicity);
  }
  return out;
}

}  // namespace cumulants
