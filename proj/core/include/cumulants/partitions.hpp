#pragma once

#include <span>
#include <vector>

#include "cumulants/rational.hpp"

namespace cumulants {

/// A part size together with how many times it occurs.
struct PartMultiplicity {
  unsigned part = 0;
  unsigned multiplicity = 0;

  friend bool operator==(const PartMultiplicity&, const PartMultiplicity&) = default;
};

/// Integer partition of `target` in multiplicity form (1^{r_1} 2^{r_2} ...),
/// parts strictly increasing.
class Partition {
 public:
  /// Validates the invariants; throws DomainError otherwise.
  Partition(unsigned target, std::vector<PartMultiplicity> parts);

  [[nodiscard]] unsigned target() const { return target_; }
  [[nodiscard]] std::span<const PartMultiplicity> parts() const { return parts_; }

  /// Number of parts, counted with multiplicity.
  [[nodiscard]] unsigned length() const { return length_; }

  /// Parts as a weakly decreasing list, e.g. (1^2, 2) -> {2, 1, 1}.
  [[nodiscard]] std::vector<unsigned> descending_parts() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  unsigned target_;
  unsigned length_ = 0;
  std::vector<PartMultiplicity> parts_;
};

/// All partitions of i (i >= 1), ordered lexicographically by their weakly
/// decreasing part lists: for i = 4, (1^4), (1^2 2), (2^2), (1 3), (4).
std::vector<Partition> enumerate_partitions(unsigned i);

/// Number of partitions p(i), counted without materializing them.
BigInt partition_count(unsigned i);

inline unsigned partition_length(const Partition& p) { return p.length(); }

/// d = i! / (prod_j r_j! (j!)^{r_j}): the number of set partitions of an
/// i-set whose block sizes form the multiset p.
BigInt partition_coefficient(const Partition& p);

/// nu! / prod_j r_j!: number of ordered compositions with part multiset p.
BigInt composition_multiplicity(const Partition& p);

}  // namespace cumulants
