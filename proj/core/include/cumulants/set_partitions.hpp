#pragma once

#include <vector>

namespace cumulants::oracle {

/// Partition of {1..n} into disjoint nonempty blocks. Blocks are sorted,
/// and ordered by their smallest element.
struct SetPartition {
  std::vector<std::vector<unsigned>> blocks;

  [[nodiscard]] unsigned ground_size() const;
  friend bool operator==(const SetPartition&, const SetPartition&) = default;
};

/// True when no a < b < c < d has a, c in one block and b, d in another.
bool is_noncrossing(const SetPartition& p);

/// True when the blocks are disjoint, nonempty and cover {1..n} exactly.
bool covers_exactly(const SetPartition& p, unsigned n);

constexpr unsigned kMaxEnumeration = 10;

/// All Bell(n) set partitions of {1..n}, 1 <= n <= 10.
std::vector<SetPartition> enumerate_set_partitions(unsigned n);

/// All Catalan(n) non-crossing partitions of {1..n}, 1 <= n <= 10.
std::vector<SetPartition> enumerate_noncrossing_partitions(unsigned n);

/// All 2^{n-1} ordered compositions of n.
std::vector<std::vector<unsigned>> enumerate_compositions(unsigned n);

}  // namespace cumulants::oracle
