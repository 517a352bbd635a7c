#include "cumulants/set_partitions.hpp"

#include <algorithm>
#include <string>

#include "cumulants/error.hpp"

namespace cumulants::oracle {

namespace {

void check_size(unsigned n) {
  if (n < 1 || n > kMaxEnumeration) {
    throw DomainError("enumeration size must be in [1, " + std::to_string(kMaxEnumeration) +
                      "], got " + std::to_string(n));
  }
}

SetPartition from_growth_string(const std::vector<unsigned>& labels) {
  SetPartition p;
  for (unsigned pos = 0; pos < labels.size(); ++pos) {
    if (labels[pos] == p.blocks.size()) p.blocks.emplace_back();
    p.blocks[labels[pos]].push_back(pos + 1);
  }
  return p;
}

}  // namespace

unsigned SetPartition::ground_size() const {
  unsigned n = 0;
  for (const auto& b : blocks) n += static_cast<unsigned>(b.size());
  return n;
}

bool is_noncrossing(const SetPartition& p) {
  const unsigned n = p.ground_size();
  std::vector<unsigned> block_of(n + 1, 0);
  for (unsigned b = 0; b < p.blocks.size(); ++b) {
    for (unsigned x : p.blocks[b]) block_of[x] = b;
  }
  for (unsigned a = 1; a <= n; ++a) {
    for (unsigned b = a + 1; b <= n; ++b) {
      if (block_of[b] == block_of[a]) continue;
      for (unsigned c = b + 1; c <= n; ++c) {
        if (block_of[c] != block_of[a]) continue;
        for (unsigned d = c + 1; d <= n; ++d) {
          if (block_of[d] == block_of[b]) return false;
        }
      }
    }
  }
  return true;
}

bool covers_exactly(const SetPartition& p, unsigned n) {
  std::vector<int> seen(n + 1, 0);
  for (const auto& block : p.blocks) {
    if (block.empty()) return false;
    for (unsigned x : block) {
      if (x < 1 || x > n || seen[x]++ != 0) return false;
    }
  }
  return std::all_of(seen.begin() + 1, seen.end(), [](int s) { return s == 1; });
}

std::vector<SetPartition> enumerate_set_partitions(unsigned n) {
  check_size(n);
  // Restricted growth strings: labels[0] = 0, labels[k] <= 1 + max(labels[0..k-1]).
  std::vector<unsigned> labels(n, 0);
  std::vector<unsigned> prefix_max(n, 0);
  std::vector<SetPartition> out;
  for (;;) {
    out.push_back(from_growth_string(labels));
    int k = static_cast<int>(n) - 1;
    while (k > 0 && labels[k] == prefix_max[k - 1] + 1) --k;
    if (k == 0) break;
    ++labels[k];
    prefix_max[k] = std::max(prefix_max[k - 1], labels[k]);
    for (unsigned j = k + 1; j < n; ++j) {
      labels[j] = 0;
      prefix_max[j] = prefix_max[k];
    }
  }
  return out;
}

std::vector<SetPartition> enumerate_noncrossing_partitions(unsigned n) {
  std::vector<SetPartition> all = enumerate_set_partitions(n);
  std::erase_if(all, [](const SetPartition& p) { return !is_noncrossing(p); });
  return all;
}

std::vector<std::vector<unsigned>> enumerate_compositions(unsigned n) {
  if (n == 0) throw DomainError("compositions of zero are not enumerated");
  std::vector<std::vector<unsigned>> out;
  // Bit k of `cuts` set means a cut after position k + 1.
  for (unsigned long cuts = 0; cuts < (1UL << (n - 1)); ++cuts) {
    std::vector<unsigned> parts;
    unsigned run = 1;
    for (unsigned k = 0; k + 1 < n; ++k) {
      if (cuts & (1UL << k)) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    out.push_back(std::move(parts));
  }
  return out;
}

}  // namespace cumulants::oracle
