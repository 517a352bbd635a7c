#include "cumulants/combinatorics.hpp"

#include <mutex>
#include <string>
#include <vector>

#include "cumulants/error.hpp"

namespace cumulants {

namespace {

// Triangular table grown on demand. row[i][k] for 0 <= k <= i.
class StirlingTable {
 public:
  using Step = BigInt (*)(const std::vector<std::vector<BigInt>>&, unsigned, unsigned);

  explicit StirlingTable(Step step) : step_(step) { rows_.push_back({BigInt(1)}); }

  BigInt get(unsigned i, unsigned k) {
    std::lock_guard lock(mutex_);
    while (rows_.size() <= i) {
      const auto n = static_cast<unsigned>(rows_.size());
      std::vector<BigInt> row(n + 1);
      for (unsigned j = 1; j <= n; ++j) row[j] = step_(rows_, n, j);
      rows_.push_back(std::move(row));
    }
    return rows_[i][k];
  }

 private:
  Step step_;
  std::mutex mutex_;
  std::vector<std::vector<BigInt>> rows_;
};

BigInt at(const std::vector<std::vector<BigInt>>& rows, unsigned n, unsigned k) {
  return k < rows[n].size() ? rows[n][k] : BigInt(0);
}

// s(n, k) = s(n-1, k-1) - (n-1) s(n-1, k)
BigInt first_kind_step(const std::vector<std::vector<BigInt>>& rows, unsigned n, unsigned k) {
  return BigInt(at(rows, n - 1, k - 1) - BigInt(n - 1) * at(rows, n - 1, k));
}

// S(n, k) = S(n-1, k-1) + k S(n-1, k)
BigInt second_kind_step(const std::vector<std::vector<BigInt>>& rows, unsigned n, unsigned k) {
  return BigInt(at(rows, n - 1, k - 1) + BigInt(k) * at(rows, n - 1, k));
}

void check_range(const char* what, unsigned i, unsigned k) {
  if (i < 1 || k < 1 || k > i) {
    throw DomainError(std::string(what) + ": index out of range (i=" + std::to_string(i) +
                      ", k=" + std::to_string(k) + ")");
  }
}

}  // namespace

BigInt factorial(unsigned n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigInt falling_factorial(long x, unsigned k) {
  BigInt out(1);
  for (unsigned j = 0; j < k; ++j) out *= BigInt(x - static_cast<long>(j));
  return out;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

BigInt stirling_first(unsigned i, unsigned k) {
  check_range("stirling_first", i, k);
  static StirlingTable table(first_kind_step);
  return table.get(i, k);
}

BigInt stirling_second(unsigned i, unsigned k) {
  check_range("stirling_second", i, k);
  static StirlingTable table(second_kind_step);
  return table.get(i, k);
}

BigInt catalan(unsigned n) {
  BigInt out = binomial(2 * n, n);
  mpz_divexact_ui(out.get_mpz_t(), out.get_mpz_t(), n + 1);
  return out;
}

}  // namespace cumulants
