#pragma once

#include <span>
#include <vector>

#include "cumulants/scalar.hpp"

namespace cumulants::oracle {

/// Formal power series truncated after t^n: coefficients c_0..c_n.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::vector<Scalar> coefficients);

  /// 1 + sum_k a_k t^k.
  static TruncatedSeries ordinary(std::span<const Scalar> a);
  /// 1 + sum_k a_k t^k / k!.
  static TruncatedSeries exponential(std::span<const Scalar> a);

  [[nodiscard]] unsigned truncation() const { return static_cast<unsigned>(c_.size()) - 1; }
  [[nodiscard]] const Scalar& operator[](unsigned k) const { return c_[k]; }
  [[nodiscard]] std::span<const Scalar> coefficients() const { return c_; }

  /// c_1..c_n.
  [[nodiscard]] std::vector<Scalar> tail() const;
  /// k! c_k for k = 1..n.
  [[nodiscard]] std::vector<Scalar> tail_times_factorial() const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Scalar> c_;
};

/// Product truncated to the shorter of the two.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
/// 1 / s; requires c_0 = 1.
TruncatedSeries series_reciprocal(const TruncatedSeries& s);
/// log s; requires c_0 = 1.
TruncatedSeries series_log(const TruncatedSeries& s);
/// exp s; requires c_0 = 0.
TruncatedSeries series_exp(const TruncatedSeries& s);

/// Given R with c_0 = 1, returns the M solving M(t) = R(t M(t)) by iterating
/// M <- R(t M) from M = 1; one more coefficient settles per iteration.
TruncatedSeries series_free_fixed_point(const TruncatedSeries& r);
/// Given M with c_0 = 1, returns R with M(t) = R(t M(t)), solving for r_n
/// one coefficient at a time.
TruncatedSeries series_free_inverse(const TruncatedSeries& m);

}  // namespace cumulants::oracle
