#include "cumulants/series.hpp"

#include "cumulants/combinatorics.hpp"
#include "cumulants/error.hpp"

namespace cumulants::oracle {

namespace {

void require_constant(const TruncatedSeries& s, int value, const char* what) {
  if (!(s[0] == Scalar(value))) {
    throw DomainError(std::string(what) + " requires constant term " + std::to_string(value));
  }
}

// sum_{j >= 1} r_j (t M)^j truncated at t^n, plus r_0.
TruncatedSeries compose_with_tm(const TruncatedSeries& r, const TruncatedSeries& m, unsigned n) {
  std::vector<Scalar> acc(n + 1);
  acc[0] = r[0];
  // power holds (t M)^j.
  std::vector<Scalar> power(n + 1);
  power[0] = 1;
  for (unsigned j = 1; j <= n; ++j) {
    std::vector<Scalar> next(n + 1);
    for (unsigned a = 0; a < n; ++a) {
      if (power[a].is_zero()) continue;
      for (unsigned b = 0; a + b + 1 <= n && b <= m.truncation(); ++b) {
        next[a + b + 1] += power[a] * m[b];
      }
    }
    power = std::move(next);
    if (j > r.truncation() || r[j].is_zero()) continue;
    for (unsigned k = 0; k <= n; ++k) acc[k] += r[j] * power[k];
  }
  return TruncatedSeries(std::move(acc));
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<Scalar> coefficients) : c_(std::move(coefficients)) {
  if (c_.empty()) throw DomainError("series needs at least the constant coefficient");
}

TruncatedSeries TruncatedSeries::ordinary(std::span<const Scalar> a) {
  std::vector<Scalar> c{Scalar(1)};
  c.insert(c.end(), a.begin(), a.end());
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::exponential(std::span<const Scalar> a) {
  std::vector<Scalar> c{Scalar(1)};
  for (unsigned k = 1; k <= a.size(); ++k) c.push_back(a[k - 1].div_int(factorial(k)));
  return TruncatedSeries(std::move(c));
}

std::vector<Scalar> TruncatedSeries::tail() const { return {c_.begin() + 1, c_.end()}; }

std::vector<Scalar> TruncatedSeries::tail_times_factorial() const {
  std::vector<Scalar> out;
  for (unsigned k = 1; k < c_.size(); ++k) out.push_back(c_[k] * Scalar(factorial(k)));
  return out;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  const unsigned n = std::min(a.truncation(), b.truncation());
  std::vector<Scalar> c(n + 1);
  for (unsigned i = 0; i <= n; ++i) {
    for (unsigned j = 0; i + j <= n; ++j) c[i + j] += a[i] * b[j];
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries series_reciprocal(const TruncatedSeries& s) {
  require_constant(s, 1, "series_reciprocal");
  const unsigned n = s.truncation();
  std::vector<Scalar> b(n + 1);
  b[0] = 1;
  for (unsigned k = 1; k <= n; ++k) {
    Scalar acc;
    for (unsigned j = 1; j <= k; ++j) acc += s[j] * b[k - j];
    b[k] = -acc;
  }
  return TruncatedSeries(std::move(b));
}

TruncatedSeries series_log(const TruncatedSeries& s) {
  require_constant(s, 1, "series_log");
  // L' S = S'  =>  k L_k = k s_k - sum_{j=1}^{k-1} j L_j s_{k-j}.
  const unsigned n = s.truncation();
  std::vector<Scalar> l(n + 1);
  for (unsigned k = 1; k <= n; ++k) {
    Scalar acc = s[k] * Scalar(static_cast<long>(k));
    for (unsigned j = 1; j < k; ++j) acc -= Scalar(static_cast<long>(j)) * l[j] * s[k - j];
    l[k] = acc.div_int(BigInt(k));
  }
  return TruncatedSeries(std::move(l));
}

TruncatedSeries series_exp(const TruncatedSeries& s) {
  require_constant(s, 0, "series_exp");
  // E' = s' E  =>  k E_k = sum_{j=1}^{k} j s_j E_{k-j}.
  const unsigned n = s.truncation();
  std::vector<Scalar> e(n + 1);
  e[0] = 1;
  for (unsigned k = 1; k <= n; ++k) {
    Scalar acc;
    for (unsigned j = 1; j <= k; ++j) acc += Scalar(static_cast<long>(j)) * s[j] * e[k - j];
    e[k] = acc.div_int(BigInt(k));
  }
  return TruncatedSeries(std::move(e));
}

TruncatedSeries series_free_fixed_point(const TruncatedSeries& r) {
  require_constant(r, 1, "series_free_fixed_point");
  const unsigned n = r.truncation();
  std::vector<Scalar> one(n + 1);
  one[0] = 1;
  TruncatedSeries m(std::move(one));
  for (unsigned iteration = 0; iteration < n; ++iteration) m = compose_with_tm(r, m, n);
  return m;
}

TruncatedSeries series_free_inverse(const TruncatedSeries& m) {
  require_constant(m, 1, "series_free_inverse");
  const unsigned n = m.truncation();
  // [t^k] R(tM) = r_k + (terms in r_1..r_{k-1}); solve with r_k = 0 first.
  std::vector<Scalar> r(n + 1);
  r[0] = 1;
  for (unsigned k = 1; k <= n; ++k) {
    const TruncatedSeries partial = compose_with_tm(TruncatedSeries(r), m, k);
    r[k] = m[k] - partial[k];
  }
  return TruncatedSeries(std::move(r));
}

}  // namespace cumulants::oracle
