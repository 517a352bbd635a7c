#include "cumulants/distributions.hpp"

#include "cumulants/combinatorics.hpp"
#include "cumulants/error.hpp"

namespace cumulants {

namespace {

constexpr Distribution kAll[] = {
    Distribution::poisson,  Distribution::compound_poisson, Distribution::exponential,
    Distribution::uniform,  Distribution::bernoulli,        Distribution::binomial,
    Distribution::gaussian, Distribution::wigner,           Distribution::marchenko_pastur,
};

void require_order(unsigned order) {
  if (order == 0) throw DomainError("distribution order must be >= 1");
}

const Scalar& param(const DistributionSpec& spec, const std::string& name) {
  auto it = spec.params.find(name);
  if (it == spec.params.end()) {
    throw DomainError(std::string(to_string(spec.name)) + " requires parameter '" + name + "'");
  }
  return it->second;
}

unsigned positive_integer(const Scalar& s, const char* what) {
  if (!s.is_rational() || !s.rational().is_integer() || s.rational().sign() <= 0 ||
      !s.rational().numerator().fits_uint_p()) {
    throw DomainError(std::string(what) + " must be a concrete positive integer");
  }
  return static_cast<unsigned>(s.rational().numerator().get_ui());
}

// Weight rule of the form rule(i, j) = base^j.
WeightSpec power_weights(std::string name, Scalar base) {
  return {std::move(name), [base](unsigned, unsigned j) { return base.pow(j); }, Scaling::plain};
}

}  // namespace

std::string_view to_string(Distribution d) {
  switch (d) {
    case Distribution::poisson:
      return "poisson";
    case Distribution::compound_poisson:
      return "compound_poisson";
    case Distribution::exponential:
      return "exponential";
    case Distribution::uniform:
      return "uniform";
    case Distribution::bernoulli:
      return "bernoulli";
    case Distribution::binomial:
      return "binomial";
    case Distribution::gaussian:
      return "gaussian";
    case Distribution::wigner:
      return "wigner";
    case Distribution::marchenko_pastur:
      return "marchenko_pastur";
  }
  return "?";
}

Distribution parse_distribution(std::string_view name) {
  for (auto d : kAll) {
    if (name == to_string(d)) return d;
  }
  throw ParseError("unknown distribution '" + std::string(name) + "'");
}

std::vector<std::string> parameter_names(Distribution d) {
  switch (d) {
    case Distribution::poisson:
    case Distribution::compound_poisson:
    case Distribution::exponential:
    case Distribution::marchenko_pastur:
      return {"lambda"};
    case Distribution::uniform:
      return {"a", "b"};
    case Distribution::bernoulli:
      return {"p"};
    case Distribution::binomial:
      return {"n", "p"};
    case Distribution::gaussian:
      return {"mu", "sigma2"};
    case Distribution::wigner:
      return {};
  }
  return {};
}

MomentSequence distribution_moments(const DistributionSpec& spec, unsigned order) {
  switch (spec.name) {
    case Distribution::poisson:
      return poisson_moments(param(spec, "lambda"), order);
    case Distribution::compound_poisson:
      if (!spec.inner) throw DomainError("compound_poisson requires inner moments");
      return compound_poisson_moments(param(spec, "lambda"), *spec.inner, order);
    case Distribution::exponential:
      return exponential_moments(param(spec, "lambda"), order);
    case Distribution::uniform:
      return uniform_moments(param(spec, "a"), param(spec, "b"), order);
    case Distribution::bernoulli:
      return bernoulli_moments(param(spec, "p"), order);
    case Distribution::binomial:
      return binomial_moments(positive_integer(param(spec, "n"), "binomial n"), param(spec, "p"),
                              order);
    case Distribution::gaussian:
      return gaussian_moments(param(spec, "mu"), param(spec, "sigma2"), order);
    case Distribution::wigner:
      return wigner_moments(order);
    case Distribution::marchenko_pastur:
      return marchenko_pastur_moments(param(spec, "lambda"), order);
  }
  throw DomainError("unknown distribution");
}

MomentSequence poisson_moments(const Scalar& lambda, unsigned order) {
  require_order(order);
  std::vector<Scalar> out;
  out.reserve(order);
  for (unsigned i = 1; i <= order; ++i) {
    Scalar acc;
    Scalar power = lambda;
    for (unsigned k = 1; k <= i; ++k) {
      acc += Scalar(stirling_second(i, k)) * power;
      power *= lambda;
    }
    out.push_back(std::move(acc));
  }
  return MomentSequence(std::move(out));
}

MomentSequence compound_poisson_moments(const Scalar& lambda, const MomentSequence& inner,
                                        unsigned order) {
  require_order(order);
  if (inner.order() < order) {
    throw SequenceTooShort("compound_poisson: inner moments of order " +
                           std::to_string(inner.order()) + " cannot give order " +
                           std::to_string(order));
  }
  // lambda^{nu} = lambda * lambda^{nu - 1}, so the row starts at 1.
  const WeightSpec w = power_weights("compound_poisson", lambda);
  std::vector<Scalar> out;
  out.reserve(order);
  for (unsigned i = 1; i <= order; ++i) {
    out.push_back(lambda * partition_transform(i, w, inner.values()));
  }
  return MomentSequence(std::move(out));
}

MomentSequence exponential_moments(const Scalar& lambda, unsigned order) {
  require_order(order);
  if (!lambda.is_rational()) throw DomainError("exponential: lambda must be rational");
  if (lambda.rational().is_zero()) throw DomainError("exponential: lambda must be nonzero");
  const Rational scale = lambda.rational().reciprocal();
  std::vector<Scalar> out;
  out.reserve(order);
  Rational power(1);
  for (unsigned i = 1; i <= order; ++i) {
    power *= scale;
    out.emplace_back(Rational(factorial(i)) * power);
  }
  return MomentSequence(std::move(out));
}

MomentSequence uniform_moments(const Scalar& a, const Scalar& b, unsigned order) {
  require_order(order);
  const Scalar width = b - a;
  std::vector<Scalar> out;
  out.reserve(order);
  for (unsigned i = 1; i <= order; ++i) {
    Scalar acc;
    for (unsigned j = 0; j <= i; ++j) {
      acc += (Scalar(binomial(i, j)) * a.pow(i - j) * width.pow(j)).div_int(BigInt(j + 1));
    }
    out.push_back(std::move(acc));
  }
  return MomentSequence(std::move(out));
}

MomentSequence bernoulli_moments(const Scalar& p, unsigned order) {
  require_order(order);
  return MomentSequence(std::vector<Scalar>(order, p));
}

MomentSequence binomial_moments(unsigned trials, const Scalar& p, unsigned order) {
  require_order(order);
  if (trials == 0) throw DomainError("binomial: number of trials must be >= 1");
  // (n)_{nu} = n * (n - 1)_{nu - 1}.
  const WeightSpec w{"binomial",
                     [trials](unsigned, unsigned j) {
                       return Scalar(falling_factorial(static_cast<long>(trials) - 1, j));
                     },
                     Scaling::plain};
  const std::vector<Scalar> constant(order, p);
  std::vector<Scalar> out;
  out.reserve(order);
  for (unsigned i = 1; i <= order; ++i) {
    out.push_back(Scalar(BigInt(trials)) * partition_transform(i, w, constant));
  }
  return MomentSequence(std::move(out));
}

MomentSequence gaussian_moments(const Scalar& mu, const Scalar& sigma2, unsigned order) {
  require_order(order);
  const Scalar half_variance = sigma2.div_int(BigInt(2));
  std::vector<Scalar> out;
  out.reserve(order);
  for (unsigned n = 1; n <= order; ++n) {
    Scalar acc;
    for (unsigned k = 0; 2 * k <= n; ++k) {
      acc += (half_variance.pow(k) * Scalar(falling_factorial(n, 2 * k)) * mu.pow(n - 2 * k))
                 .div_int(factorial(k));
    }
    out.push_back(std::move(acc));
  }
  return MomentSequence(std::move(out));
}

MomentSequence wigner_moments(unsigned order) {
  require_order(order);
  std::vector<Scalar> out;
  out.reserve(order);
  for (unsigned i = 1; i <= order; ++i) {
    out.emplace_back(i % 2 == 0 ? catalan(i / 2) : BigInt(0));
  }
  return MomentSequence(std::move(out));
}

MomentSequence marchenko_pastur_moments(const Scalar& lambda, unsigned order) {
  require_order(order);
  return moments_from_free_cumulants(
      CumulantSequence(CumulantKind::free, std::vector<Scalar>(order, lambda)));
}

}  // namespace cumulants
