#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cumulants/scalar.hpp"
#include "cumulants/transforms.hpp"

namespace cumulants {

enum class Distribution {
  poisson,
  compound_poisson,
  exponential,
  uniform,
  bernoulli,
  binomial,
  gaussian,
  wigner,
  marchenko_pastur,
};

std::string_view to_string(Distribution d);
/// Throws ParseError for unknown names.
Distribution parse_distribution(std::string_view name);

/// Names of the parameters each law reads from DistributionSpec::params.
std::vector<std::string> parameter_names(Distribution d);

/// A named law with exact (possibly symbolic) parameters.
///   poisson: lambda               compound_poisson: lambda, inner moments
///   exponential: lambda (rational) uniform: a, b
///   bernoulli: p                  binomial: n (positive integer), p
///   gaussian: mu, sigma2          wigner: -
///   marchenko_pastur: lambda
struct DistributionSpec {
  Distribution name;
  std::map<std::string, Scalar> params;
  std::optional<MomentSequence> inner;
};

/// Dispatches to the generator for spec.name. Throws DomainError for missing
/// or invalid parameters.
MomentSequence distribution_moments(const DistributionSpec& spec, unsigned order);

/// a_i = sum_k S(i, k) lambda^k.
MomentSequence poisson_moments(const Scalar& lambda, unsigned order);

/// a_i = sum_{mu |- i} lambda^{nu_mu} d_mu inner_mu; requires inner.order() >= order.
MomentSequence compound_poisson_moments(const Scalar& lambda, const MomentSequence& inner,
                                        unsigned order);

/// a_i = i! / lambda^i. lambda must be a nonzero rational.
MomentSequence exponential_moments(const Scalar& lambda, unsigned order);

/// a_i = sum_j C(i, j) a^{i-j} (b - a)^j / (j + 1).
MomentSequence uniform_moments(const Scalar& a, const Scalar& b, unsigned order);

/// a_i = p.
MomentSequence bernoulli_moments(const Scalar& p, unsigned order);

/// a_i = sum_{mu |- i} (n)_{nu_mu} d_mu p^{nu_mu}.
MomentSequence binomial_moments(unsigned trials, const Scalar& p, unsigned order);

/// a_n = sum_{k <= n/2} (sigma2 / 2)^k (n)_{2k} / k! mu^{n-2k}. Parameterized by
/// the variance so that a symbolic variance stays polynomial.
MomentSequence gaussian_moments(const Scalar& mu, const Scalar& sigma2, unsigned order);

/// Semicircle law: a_{2i} = C_i, odd moments zero.
MomentSequence wigner_moments(unsigned order);

/// Free Poisson law: all free cumulants equal lambda.
MomentSequence marchenko_pastur_moments(const Scalar& lambda, unsigned order);

}  // namespace cumulants
