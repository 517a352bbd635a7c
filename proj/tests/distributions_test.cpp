#include <gtest/gtest.h>

#include <random>

#include "cumulants/combinatorics.hpp"
#include "cumulants/distributions.hpp"
#include "cumulants/error.hpp"
#include "cumulants/oracles.hpp"
#include "test_support.hpp"

namespace cumulants {
namespace {

using testing::ints;
using testing::poly;
using testing::q;

const Scalar kLambda = Scalar::symbol("lambda");
const Scalar kP = Scalar::symbol("p");
const Scalar kMu = Scalar::symbol("mu");

std::vector<Scalar> vec(const MomentSequence& m) { return {m.values().begin(), m.values().end()}; }
std::vector<Scalar> vec(const CumulantSequence& c) { return {c.values().begin(), c.values().end()}; }

std::vector<Scalar> evaluate_all(const MomentSequence& m, const Rational& at) {
  std::vector<Scalar> out;
  for (const auto& v : m.values()) out.emplace_back(v.evaluate(at));
  return out;
}

TEST(Poisson, Examples) {
  EXPECT_EQ(vec(poisson_moments(kLambda, 2)), (std::vector<Scalar>{poly({0, 1}), poly({0, 1, 1})}));
  EXPECT_EQ(vec(poisson_moments(Scalar(1), 3)), ints({1, 2, 5}));
  const auto m = poisson_moments(kLambda, 8);
  EXPECT_EQ(vec(classical_cumulants_from_moments(m)), std::vector<Scalar>(8, kLambda));
  EXPECT_EQ(oracle::series_classical_cumulants(m.values()), std::vector<Scalar>(8, kLambda));
}

TEST(CompoundPoisson, Examples) {
  EXPECT_EQ(compound_poisson_moments(kLambda, MomentSequence(ints({1, 1, 1, 1, 1})), 5),
            poisson_moments(kLambda, 5));
  EXPECT_EQ(vec(compound_poisson_moments(Scalar(1), MomentSequence({Scalar(q("3/7"))}), 1)),
            (std::vector<Scalar>{Scalar(q("3/7"))}));
  EXPECT_THROW(compound_poisson_moments(kLambda, MomentSequence(ints({1, 2})), 3),
               SequenceTooShort);
}

TEST(CompoundPoisson, CumulantsScaleInnerMoments) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 5; ++t) {
    const auto inner = testing::random_rationals(rng, 6);
    const auto m = compound_poisson_moments(kLambda, MomentSequence(inner), 6);
    std::vector<Scalar> want;
    for (const auto& x : inner) want.push_back(kLambda * x);
    EXPECT_EQ(vec(classical_cumulants_from_moments(m)), want);
    EXPECT_EQ(oracle::series_classical_cumulants(m.values()), want);
  }
}

TEST(Exponential, Examples) {
  EXPECT_EQ(vec(exponential_moments(Scalar(1), 4)), ints({1, 2, 6, 24}));
  EXPECT_EQ(vec(exponential_moments(Scalar(2), 2)),
            (std::vector<Scalar>{Scalar(q("1/2")), Scalar(q("1/2"))}));
  const auto k = classical_cumulants_from_moments(exponential_moments(Scalar(1), 8));
  for (unsigned i = 1; i <= 8; ++i) EXPECT_EQ(k.at(i), Scalar(factorial(i - 1)));
  EXPECT_THROW(exponential_moments(Scalar(0), 3), DomainError);
  EXPECT_THROW(exponential_moments(kLambda, 3), DomainError);
}

TEST(Uniform, Examples) {
  EXPECT_EQ(vec(uniform_moments(Scalar(-1), Scalar(1), 4)),
            (std::vector<Scalar>{Scalar(0), Scalar(q("1/3")), Scalar(0), Scalar(q("1/5"))}));
  EXPECT_EQ(vec(uniform_moments(Scalar(0), Scalar(1), 2)),
            (std::vector<Scalar>{Scalar(q("1/2")), Scalar(q("1/3"))}));
  const Scalar c(q("-5/3"));
  const auto point = uniform_moments(c, c, 5);
  for (unsigned i = 1; i <= 5; ++i) EXPECT_EQ(point.at(i), c.pow(i));
}

TEST(Bernoulli, Examples) {
  EXPECT_EQ(vec(bernoulli_moments(kP, 3)), std::vector<Scalar>(3, kP));
  EXPECT_EQ(vec(bernoulli_moments(Scalar(1), 3)), ints({1, 1, 1}));
  EXPECT_EQ(classical_cumulants_from_moments(bernoulli_moments(kP, 2)).at(2), kP - kP * kP);
}

TEST(Binomial, Examples) {
  EXPECT_EQ(binomial_moments(1, kP, 6), bernoulli_moments(kP, 6));
  EXPECT_EQ(binomial_moments(2, kP, 2).at(2), Scalar(poly({0, 2, 2}, "p")));
}

TEST(Binomial, MatchesDirectExpectation) {
  // E[S^i] = sum_k C(n, k) p^k (1 - p)^{n-k} k^i.
  const Scalar one_minus_p = Scalar(1) - kP;
  for (unsigned n = 1; n <= 5; ++n) {
    const auto m = binomial_moments(n, kP, 6);
    for (unsigned i = 1; i <= 6; ++i) {
      Scalar want;
      for (unsigned k = 0; k <= n; ++k) {
        want += Scalar(binomial(n, k)) * kP.pow(k) * one_minus_p.pow(n - k) *
                Scalar(BigInt(k)).pow(i);
      }
      EXPECT_EQ(m.at(i), want) << "n=" << n << " i=" << i;
    }
  }
}

TEST(Binomial, CumulantsAreAdditive) {
  const auto bernoulli = classical_cumulants_from_moments(bernoulli_moments(kP, 6));
  for (unsigned n = 1; n <= 5; ++n) {
    const auto k = classical_cumulants_from_moments(binomial_moments(n, kP, 6));
    for (unsigned i = 1; i <= 6; ++i) EXPECT_EQ(k.at(i), Scalar(BigInt(n)) * bernoulli.at(i));
  }
}

TEST(Gaussian, Examples) {
  EXPECT_EQ(vec(gaussian_moments(Scalar(0), Scalar(1), 6)), ints({0, 1, 0, 3, 0, 15}));
  const auto point = gaussian_moments(kMu, Scalar(0), 6);
  for (unsigned i = 1; i <= 6; ++i) EXPECT_EQ(point.at(i), kMu.pow(i));
  std::vector<Scalar> want(10, Scalar(0));
  want[0] = kMu;
  want[1] = 1;
  EXPECT_EQ(vec(classical_cumulants_from_moments(gaussian_moments(kMu, Scalar(1), 10))), want);
}

TEST(Gaussian, SatisfiesRecurrence) {
  const Scalar sigma2 = Scalar::symbol("s");
  for (const auto& [mu, var] : {std::pair{kMu, Scalar(q("3/2"))}, std::pair{Scalar(q("-2/5")), sigma2}}) {
    const auto m = gaussian_moments(mu, var, 12);
    EXPECT_EQ(m.at(1), mu);
    EXPECT_EQ(m.at(2), mu * m.at(1) + var);
    for (unsigned n = 3; n <= 12; ++n) {
      EXPECT_EQ(m.at(n), mu * m.at(n - 1) + Scalar(static_cast<long>(n - 1)) * var * m.at(n - 2));
    }
  }
}

TEST(Gaussian, MatchesHermiteSum) {
  // H_n^{(nu)}(x) = sum_k (-nu/2)^k (n)_{2k} / k! x^{n-2k} with x = mu, nu = -sigma2.
  const Rational sigma2 = q("7/3");
  const Rational nu = -sigma2;
  const auto m = gaussian_moments(kMu, Scalar(sigma2), 10);
  for (unsigned n = 1; n <= 10; ++n) {
    Scalar h;
    for (unsigned k = 0; 2 * k <= n; ++k) {
      const Rational coeff =
          (-nu / Rational(2)).pow(k) * Rational(falling_factorial(n, 2 * k)) / Rational(factorial(k));
      h += Scalar(coeff) * kMu.pow(n - 2 * k);
    }
    EXPECT_EQ(m.at(n), h) << "n=" << n;
  }
}

TEST(Wigner, Examples) {
  EXPECT_EQ(vec(wigner_moments(8)), ints({0, 1, 0, 2, 0, 5, 0, 14}));
  EXPECT_EQ(vec(free_cumulants_from_moments(wigner_moments(8))), ints({0, 1, 0, 0, 0, 0, 0, 0}));
  EXPECT_EQ(vec(wigner_moments(1)), ints({0}));
}

TEST(MarchenkoPastur, Examples) {
  EXPECT_EQ(marchenko_pastur_moments(kLambda, 4).at(4), poly({0, 1, 6, 6, 1}));
  EXPECT_EQ(marchenko_pastur_moments(kLambda, 8).at(8),
            poly({0, 1, 28, 196, 490, 490, 196, 28, 1}));
  EXPECT_EQ(vec(marchenko_pastur_moments(Scalar(0), 5)), ints({0, 0, 0, 0, 0}));
}

TEST(MarchenkoPastur, EvenMomentCoefficientsArePalindromic) {
  const auto m = marchenko_pastur_moments(kLambda, 12);
  for (unsigned i = 1; i <= 6; ++i) {
    const auto c = m.at(2 * i).polynomial().coeffs();
    ASSERT_EQ(c.size(), 2 * i + 1);
    EXPECT_TRUE(c[0].is_zero());
    for (unsigned k = 1; k <= 2 * i; ++k) EXPECT_EQ(c[k], c[2 * i + 1 - k]);
  }
}

TEST(Distributions, SymbolicEvaluationCommutes) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 5; ++t) {
    const Rational x = testing::random_rational(rng);
    const Scalar sx(x);
    const unsigned n = 8;
    EXPECT_EQ(evaluate_all(poisson_moments(kLambda, n), x), vec(poisson_moments(sx, n)));
    EXPECT_EQ(evaluate_all(marchenko_pastur_moments(kLambda, n), x),
              vec(marchenko_pastur_moments(sx, n)));
    EXPECT_EQ(evaluate_all(bernoulli_moments(kP, n), x), vec(bernoulli_moments(sx, n)));
    EXPECT_EQ(evaluate_all(binomial_moments(3, kP, n), x), vec(binomial_moments(3, sx, n)));
    EXPECT_EQ(evaluate_all(gaussian_moments(kMu, Scalar(2), n), x),
              vec(gaussian_moments(sx, Scalar(2), n)));
    EXPECT_EQ(evaluate_all(gaussian_moments(Scalar(1), kMu, n), x),
              vec(gaussian_moments(Scalar(1), sx, n)));
    EXPECT_EQ(evaluate_all(uniform_moments(kP, Scalar(2), n), x),
              vec(uniform_moments(sx, Scalar(2), n)));
    const MomentSequence inner(testing::random_rationals(rng, n));
    EXPECT_EQ(evaluate_all(compound_poisson_moments(kLambda, inner, n), x),
              vec(compound_poisson_moments(sx, inner, n)));
  }
}

TEST(Distributions, DispatchAndErrors) {
  DistributionSpec spec{Distribution::binomial, {{"n", Scalar(2)}, {"p", kP}}, std::nullopt};
  EXPECT_EQ(distribution_moments(spec, 4), binomial_moments(2, kP, 4));
  spec.params["n"] = kP;
  EXPECT_THROW(distribution_moments(spec, 4), DomainError);
  spec.params.erase("n");
  EXPECT_THROW(distribution_moments(spec, 4), DomainError);
  EXPECT_THROW(distribution_moments({Distribution::compound_poisson, {{"lambda", kLambda}}, {}}, 3),
               DomainError);
  EXPECT_EQ(distribution_moments({Distribution::wigner, {}, {}}, 4), wigner_moments(4));
  EXPECT_THROW(wigner_moments(0), DomainError);
  EXPECT_EQ(parse_distribution("marchenko_pastur"), Distribution::marchenko_pastur);
  EXPECT_THROW(parse_distribution("lognormal"), ParseError);
  EXPECT_THROW(gaussian_moments(kMu, Scalar::symbol("s"), 3), SymbolMismatch);
}

}  // namespace
}  // namespace cumulants
