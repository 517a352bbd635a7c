#include <gtest/gtest.h>

#include <random>
#include <thread>

#include "cumulants/combinatorics.hpp"
#include "cumulants/distributions.hpp"
#include "cumulants/error.hpp"
#include "cumulants/oracles.hpp"
#include "cumulants/transforms.hpp"
#include "test_support.hpp"

namespace cumulants {
namespace {

using testing::ints;
using testing::poly;
using testing::q;

std::vector<Scalar> vec(std::span<const Scalar> s) { return {s.begin(), s.end()}; }

std::vector<Scalar> to_cumulants(CumulantKind kind, const std::vector<Scalar>& m) {
  return vec(Transformer().cumulants_from_moments(kind, MomentSequence(m)).values());
}

std::vector<Scalar> to_moments(CumulantKind kind, const std::vector<Scalar>& c) {
  return vec(Transformer().moments_from_cumulants(kind, CumulantSequence(kind, c)).values());
}

const CumulantKind kKinds[] = {CumulantKind::classical, CumulantKind::boolean, CumulantKind::free};

TEST(PartitionTransform, OrderOneReturnsFirstTerm) {
  const auto g = ints({7, 3});
  for (const auto& w : {weights::classical_from_moments(), weights::moments_from_classical(),
                        weights::boolean_from_moments(), weights::moments_from_boolean(),
                        weights::free_from_moments(), weights::moments_from_free()}) {
    EXPECT_EQ(partition_transform(1, w, g), Scalar(7)) << w.name;
  }
}

TEST(PartitionTransform, ClassicalOrderTwo) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    const auto m = testing::random_rationals(rng, 2);
    EXPECT_EQ(partition_transform(2, weights::classical_from_moments(), m), m[1] - m[0] * m[0]);
  }
}

TEST(PartitionTransform, FreeOrderThree) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 20; ++t) {
    const auto m = testing::random_rationals(rng, 3);
    const Scalar want = m[2] - Scalar(3) * m[0] * m[1] + Scalar(2) * m[0].pow(3);
    EXPECT_EQ(partition_transform(3, weights::free_from_moments(), m), want);
  }
}

TEST(PartitionTransform, Errors) {
  const auto g = ints({1, 2});
  EXPECT_THROW(partition_transform(3, weights::moments_from_classical(), g), SequenceTooShort);
  EXPECT_THROW(partition_transform(0, weights::moments_from_classical(), g), DomainError);
  WeightSpec bad{"bad", [](unsigned, unsigned) { return Scalar(2); }, Scaling::plain};
  EXPECT_THROW(partition_transform(1, bad, g), DomainError);
}

TEST(PartitionTransform, ParallelMatchesSerial) {
  std::mt19937_64 rng(13);
  const auto m = testing::random_rationals(rng, 20);
  const ExecutionOptions parallel{.parallel = true, .threads = 4};
  for (unsigned i : {1U, 5U, 14U, 20U}) {
    EXPECT_EQ(partition_transform(i, weights::free_from_moments(), m, parallel),
              partition_transform(i, weights::free_from_moments(), m));
  }
  const auto lambda = marchenko_pastur_moments(Scalar::symbol("lambda"), 16);
  EXPECT_EQ(partition_transform(16, weights::free_from_moments(), lambda.values(), parallel),
            Scalar(poly({0, 1})));
}

TEST(PartitionTransform, ConcurrentCallersAgree) {
  std::mt19937_64 rng(14);
  const auto m = testing::random_rationals(rng, 12);
  const Scalar want = partition_transform(12, weights::classical_from_moments(), m);
  std::vector<std::thread> threads;
  std::vector<int> ok(8, 0);
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&, t] {
      ok[t] = partition_transform(12, weights::classical_from_moments(), m) == want &&
              stirling_first(12 + t, 3) == stirling_first(12 + t, 3);
    });
  }
  for (auto& th : threads) th.join();
  for (int v : ok) EXPECT_EQ(v, 1);
}

TEST(WeightRows, MatchClosedForms) {
  const auto classical = weights::classical_from_moments();
  const auto boolean = weights::boolean_from_moments();
  const auto free = weights::free_from_moments();
  for (unsigned i = 1; i <= 10; ++i) {
    for (const auto* w : {&classical, &boolean, &free}) EXPECT_EQ(w->rule(i, 0), Scalar(1));
    for (unsigned j = 0; j < i; ++j) {
      const BigInt sign = j % 2 == 0 ? 1 : -1;
      EXPECT_EQ(classical.rule(i, j), Scalar(BigInt(sign * factorial(j))));
      EXPECT_EQ(boolean.rule(i, j), Scalar(BigInt(sign * factorial(j + 1))));
      // (-i)_j = (-1)^j i (i+1) ... (i+j-1)
      BigInt rising(1);
      for (unsigned t = 0; t < j; ++t) rising *= i + t;
      EXPECT_EQ(free.rule(i, j), Scalar(BigInt(sign * rising)));
      EXPECT_EQ(weights::moments_from_free().rule(i, j), Scalar(falling_factorial(i, j)));
      EXPECT_EQ(weights::moments_from_boolean().rule(i, j), Scalar(factorial(j + 1)));
      EXPECT_EQ(weights::moments_from_classical().rule(i, j), Scalar(1));
    }
  }
  EXPECT_EQ(free.rule(3, 2), Scalar(12));
}

TEST(Classical, Examples) {
  EXPECT_EQ(to_cumulants(CumulantKind::classical, ints({5})), ints({5}));
  std::mt19937_64 rng(21);
  for (int t = 0; t < 10; ++t) {
    const auto m = testing::random_rationals(rng, 3);
    const auto k = to_cumulants(CumulantKind::classical, m);
    EXPECT_EQ(k[2], m[2] - Scalar(3) * m[0] * m[1] + Scalar(2) * m[0].pow(3));
  }
  const std::vector<Scalar> poisson{poly({0, 1}), poly({0, 1, 1}), poly({0, 1, 3, 1})};
  EXPECT_EQ(to_cumulants(CumulantKind::classical, poisson),
            (std::vector<Scalar>{poly({0, 1}), poly({0, 1}), poly({0, 1})}));
}

TEST(Classical, MomentsFromCumulants) {
  EXPECT_EQ(to_moments(CumulantKind::classical, ints({4})), ints({4}));
  EXPECT_EQ(to_moments(CumulantKind::classical, ints({0, 1, 0, 0, 0, 0})),
            ints({0, 1, 0, 3, 0, 15}));
}

TEST(Boolean, Examples) {
  EXPECT_EQ(to_cumulants(CumulantKind::boolean, ints({3})), ints({3}));
  std::mt19937_64 rng(22);
  for (int t = 0; t < 10; ++t) {
    const auto a = testing::random_rationals(rng, 3);
    const auto h = to_cumulants(CumulantKind::boolean, a);
    EXPECT_EQ(h[1], a[1] - a[0] * a[0]);
    EXPECT_EQ(h[2], a[2] - Scalar(2) * a[0] * a[1] + a[0].pow(3));
    const auto back = to_moments(CumulantKind::boolean, a);
    EXPECT_EQ(back[1], a[1] + a[0] * a[0]);
  }
}

TEST(Free, Examples) {
  EXPECT_EQ(to_cumulants(CumulantKind::free, ints({0, 1, 0, 2, 0, 5, 0, 14})),
            ints({0, 1, 0, 0, 0, 0, 0, 0}));
  std::mt19937_64 rng(23);
  for (int t = 0; t < 10; ++t) {
    const auto m = testing::random_rationals(rng, 4);
    const auto r = to_cumulants(CumulantKind::free, m);
    EXPECT_EQ(r[1], m[1] - m[0] * m[0]);
    EXPECT_EQ(r[3], m[3] - Scalar(4) * m[0] * m[2] - Scalar(2) * m[1] * m[1] +
                        Scalar(10) * m[0] * m[0] * m[1] - Scalar(5) * m[0].pow(4));
  }
}

TEST(Free, MomentsFromCumulants) {
  const std::vector<Scalar> lambda(4, poly({0, 1}));
  const auto m = to_moments(CumulantKind::free, lambda);
  EXPECT_EQ(m[1], poly({0, 1, 1}));
  EXPECT_EQ(m[2], poly({0, 1, 3, 1}));
  EXPECT_EQ(m[3], poly({0, 1, 6, 6, 1}));
  EXPECT_EQ(to_moments(CumulantKind::free, ints({0, 1, 0, 0, 0, 0})), ints({0, 1, 0, 2, 0, 5}));
}

TEST(Conversions, KindMismatch) {
  const CumulantSequence free(CumulantKind::free, ints({1, 2}));
  EXPECT_THROW(moments_from_classical_cumulants(free), KindMismatch);
  EXPECT_THROW(moments_from_boolean_cumulants(free), KindMismatch);
  EXPECT_NO_THROW(moments_from_free_cumulants(free));
  const CumulantSequence classical(CumulantKind::classical, ints({1, 2}));
  EXPECT_THROW(moments_from_free_cumulants(classical), KindMismatch);
}

TEST(Conversions, EmptyAndMixedSymbolsRejected) {
  EXPECT_THROW(MomentSequence({}), DomainError);
  EXPECT_THROW(CumulantSequence(CumulantKind::free, {}), DomainError);
  EXPECT_THROW(MomentSequence({poly({0, 1}, "p"), poly({0, 1}, "q")}), SymbolMismatch);
}

TEST(FactorialMoments, Examples) {
  EXPECT_EQ(factorial_moments_from_moments(MomentSequence(ints({1, 1, 1, 1, 1}))),
            ints({1, 0, 0, 0, 0}));
  EXPECT_EQ(factorial_moments_from_moments(MomentSequence(ints({9}))), ints({9}));
  EXPECT_EQ(factorial_moments_from_moments(MomentSequence(ints({1, 2, 5, 15, 52, 203}))),
            ints({1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(vec(moments_from_factorial_moments(ints({1, 0, 0, 0})).values()), ints({1, 1, 1, 1}));

  std::vector<Scalar> powers;
  for (unsigned k = 1; k <= 6; ++k) powers.push_back(Scalar::symbol("lambda").pow(k));
  EXPECT_EQ(moments_from_factorial_moments(powers),
            poisson_moments(Scalar::symbol("lambda"), 6));
  EXPECT_THROW(moments_from_factorial_moments({}), DomainError);
}

TEST(Convert, Dispatcher) {
  const auto seq = ints({3, 1, 4, 1});
  EXPECT_EQ(convert(SequenceKind::classical, SequenceKind::classical, seq, 4), seq);
  EXPECT_EQ(convert(SequenceKind::moments, SequenceKind::moments, seq, 2), ints({3, 1}));
  EXPECT_EQ(convert(SequenceKind::free, SequenceKind::classical, ints({0, 1, 0, 0}), 4),
            ints({0, 1, 0, -1}));
  EXPECT_EQ(convert(SequenceKind::moments, SequenceKind::boolean, seq, 4),
            vec(boolean_cumulants_from_moments(MomentSequence(seq)).values()));
  EXPECT_THROW(convert(SequenceKind::moments, SequenceKind::free, seq, 5), SequenceTooShort);
  EXPECT_THROW(convert(SequenceKind::moments, SequenceKind::free, seq, 0), DomainError);
  EXPECT_THROW(parse_sequence_kind("monotone"), ParseError);
  EXPECT_EQ(parse_sequence_kind("boolean"), SequenceKind::boolean);
}

TEST(Convert, CrossKindRoutesThroughMoments) {
  std::mt19937_64 rng(31);
  const auto b = testing::random_rationals(rng, 7);
  const auto direct = convert(SequenceKind::boolean, SequenceKind::free, b, 7);
  const auto moments = to_moments(CumulantKind::boolean, b);
  EXPECT_EQ(direct, to_cumulants(CumulantKind::free, moments));
}

// ---- properties ----------------------------------------------------------

TEST(Properties, RoundTripOrderTwelve) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 10; ++t) {
    const auto m = testing::random_rationals(rng, 12);
    for (auto kind : kKinds) EXPECT_EQ(to_moments(kind, to_cumulants(kind, m)), m);
    const auto f = factorial_moments_from_moments(MomentSequence(m));
    EXPECT_EQ(vec(moments_from_factorial_moments(f).values()), m);
  }
}

TEST(Properties, OracleEquivalence) {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 5; ++t) {
    const auto s = testing::random_rationals(rng, 8);
    const auto classical = to_cumulants(CumulantKind::classical, s);
    const auto boolean = to_cumulants(CumulantKind::boolean, s);
    const auto free_moments = to_moments(CumulantKind::free, s);
    for (unsigned i = 1; i <= 8; ++i) {
      EXPECT_EQ(classical[i - 1], oracle::classical_cumulant(s, i));
      EXPECT_EQ(boolean[i - 1], oracle::boolean_cumulant(s, i));
      EXPECT_EQ(free_moments[i - 1], oracle::free_moment(s, i));
    }
    EXPECT_EQ(classical, oracle::series_classical_cumulants(s));
    EXPECT_EQ(boolean, oracle::series_boolean_cumulants(s));
    EXPECT_EQ(to_cumulants(CumulantKind::free, s), oracle::series_free_cumulants(s));
    EXPECT_EQ(to_cumulants(CumulantKind::free, free_moments), s);
  }
}

TEST(Properties, ClassicalShiftInvariance) {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 10; ++t) {
    const auto m = testing::random_rationals(rng, 8);
    const Scalar c = testing::random_rational(rng);
    // Moments of X + c by binomial expansion, m_0 = 1.
    std::vector<Scalar> shifted;
    for (unsigned n = 1; n <= 8; ++n) {
      Scalar acc = c.pow(n);
      for (unsigned j = 1; j <= n; ++j) acc += Scalar(binomial(n, j)) * c.pow(n - j) * m[j - 1];
      shifted.push_back(acc);
    }
    const auto k0 = to_cumulants(CumulantKind::classical, m);
    const auto k1 = to_cumulants(CumulantKind::classical, shifted);
    EXPECT_EQ(k1[0], k0[0] + c);
    for (unsigned i = 2; i <= 8; ++i) EXPECT_EQ(k1[i - 1], k0[i - 1]);
  }
}

TEST(Properties, FreeAdditivity) {
  std::mt19937_64 rng(44);
  for (int t = 0; t < 10; ++t) {
    const auto r1 = testing::random_rationals(rng, 8);
    const auto r2 = testing::random_rationals(rng, 8);
    std::vector<Scalar> sum;
    for (unsigned k = 0; k < 8; ++k) sum.push_back(r1[k] + r2[k]);
    EXPECT_EQ(to_cumulants(CumulantKind::free, to_moments(CumulantKind::free, sum)), sum);
  }
}

TEST(Properties, Homogeneity) {
  std::mt19937_64 rng(45);
  for (int t = 0; t < 10; ++t) {
    const auto m = testing::random_rationals(rng, 8);
    const Scalar c = testing::random_rational(rng);
    std::vector<Scalar> scaled;
    for (unsigned k = 1; k <= 8; ++k) scaled.push_back(c.pow(k) * m[k - 1]);
    for (auto kind : kKinds) {
      const auto base = to_cumulants(kind, m);
      const auto got = to_cumulants(kind, scaled);
      for (unsigned k = 1; k <= 8; ++k) EXPECT_EQ(got[k - 1], c.pow(k) * base[k - 1]);
    }
  }
}

}  // namespace
}  // namespace cumulants
