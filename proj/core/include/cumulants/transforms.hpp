#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cumulants/scalar.hpp"

namespace cumulants {

enum class CumulantKind { classical, boolean, free };

/// Kinds accepted by the convert dispatcher.
enum class SequenceKind { moments, classical, boolean, free };

std::string_view to_string(CumulantKind kind);
std::string_view to_string(SequenceKind kind);
/// Throws ParseError for unknown names.
SequenceKind parse_sequence_kind(std::string_view name);

/// Moments a_1..a_n of a law; a_0 = 1 is implicit and never stored.
class MomentSequence {
 public:
  /// Throws DomainError when empty or when polynomial entries disagree on the symbol.
  explicit MomentSequence(std::vector<Scalar> values);

  [[nodiscard]] unsigned order() const { return static_cast<unsigned>(values_.size()); }
  /// a_k for 1 <= k <= order().
  [[nodiscard]] const Scalar& at(unsigned k) const;
  [[nodiscard]] std::span<const Scalar> values() const { return values_; }
  [[nodiscard]] MomentSequence truncated(unsigned order) const;

  friend bool operator==(const MomentSequence&, const MomentSequence&) = default;

 private:
  std::vector<Scalar> values_;
};

/// Classical kappa_k, boolean h_k or free r_k, k = 1..n. Free cumulants are
/// stored unscaled: the coefficients of R(t) with M(t) = R(t M(t)).
class CumulantSequence {
 public:
  CumulantSequence(CumulantKind kind, std::vector<Scalar> values);

  [[nodiscard]] CumulantKind kind() const { return kind_; }
  [[nodiscard]] unsigned order() const { return static_cast<unsigned>(values_.size()); }
  [[nodiscard]] const Scalar& at(unsigned k) const;
  [[nodiscard]] std::span<const Scalar> values() const { return values_; }

  friend bool operator==(const CumulantSequence&, const CumulantSequence&) = default;

 private:
  CumulantKind kind_;
  std::vector<Scalar> values_;
};

/// How partition_transform treats its input and output.
///   plain: g_k are used as given.
///   bar:   g_k is replaced by k! g_k on input and the result is divided by i!.
enum class Scaling { plain, bar };

/// Factorial-moment weight row: rule(i, j) = E[(delta)_j] for target order i
/// and 0 <= j < i. rule(i, 0) must be 1.
struct WeightSpec {
  std::string name;
  std::function<Scalar(unsigned target, unsigned j)> rule;
  Scaling scaling = Scaling::plain;
};

namespace weights {
/// (-1)^j j!
WeightSpec classical_from_moments();
/// 1
WeightSpec moments_from_classical();
/// (-1)^j (j+1)!, bar-scaled
WeightSpec boolean_from_moments();
/// (j+1)!, bar-scaled
WeightSpec moments_from_boolean();
/// (-i)_j, bar-scaled; depends on the target order
WeightSpec free_from_moments();
/// (i)_j, bar-scaled; depends on the target order
WeightSpec moments_from_free();
}  // namespace weights

struct ExecutionOptions {
  /// Split the partition sum across threads. Results are identical either way.
  bool parallel = false;
  /// 0 selects std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// sum over mu |- i of rule(i, nu_mu - 1) * d_mu * prod_j g_j^{r_j}, with the
/// bar scaling of `w` applied. g[k-1] holds g_k; requires g.size() >= i.
Scalar partition_transform(unsigned i, const WeightSpec& w, std::span<const Scalar> g,
                           const ExecutionOptions& exec = {});

/// The six weight rows used by the moment <-> cumulant conversions.
struct ConversionWeights {
  WeightSpec classical_from_moments;
  WeightSpec moments_from_classical;
  WeightSpec boolean_from_moments;
  WeightSpec moments_from_boolean;
  WeightSpec free_from_moments;
  WeightSpec moments_from_free;

  static ConversionWeights standard();

  [[nodiscard]] const WeightSpec& to_cumulants(CumulantKind kind) const;
  [[nodiscard]] const WeightSpec& to_moments(CumulantKind kind) const;
};

/// Runs the conversions with a fixed weight table and execution policy.
class Transformer {
 public:
  Transformer() : Transformer(ConversionWeights::standard()) {}
  explicit Transformer(ConversionWeights weights, ExecutionOptions exec = {});

  [[nodiscard]] CumulantSequence cumulants_from_moments(CumulantKind kind,
                                                        const MomentSequence& m) const;
  /// Throws KindMismatch unless c.kind() == expected.
  [[nodiscard]] MomentSequence moments_from_cumulants(CumulantKind expected,
                                                      const CumulantSequence& c) const;

  /// Converts the first `order` terms of `seq` between any two kinds. Cross
  /// cumulant conversions go through the moments.
  [[nodiscard]] std::vector<Scalar> convert(SequenceKind from, SequenceKind to,
                                            std::span<const Scalar> seq, unsigned order) const;

  [[nodiscard]] const ConversionWeights& weights() const { return weights_; }
  [[nodiscard]] const ExecutionOptions& execution() const { return exec_; }

 private:
  ConversionWeights weights_;
  ExecutionOptions exec_;
};

CumulantSequence classical_cumulants_from_moments(const MomentSequence& m);
MomentSequence moments_from_classical_cumulants(const CumulantSequence& c);
CumulantSequence boolean_cumulants_from_moments(const MomentSequence& m);
MomentSequence moments_from_boolean_cumulants(const CumulantSequence& h);
CumulantSequence free_cumulants_from_moments(const MomentSequence& m);
MomentSequence moments_from_free_cumulants(const CumulantSequence& r);

/// a_(i) = sum_k s(i, k) a_k.
std::vector<Scalar> factorial_moments_from_moments(const MomentSequence& m);
/// a_i = sum_k S(i, k) a_(k).
MomentSequence moments_from_factorial_moments(std::span<const Scalar> f);

std::vector<Scalar> convert(SequenceKind from, SequenceKind to, std::span<const Scalar> seq,
                            unsigned order);

}  // namespace cumulants
