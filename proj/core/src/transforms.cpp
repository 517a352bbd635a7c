#include "cumulants/transforms.hpp"

#include <algorithm>
#include <future>
#include <optional>
#include <thread>

#include "cumulants/combinatorics.hpp"
#include "cumulants/error.hpp"
#include "cumulants/partitions.hpp"

namespace cumulants {

namespace {

void require_single_symbol(std::span<const Scalar> values) {
  std::optional<std::string> symbol;
  for (const auto& v : values) {
    auto s = v.symbol_name();
    if (!s) continue;
    if (symbol && *symbol != *s) {
      throw SymbolMismatch("sequence mixes symbols '" + *symbol + "' and '" + *s + "'");
    }
    symbol = std::move(s);
  }
}

const Scalar& checked_at(std::span<const Scalar> values, unsigned k) {
  if (k < 1 || k > values.size()) {
    throw SequenceTooShort("index " + std::to_string(k) + " outside sequence of order " +
                           std::to_string(values.size()));
  }
  return values[k - 1];
}

// Lazily filled table of g_k^r shared by every term of one partition sum.
class PowerCache {
 public:
  explicit PowerCache(std::span<const Scalar> base) : base_(base), powers_(base.size()) {}

  const Scalar& get(unsigned k, unsigned r) {
    auto& row = powers_[k - 1];
    if (row.empty()) row.push_back(base_[k - 1]);
    while (row.size() < r) row.push_back(row.back() * base_[k - 1]);
    return row[r - 1];
  }

 private:
  std::span<const Scalar> base_;
  std::vector<std::vector<Scalar>> powers_;
};

Scalar sum_terms(std::span<const Partition> partitions, std::span<const Scalar> row,
                 std::span<const Scalar> g) {
  PowerCache cache(g);
  Scalar acc;
  for (const auto& mu : partitions) {
    const Scalar& weight = row[mu.length() - 1];
    if (weight.is_zero()) continue;
    Scalar term = weight * Scalar(partition_coefficient(mu));
    for (const auto& [part, multiplicity] : mu.parts()) {
      term *= cache.get(part, multiplicity);
      if (term.is_zero()) break;
    }
    acc += term;
  }
  return acc;
}

}  // namespace

std::string_view to_string(CumulantKind kind) {
  switch (kind) {
    case CumulantKind::classical:
      return "classical";
    case CumulantKind::boolean:
      return "boolean";
    case CumulantKind::free:
      return "free";
  }
  return "?";
}

std::string_view to_string(SequenceKind kind) {
  switch (kind) {
    case SequenceKind::moments:
      return "moments";
    case SequenceKind::classical:
      return "classical";
    case SequenceKind::boolean:
      return "boolean";
    case SequenceKind::free:
      return "free";
  }
  return "?";
}

SequenceKind parse_sequence_kind(std::string_view name) {
  for (auto kind : {SequenceKind::moments, SequenceKind::classical, SequenceKind::boolean,
                    SequenceKind::free}) {
    if (name == to_string(kind)) return kind;
  }
  throw ParseError("unknown sequence kind '" + std::string(name) + "'");
}

MomentSequence::MomentSequence(std::vector<Scalar> values) : values_(std::move(values)) {
  if (values_.empty()) throw DomainError("moment sequence must have order >= 1");
  require_single_symbol(values_);
}

const Scalar& MomentSequence::at(unsigned k) const { return checked_at(values_, k); }

MomentSequence MomentSequence::truncated(unsigned order) const {
  if (order > values_.size()) {
    throw SequenceTooShort("cannot truncate order " + std::to_string(values_.size()) +
                           " sequence to order " + std::to_string(order));
  }
  return MomentSequence({values_.begin(), values_.begin() + order});
}

CumulantSequence::CumulantSequence(CumulantKind kind, std::vector<Scalar> values)
    : kind_(kind), values_(std::move(values)) {
  if (values_.empty()) throw DomainError("cumulant sequence must have order >= 1");
  require_single_symbol(values_);
}

const Scalar& CumulantSequence::at(unsigned k) const { return checked_at(values_, k); }

namespace weights {

WeightSpec classical_from_moments() {
  return {"classical_from_moments",
          [](unsigned, unsigned j) {
            BigInt w = factorial(j);
            return Scalar(j % 2 == 0 ? w : BigInt(-w));
          },
          Scaling::plain};
}

WeightSpec moments_from_classical() {
  return {"moments_from_classical", [](unsigned, unsigned) { return Scalar(1); },
          Scaling::plain};
}

WeightSpec boolean_from_moments() {
  return {"boolean_from_moments",
          [](unsigned, unsigned j) {
            BigInt w = factorial(j + 1);
            return Scalar(j % 2 == 0 ? w : BigInt(-w));
          },
          Scaling::bar};
}

WeightSpec moments_from_boolean() {
  return {"moments_from_boolean", [](unsigned, unsigned j) { return Scalar(factorial(j + 1)); },
          Scaling::bar};
}

WeightSpec free_from_moments() {
  return {"free_from_moments",
          [](unsigned i, unsigned j) {
            return Scalar(falling_factorial(-static_cast<long>(i), j));
          },
          Scaling::bar};
}

WeightSpec moments_from_free() {
  return {"moments_from_free",
          [](unsigned i, unsigned j) { return Scalar(falling_factorial(static_cast<long>(i), j)); },
          Scaling::bar};
}

}  // namespace weights

Scalar partition_transform(unsigned i, const WeightSpec& w, std::span<const Scalar> g,
                           const ExecutionOptions& exec) {
  if (i == 0) throw DomainError("partition_transform: order must be >= 1");
  if (g.size() < i) {
    throw SequenceTooShort("partition_transform: order " + std::to_string(i) +
                           " needs " + std::to_string(i) + " input terms, got " +
                           std::to_string(g.size()));
  }

  std::vector<Scalar> row;
  row.reserve(i);
  for (unsigned j = 0; j < i; ++j) row.push_back(w.rule(i, j));
  if (!(row.front() == Scalar(1))) {
    throw DomainError("weight rule '" + w.name + "' must satisfy rule(i, 0) = 1");
  }

  std::vector<Scalar> input(g.begin(), g.begin() + i);
  if (w.scaling == Scaling::bar) {
    for (unsigned k = 1; k <= i; ++k) input[k - 1] *= Scalar(factorial(k));
  }

  const std::vector<Partition> partitions = enumerate_partitions(i);

  Scalar total;
  unsigned threads = exec.threads != 0 ? exec.threads : std::thread::hardware_concurrency();
  threads = std::max(1U, std::min<unsigned>(threads, partitions.size() / 64 + 1));
  if (!exec.parallel || threads == 1) {
    total = sum_terms(partitions, row, input);
  } else {
    std::vector<std::future<Scalar>> parts;
    const std::size_t chunk = (partitions.size() + threads - 1) / threads;
    for (std::size_t begin = 0; begin < partitions.size(); begin += chunk) {
      const std::size_t count = std::min(chunk, partitions.size() - begin);
      std::span<const Partition> slice(partitions.data() + begin, count);
      parts.push_back(std::async(std::launch::async, [slice, &row, &input] {
        return sum_terms(slice, row, input);
      }));
    }
    for (auto& f : parts) total += f.get();
  }

  if (w.scaling == Scaling::bar) total = total.div_int(factorial(i));
  return total;
}

ConversionWeights ConversionWeights::standard() {
  return {weights::classical_from_moments(), weights::moments_from_classical(),
          weights::boolean_from_moments(),   weights::moments_from_boolean(),
          weights::free_from_moments(),      weights::moments_from_free()};
}

const WeightSpec& ConversionWeights::to_cumulants(CumulantKind kind) const {
  switch (kind) {
    case CumulantKind::classical:
      return classical_from_moments;
    case CumulantKind::boolean:
      return boolean_from_moments;
    case CumulantKind::free:
      return free_from_moments;
  }
  throw DomainError("unknown cumulant kind");
}

const WeightSpec& ConversionWeights::to_moments(CumulantKind kind) const {
  switch (kind) {
    case CumulantKind::classical:
      return moments_from_classical;
    case CumulantKind::boolean:
      return moments_from_boolean;
    case CumulantKind::free:
      return moments_from_free;
  }
  throw DomainError("unknown cumulant kind");
}

Transformer::Transformer(ConversionWeights weights, ExecutionOptions exec)
    : weights_(std::move(weights)), exec_(exec) {}

CumulantSequence Transformer::cumulants_from_moments(CumulantKind kind,
                                                     const MomentSequence& m) const {
  const WeightSpec& w = weights_.to_cumulants(kind);
  std::vector<Scalar> out;
  out.reserve(m.order());
  for (unsigned i = 1; i <= m.order(); ++i) out.push_back(partition_transform(i, w, m.values(), exec_));
  return CumulantSequence(kind, std::move(out));
}

MomentSequence Transformer::moments_from_cumulants(CumulantKind expected,
                                                   const CumulantSequence& c) const {
  if (c.kind() != expected) {
    throw KindMismatch("expected " + std::string(to_string(expected)) + " cumulants, got " +
                       std::string(to_string(c.kind())));
  }
  const WeightSpec& w = weights_.to_moments(expected);
  std::vector<Scalar> out;
  out.reserve(c.order());
  for (unsigned i = 1; i <= c.order(); ++i) out.push_back(partition_transform(i, w, c.values(), exec_));
  return MomentSequence(std::move(out));
}

std::vector<Scalar> Transformer::convert(SequenceKind from, SequenceKind to,
                                         std::span<const Scalar> seq, unsigned order) const {
  if (order == 0) throw DomainError("convert: order must be >= 1");
  if (order > seq.size()) {
    throw SequenceTooShort("convert: order " + std::to_string(order) + " exceeds input length " +
                           std::to_string(seq.size()));
  }
  std::vector<Scalar> input(seq.begin(), seq.begin() + order);
  if (from == to) return input;

  auto as_cumulant_kind = [](SequenceKind k) {
    switch (k) {
      case SequenceKind::classical:
        return CumulantKind::classical;
      case SequenceKind::boolean:
        return CumulantKind::boolean;
      case SequenceKind::free:
        return CumulantKind::free;
      case SequenceKind::moments:
        break;
    }
    throw DomainError("moments are not a cumulant kind");
  };

  MomentSequence moments = from == SequenceKind::moments
                               ? MomentSequence(std::move(input))
                               : moments_from_cumulants(
                                     as_cumulant_kind(from),
                                     CumulantSequence(as_cumulant_kind(from), std::move(input)));
  if (to == SequenceKind::moments) {
    auto values = moments.values();
    return {values.begin(), values.end()};
  }
  const CumulantSequence cumulants = cumulants_from_moments(as_cumulant_kind(to), moments);
  return {cumulants.values().begin(), cumulants.values().end()};
}

CumulantSequence classical_cumulants_from_moments(const MomentSequence& m) {
  return Transformer().cumulants_from_moments(CumulantKind::classical, m);
}

MomentSequence moments_from_classical_cumulants(const CumulantSequence& c) {
  return Transformer().moments_from_cumulants(CumulantKind::classical, c);
}

CumulantSequence boolean_cumulants_from_moments(const MomentSequence& m) {
  return Transformer().cumulants_from_moments(CumulantKind::boolean, m);
}

MomentSequence moments_from_boolean_cumulants(const CumulantSequence& h) {
  return Transformer().moments_from_cumulants(CumulantKind::boolean, h);
}

CumulantSequence free_cumulants_from_moments(const MomentSequence& m) {
  return Transformer().cumulants_from_moments(CumulantKind::free, m);
}

MomentSequence moments_from_free_cumulants(const CumulantSequence& r) {
  return Transformer().moments_from_cumulants(CumulantKind::free, r);
}

std::vector<Scalar> factorial_moments_from_moments(const MomentSequence& m) {
  std::vector<Scalar> out;
  out.reserve(m.order());
  for (unsigned i = 1; i <= m.order(); ++i) {
    Scalar acc;
    for (unsigned k = 1; k <= i; ++k) acc += Scalar(stirling_first(i, k)) * m.at(k);
    out.push_back(std::move(acc));
  }
  return out;
}

MomentSequence moments_from_factorial_moments(std::span<const Scalar> f) {
  if (f.empty()) throw DomainError("factorial moment sequence must have length >= 1");
  std::vector<Scalar> out;
  out.reserve(f.size());
  for (unsigned i = 1; i <= f.size(); ++i) {
    Scalar acc;
    for (unsigned k = 1; k <= i; ++k) acc += Scalar(stirling_second(i, k)) * f[k - 1];
    out.push_back(std::move(acc));
  }
  return MomentSequence(std::move(out));
}

std::vector<Scalar> convert(SequenceKind from, SequenceKind to, std::span<const Scalar> seq,
                            unsigned order) {
  return Transformer().convert(from, to, seq, order);
}

}  // namespace cumulants
