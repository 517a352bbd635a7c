#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cumulants/distributions.hpp"
#include "cumulants/selftest.hpp"
#include "cumulants/transforms.hpp"

namespace cumulants::cli {

enum ExitCode : int {
  kOk = 0,
  kSelftestFailure = 1,
  kUsageError = 2,
  kSemanticError = 3,
};

enum class Format { json, text };

struct ConvertRequest {
  SequenceKind from = SequenceKind::moments;
  SequenceKind to = SequenceKind::moments;
  std::vector<Scalar> sequence;                 // used when distribution is unset
  std::optional<SequenceKind> declared_kind;    // kind stated by a JSON input file
  std::optional<DistributionSpec> distribution;
  std::optional<unsigned> order;
  Format format = Format::text;
  bool parallel = false;
};

struct TableRequest {
  std::string name;  // wigner_catalan | marchenko_pastur
  unsigned max_order = 8;
  std::vector<unsigned> rows;  // overrides 1..max_order when non-empty
  std::string symbol = "lambda";
  Format format = Format::text;
};

struct BenchRequest {
  std::vector<unsigned> orders{15, 18, 21, 24, 27};
  unsigned repetitions = 5;
  bool symbolic = false;  // Marchenko-Pastur moments in lambda instead of m_k = 1/k
  bool parallel = false;
  Format format = Format::json;
};

struct BenchRow {
  unsigned order = 0;
  unsigned long terms = 0;
  double median_ms = 0.0;
};

// Each command writes its rendering to `out` and diagnostics to `err`, and
// returns a process exit code. Library exceptions are mapped to exit codes
// by run().
int cmd_convert(const ConvertRequest& request, std::ostream& out);
int cmd_moments(const DistributionSpec& spec, unsigned order, Format format, std::ostream& out);
int cmd_table(const TableRequest& request, std::ostream& out);
int cmd_bench(const BenchRequest& request, std::ostream& out);
int cmd_selftest(const SelftestOptions& options, std::ostream& out, std::ostream& err);

/// Runs the free-cumulant benchmark without rendering.
std::vector<BenchRow> run_bench(const BenchRequest& request);

/// Full command-line entry point; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cumulants::cli
