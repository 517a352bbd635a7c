#include "cumulants_cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cumulants/combinatorics.hpp"
#include "cumulants/error.hpp"
#include "cumulants/partitions.hpp"
#include "cumulants/set_partitions.hpp"
#include "cumulants_cli/json_codec.hpp"

namespace cumulants::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool is_numeric_column(const std::vector<std::vector<std::string>>& rows, std::size_t c) {
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (c >= rows[r].size() || rows[r][c].empty() ||
        !std::all_of(rows[r][c].begin(), rows[r][c].end(), ::isdigit)) {
      return false;
    }
  }
  return true;
}

// Columns separated by two spaces; a first column of plain integers is right-aligned.
void write_aligned(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  const bool right_align_first = is_numeric_column(rows, 0);
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c != 0) line += "  ";
      const std::size_t pad = width[c] - row[c].size();
      if (c == 0 && right_align_first) {
        line += std::string(pad, ' ') + row[c];
      } else if (c + 1 < row.size()) {
        line += row[c] + std::string(pad, ' ');
      } else {
        line += row[c];
      }
    }
    out << line << '\n';
  }
}

void write_sequence(std::ostream& out, std::span<const Scalar> values, std::string_view header,
                    Format format) {
  if (format == Format::json) {
    out << sequence_to_json(values).dump() << '\n';
    return;
  }
  std::vector<std::vector<std::string>> rows{{"i", std::string(header)}};
  for (std::size_t k = 0; k < values.size(); ++k) {
    rows.push_back({std::to_string(k + 1), values[k].to_string()});
  }
  write_aligned(out, rows);
}

std::vector<unsigned> parse_unsigned_list(const std::string& text, const char* what) {
  std::vector<unsigned> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit)) {
      throw UsageError(std::string("malformed ") + what + ": '" + text + "'");
    }
    out.push_back(static_cast<unsigned>(std::stoul(item)));
  }
  return out;
}

Format parse_format(const std::string& text) {
  if (text == "json") return Format::json;
  if (text == "text") return Format::text;
  throw UsageError("unknown format '" + text + "' (expected json or text)");
}

DistributionSpec build_distribution(const std::string& name, const std::vector<std::string>& params,
                                    const std::string& inner) {
  DistributionSpec spec{parse_distribution(name), {}, std::nullopt};
  const auto allowed = parameter_names(spec.name);
  for (const auto& p : params) {
    const auto eq = p.find('=');
    const std::string key = p.substr(0, eq);
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw UsageError("distribution " + name + " has no parameter '" + key + "'");
    }
    spec.params[key] =
        eq == std::string::npos ? Scalar::symbol(key) : Scalar(Rational::parse(p.substr(eq + 1)));
  }
  if (!inner.empty()) {
    if (spec.name != Distribution::compound_poisson) {
      throw UsageError("--inner applies to compound_poisson only");
    }
    spec.inner = MomentSequence(parse_rational_list(inner));
  }
  return spec;
}

double median(std::vector<double> samples) {
  std::sort(samples.begin(), samples.end());
  const std::size_t mid = samples.size() / 2;
  return samples.size() % 2 == 1 ? samples[mid] : (samples[mid - 1] + samples[mid]) / 2.0;
}

nlohmann::json read_json_input(const std::string& path) {
  if (path == "-") return nlohmann::json::parse(std::cin);
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open input file '" + path + "'");
  return nlohmann::json::parse(in);
}

}  // namespace

int cmd_convert(const ConvertRequest& request, std::ostream& out) {
  const Transformer transformer(ConversionWeights::standard(),
                                ExecutionOptions{.parallel = request.parallel});
  std::vector<Scalar> input;
  unsigned order = 0;
  if (request.distribution) {
    if (!request.order) throw UsageError("--order is required with --dist");
    order = *request.order;
    const MomentSequence moments = distribution_moments(*request.distribution, order);
    input = transformer.convert(SequenceKind::moments, request.from, moments.values(), order);
  } else {
    if (request.declared_kind && *request.declared_kind != request.from) {
      throw KindMismatch("input declares kind '" + std::string(to_string(*request.declared_kind)) +
                         "' but --from is '" + std::string(to_string(request.from)) + "'");
    }
    input = request.sequence;
    order = request.order.value_or(static_cast<unsigned>(input.size()));
  }
  if (order == 0) throw UsageError("order must be >= 1");
  const auto result = transformer.convert(request.from, request.to, input, order);
  write_sequence(out, result, to_string(request.to), request.format);
  return kOk;
}

int cmd_moments(const DistributionSpec& spec, unsigned order, Format format, std::ostream& out) {
  if (order == 0) throw UsageError("order must be >= 1");
  const MomentSequence m = distribution_moments(spec, order);
  write_sequence(out, m.values(), "moments", format);
  return kOk;
}

int cmd_table(const TableRequest& request, std::ostream& out) {
  const bool wigner = request.name == "wigner_catalan";
  if (!wigner && request.name != "marchenko_pastur") {
    throw UsageError("unknown table '" + request.name +
                     "' (expected wigner_catalan or marchenko_pastur)");
  }
  std::vector<unsigned> rows = request.rows;
  if (rows.empty()) {
    if (request.max_order == 0) throw UsageError("--max-order must be >= 1");
    for (unsigned i = 1; i <= request.max_order; ++i) rows.push_back(i);
  }
  if (std::find(rows.begin(), rows.end(), 0U) != rows.end()) throw UsageError("row index must be >= 1");
  const unsigned top = *std::max_element(rows.begin(), rows.end());

  // Both columns come from the free-cumulant transform: the semicircle law has
  // r = (0, 1, 0, ...), the Marchenko-Pastur law r_k = lambda.
  std::vector<Scalar> cumulants(top, Scalar(0));
  if (wigner) {
    if (top >= 2) cumulants[1] = 1;
  } else {
    std::fill(cumulants.begin(), cumulants.end(), Scalar::symbol(request.symbol));
  }
  const MomentSequence moments =
      moments_from_free_cumulants(CumulantSequence(CumulantKind::free, std::move(cumulants)));

  if (request.format == Format::json) {
    nlohmann::json table_rows = nlohmann::json::array();
    for (unsigned i : rows) {
      nlohmann::json row{{"i", i}, {"value", scalar_to_json(moments.at(i))}};
      if (wigner) row["catalan"] = catalan(i).get_str();
      table_rows.push_back(std::move(row));
    }
    out << nlohmann::json{{"rows", std::move(table_rows)}}.dump() << '\n';
    return kOk;
  }
  std::vector<std::vector<std::string>> text;
  if (wigner) {
    text.push_back({"i", "wigner", "catalan"});
    for (unsigned i : rows) text.push_back({std::to_string(i), moments.at(i).to_string(), catalan(i).get_str()});
  } else {
    text.push_back({"i", "marchenko_pastur"});
    for (unsigned i : rows) text.push_back({std::to_string(i), moments.at(i).to_string()});
  }
  write_aligned(out, text);
  return kOk;
}

std::vector<BenchRow> run_bench(const BenchRequest& request) {
  if (request.orders.empty()) throw UsageError("bench needs at least one order");
  if (request.repetitions == 0) throw UsageError("--reps must be >= 1");
  const unsigned top = *std::max_element(request.orders.begin(), request.orders.end());
  if (top == 0) throw UsageError("bench orders must be >= 1");

  std::vector<Scalar> input;
  if (request.symbolic) {
    const auto m = marchenko_pastur_moments(Scalar::symbol("lambda"), top);
    input.assign(m.values().begin(), m.values().end());
  } else {
    for (unsigned k = 1; k <= top; ++k) input.emplace_back(Rational(BigInt(1), BigInt(k)));
  }

  const WeightSpec w = weights::free_from_moments();
  const ExecutionOptions exec{.parallel = request.parallel};
  std::vector<BenchRow> rows;
  for (unsigned order : request.orders) {
    std::vector<double> samples;
    for (unsigned rep = 0; rep < request.repetitions; ++rep) {
      const auto start = std::chrono::steady_clock::now();
      partition_transform(order, w, input, exec);
      const auto stop = std::chrono::steady_clock::now();
      samples.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
    }
    rows.push_back({order, enumerate_partitions(order).size(), median(std::move(samples))});
  }
  return rows;
}

int cmd_bench(const BenchRequest& request, std::ostream& out) {
  const auto rows = run_bench(request);
  if (request.format == Format::json) {
    nlohmann::json json_rows = nlohmann::json::array();
    for (const auto& r : rows) {
      json_rows.push_back({{"order", r.order}, {"terms", r.terms}, {"median_ms", r.median_ms}});
    }
    out << nlohmann::json{{"input", request.symbolic ? "symbolic" : "rational"},
                          {"rows", std::move(json_rows)}}
               .dump()
        << '\n';
    return kOk;
  }
  std::vector<std::vector<std::string>> text{{"order", "terms", "median_ms"}};
  for (const auto& r : rows) {
    std::ostringstream ms;
    ms.precision(4);
    ms << std::fixed << r.median_ms;
    text.push_back({std::to_string(r.order), std::to_string(r.terms), ms.str()});
  }
  write_aligned(out, text);
  return kOk;
}

int cmd_selftest(const SelftestOptions& options, std::ostream& out, std::ostream& err) {
  if (options.max_order == 0 || options.max_order > oracle::kMaxEnumeration) {
    throw UsageError("--max-order must be in [1, " + std::to_string(oracle::kMaxEnumeration) + "]");
  }
  const SelftestReport report = run_selftest(options);
  std::vector<std::vector<std::string>> text{{"suite", "cases", "failures"}};
  unsigned cases = 0;
  for (const auto& s : report.suites) {
    text.push_back({s.name, std::to_string(s.cases), std::to_string(s.failures)});
    cases += s.cases;
  }
  write_aligned(out, text);
  if (const SuiteResult* failed = report.first_failure()) {
    err << "suite " << failed->name << " FAILED: " << failed->first_counterexample << '\n';
    return kSelftestFailure;
  }
  out << "all suites passed (" << report.suites.size() << " suites, " << cases << " cases)\n";
  return kOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact moment / cumulant conversions (classical, boolean, free)", "cumulants"};
  app.require_subcommand(1);

  std::string format_text = "text";

  // convert
  auto* convert = app.add_subcommand("convert", "Convert a sequence between moments and cumulants");
  std::string from_text, to_text, seq_text, input_path, dist_name, inner_text;
  std::vector<std::string> params;
  unsigned order = 0;
  bool parallel = false;
  convert->add_option("--from", from_text, "moments|classical|boolean|free")->required();
  convert->add_option("--to", to_text, "moments|classical|boolean|free")->required();
  convert->add_option("--seq", seq_text, "Comma-separated rationals");
  convert->add_option("--input", input_path, "JSON file with the input sequence ('-' for stdin)");
  convert->add_option("--dist", dist_name, "Distribution supplying the input");
  convert->add_option("--param", params, "NAME or NAME=VALUE (repeatable)")->allow_extra_args(false);
  convert->add_option("--inner", inner_text, "Inner moments for compound_poisson");
  convert->add_option("--order", order, "Number of terms");
  convert->add_option("--format", format_text, "json|text");
  convert->add_flag("--parallel", parallel, "Parallel partition reduction");

  // moments
  auto* moments = app.add_subcommand("moments", "Moments of a built-in distribution");
  moments->add_option("--dist", dist_name, "Distribution name")->required();
  moments->add_option("--param", params, "NAME or NAME=VALUE (repeatable)")->allow_extra_args(false);
  moments->add_option("--inner", inner_text, "Inner moments for compound_poisson");
  moments->add_option("--order", order, "Number of moments")->required();
  moments->add_option("--format", format_text, "json|text");

  // table
  auto* table = app.add_subcommand("table", "Moment tables of the semicircle and free Poisson laws");
  TableRequest table_request;
  std::string rows_text;
  table->add_option("name", table_request.name, "wigner_catalan|marchenko_pastur")->required();
  table->add_option("--max-order", table_request.max_order, "Rows 1..N (default 8)");
  table->add_option("--rows", rows_text, "Explicit comma-separated row indices");
  table->add_option("--symbol", table_request.symbol, "Indeterminate name (marchenko_pastur)");
  table->add_option("--format", format_text, "json|text");

  // bench
  auto* bench = app.add_subcommand("bench", "Time free cumulants from moments");
  BenchRequest bench_request;
  std::string orders_text = "15,18,21,24,27";
  std::string input_kind = "rational";
  std::string bench_format = "json";
  bench->add_option("--orders", orders_text, "Comma-separated orders");
  bench->add_option("--reps", bench_request.repetitions, "Repetitions per order (median reported)");
  bench->add_option("--input", input_kind, "rational (m_k = 1/k) | symbolic (Marchenko-Pastur)");
  bench->add_flag("--parallel", bench_request.parallel, "Parallel partition reduction");
  bench->add_option("--format", bench_format, "json|text");

  // selftest
  auto* selftest = app.add_subcommand("selftest", "Check transforms against brute-force oracles");
  SelftestOptions selftest_options;
  selftest->add_option("--max-order", selftest_options.max_order, "Largest order checked (<= 10)");
  selftest->add_option("--samples", selftest_options.samples, "Random sequences per suite");
  selftest->add_option("--seed", selftest_options.seed, "RNG seed");

  std::vector<std::string> argv_storage{"cumulants"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out, err);
      return code == 0 ? kOk : kUsageError;
    }

    if (*convert) {
      ConvertRequest request;
      request.from = parse_sequence_kind(from_text);
      request.to = parse_sequence_kind(to_text);
      request.format = parse_format(format_text);
      request.parallel = parallel;
      if (convert->count("--order") != 0) request.order = order;
      const int sources = (convert->count("--seq") != 0) + (convert->count("--input") != 0) +
                          (convert->count("--dist") != 0);
      if (sources != 1) throw UsageError("convert needs exactly one of --seq, --input, --dist");
      if (!params.empty() && dist_name.empty()) throw UsageError("--param requires --dist");
      if (!dist_name.empty()) {
        request.distribution = build_distribution(dist_name, params, inner_text);
      } else if (!input_path.empty()) {
        JsonSequence parsed = sequence_from_json(read_json_input(input_path));
        request.sequence = std::move(parsed.values);
        request.declared_kind = parsed.kind;
      } else {
        request.sequence = parse_rational_list(seq_text);
      }
      return cmd_convert(request, out);
    }
    if (*moments) {
      return cmd_moments(build_distribution(dist_name, params, inner_text), order,
                         parse_format(format_text), out);
    }
    if (*table) {
      table_request.format = parse_format(format_text);
      if (!rows_text.empty()) table_request.rows = parse_unsigned_list(rows_text, "--rows");
      return cmd_table(table_request, out);
    }
    if (*bench) {
      bench_request.orders = orders_text.empty() ? std::vector<unsigned>{}
                                                 : parse_unsigned_list(orders_text, "--orders");
      if (input_kind != "rational" && input_kind != "symbolic") {
        throw UsageError("--input must be rational or symbolic");
      }
      bench_request.symbolic = input_kind == "symbolic";
      bench_request.format = parse_format(bench_format);
      return cmd_bench(bench_request, out);
    }
    if (*selftest) return cmd_selftest(selftest_options, out, err);
    return kUsageError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const cumulants::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed JSON: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    // Kind mismatch, short sequences, symbol clashes and domain errors.
    err << "error: " << e.what() << '\n';
    return kSemanticError;
  }
}

}  // namespace cumulants::cli
