#ifndef GBBENCH_BENCH_HPP
#define GBBENCH_BENCH_HPP

#include "gbbench/corpus.hpp"
#include "gbbench/groebner.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gbbench {

enum class MatrixFamily { degrevlex, subtotal };

/// One column of a benchmark: an order implementation plus a pair
/// selection strategy, instantiated per variable count.
///
/// Labels are "<family>-<impl>[/weight]" with family degrevlex|subtotal
/// ("grevlex" is accepted) and impl builtin|direct|matrix. "matrix" is the
/// weight-caching representation; "/weight" selects pairs by weight vector.
struct OrderSpec {
  std::string label;
  MatrixFamily family = MatrixFamily::degrevlex;
  OrderKind kind = OrderKind::native_degrevlex;
  SelectionKind selection = SelectionKind::induced_order;

  WeightMatrix matrix(std::size_t n) const;
  MonomialOrder order(std::size_t n) const;
  SelectionStrategy strategy(std::size_t n) const;
};

OrderSpec parse_order_spec(std::string_view label);
/// Comma-separated labels.
std::vector<OrderSpec> parse_roster(std::string_view labels);

/// degrevlex-builtin, degrevlex-matrix, subtotal-matrix, subtotal-builtin.
std::vector<OrderSpec> default_roster();
/// The six order implementations, each with both selection strategies.
std::vector<OrderSpec> robustness_roster();

inline constexpr std::string_view kReferenceLabel = "degrevlex-matrix";
inline constexpr std::string_view kSortLabel = "subtotal-matrix";

struct BenchmarkConfig {
  std::vector<SystemSpec> systems;
  std::vector<OrderSpec> orders = default_roster();
  double min_measure_seconds = 1.0;
  double max_seconds = 120.0;
  std::uint64_t max_repetitions = 1'000'000;
  std::uint32_t modulus = kDefaultModulus;
  std::uint64_t seed = 1;
  bool reorder_variables = false;

  void validate() const;
};

struct TimedRun {
  bool aborted = false;
  double seconds = 0.0;  // mean over the repetitions
  std::uint64_t repetitions = 0;
  EngineStats stats;              // of the last repetition
  std::vector<Polynomial> basis;  // reduced, from the last repetition
};

/// Converts, runs Buchberger and reduces the basis on a fresh ring, repeating
/// until the cumulative time exceeds min_measure_seconds. A repetition that
/// hits max_seconds makes the whole run ABORTED.
TimedRun timed_run(const SystemSpec& s, const OrderSpec& order, const BenchmarkConfig& config);

/// Applies the variable-reordering heuristic to a system.
SystemSpec reorder_system(const SystemSpec& s);

struct RatioSummary {
  std::size_t count = 0;
  double median = 0.0;
  double mean = 0.0;
  double stddev = 0.0;  // sample (n-1); 0 for a single value
  std::size_t count_below_1 = 0;
  std::size_t count_above_1 = 0;
};

/// Throws DomainError on an empty list.
RatioSummary summarize_ratios(std::span<const double> ratios);

struct ReportRow {
  std::string name;
  std::size_t nvars = 0;
  std::string degrees;
  std::vector<TimedRun> runs;  // parallel to BenchmarkReport::order_labels
};

struct BenchmarkReport {
  std::vector<std::string> order_labels;
  std::vector<ReportRow> rows;

  // Index of the ratio denominator column, if present.
  std::optional<std::size_t> reference() const;
  // Columns that get a ratio: every order except the reference.
  std::vector<std::size_t> ratio_columns() const;
  // runs[col].seconds / runs[reference].seconds, when both completed.
  std::optional<double> ratio(const ReportRow& row, std::size_t col) const;
  // Summary over the rows where the ratio exists.
  std::optional<RatioSummary> summary(std::size_t col) const;

  /// Rows by ascending subtotal-matrix ratio (or the first ratio column);
  /// rows without that ratio go last, in input order.
  void sort_rows();
};

BenchmarkReport run_benchmark(const BenchmarkConfig& config);

enum class ReportFormat { text, csv, jsonl };
std::optional<ReportFormat> parse_report_format(std::string_view s);

inline constexpr std::string_view kAbortedMarker = "ABORTED";

/// Deterministic rendering. CSV cells use %.17g so values parse back
/// exactly; summary lines in CSV start with '#'.
std::string render_report(const BenchmarkReport& r, ReportFormat format);

/// Result of the order-robustness check for one system.
struct RobustnessResult {
  std::string name;
  std::vector<std::string> labels;
  std::vector<bool> aborted;
  std::size_t completed = 0;
  bool identical = true;             // all completed reduced bases agree
  bool verified = true;              // verify_groebner on every completed run
  std::size_t cache_discrepancies = 0;
  std::vector<Polynomial> basis;     // reduced basis of the first completed run

  bool all_completed() const { return completed == labels.size(); }
  bool ok() const { return identical && verified && cache_discrepancies == 0; }
};

RobustnessResult check_robustness(const SystemSpec& s, const BenchmarkConfig& config,
                                  const std::vector<OrderSpec>& roster = robustness_roster());

enum class MicrobenchVariant { subtotal_vs_degrevlex, degrevlex_vs_degrevlex };

struct MicrobenchResult {
  double ratio = 0.0;  // numerator time / denominator time
  double ns_numerator = 0.0;
  double ns_denominator = 0.0;
};

/// Times the native comparators over the same seeded stream of exponent
/// pairs (entries in [0, 3], so degree ties are frequent). Requires n >= 1
/// and samples >= 10^4.
MicrobenchResult comparator_microbench(std::size_t n, std::size_t samples, std::uint64_t seed,
                                       MicrobenchVariant variant = MicrobenchVariant::subtotal_vs_degrevlex);

/// Published subtotal-vs-degrevlex timings, in published row order.
struct PublishedRow {
  std::string_view name;
  int nvars;
  std::string_view degrees;  // as printed
  double builtin_seconds;
  double builtin_over_matrix;    // degrevlex built-in / degrevlex matrix
  double subtotal_over_matrix;   // subtotal matrix / degrevlex matrix
};
std::span<const PublishedRow> published_table();

}  // namespace gbbench

#endif
