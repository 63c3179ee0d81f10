#include "gbbench/bench.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace gbbench;

enum Exit { kOk = 0, kVerificationFailure = 1, kUsage = 2, kAllAborted = 3 };

std::vector<SystemSpec> load_all(const std::vector<std::string>& args) {
  std::vector<SystemSpec> out;
  for (const std::string& a : args) {
    auto more = resolve_systems(a, ParseOptions{.clear_denominators = true});
    out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  }
  if (out.empty()) throw DomainError("no systems found");
  return out;
}

int cmd_run(const BenchmarkConfig& config, ReportFormat format) {
  BenchmarkReport report = run_benchmark(config);
  std::cout << render_report(report, format);

  bool any_completed = false;
  int status = kOk;
  for (const ReportRow& row : report.rows) {
    const std::vector<Polynomial>* first = nullptr;
    for (std::size_t i = 0; i < row.runs.size(); ++i) {
      const TimedRun& run = row.runs[i];
      if (run.aborted) continue;
      any_completed = true;
      if (!first) {
        first = &run.basis;
      } else if (!same_bases(*first, run.basis)) {
        std::cerr << row.name << ": reduced basis under " << report.order_labels[i]
                  << " differs from the first completed order\n";
        status = kVerificationFailure;
      }
    }
  }
  if (status != kOk) return status;
  return any_completed ? kOk : kAllAborted;
}

int cmd_verify(const BenchmarkConfig& config) {
  bool any_completed = false;
  bool all_ok = true;
  for (const SystemSpec& original : config.systems) {
    const SystemSpec s = config.reorder_variables ? reorder_system(original) : original;
    RobustnessResult r = check_robustness(s, config);
    any_completed |= r.completed > 0;
    all_ok &= r.ok();
    std::cout << (r.ok() ? "ok   " : "FAIL ") << r.name << ": completed " << r.completed << "/"
              << r.labels.size() << ", identical=" << (r.identical ? "yes" : "no")
              << ", verified=" << (r.verified ? "yes" : "no")
              << ", cache discrepancies=" << r.cache_discrepancies
              << ", basis size=" << r.basis.size() << '\n';
    for (std::size_t i = 0; i < r.labels.size(); ++i)
      if (r.aborted[i]) std::cout << "     " << r.labels[i] << ": " << kAbortedMarker << '\n';
  }
  if (!all_ok) return kVerificationFailure;
  return any_completed ? kOk : kAllAborted;
}

int cmd_microbench(const std::vector<std::size_t>& vars, std::size_t samples, std::uint64_t seed) {
  for (std::size_t n : vars) {
    MicrobenchResult r = comparator_microbench(n, samples, seed);
    std::printf("n=%zu samples=%zu subtotal=%.3f ns degrevlex=%.3f ns ratio=%.3f\n", n, samples,
                r.ns_numerator, r.ns_denominator, r.ratio);
  }
  return kOk;
}

int cmd_check_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const WeightMatrix w = parse_weight_matrix(buf.str());
  const std::size_t n = w.dim();
  const bool admissible = is_admissible(w);
  std::cout << "dimension " << n << ", rank " << rank(w) << ", admissible "
            << (admissible ? "yes" : "no") << '\n';
  if (!admissible) return kVerificationFailure;
  const std::pair<const char*, WeightMatrix> refs[] = {
      {"degrevlex", degrevlex_weight_matrix(n)}, {"subtotal", subtotal_weight_matrix(n)}};
  for (const auto& [name, ref] : refs) {
    auto cert = orders_equivalent_certificate(ref, w);
    std::cout << "equivalent to " << name << ": " << (cert ? "yes" : "no") << '\n';
    if (cert) std::cout << "  transform (W * W_" << name << "^-1):\n" << format_weight_matrix(cert->transform);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monomial order and Groebner basis benchmark"};
  app.require_subcommand(1);

  BenchmarkConfig config;
  std::vector<std::string> systems = {bundled_systems_dir().string()};
  std::string orders = "degrevlex-builtin,degrevlex-matrix,subtotal-matrix,subtotal-builtin";
  std::string format = "text";
  std::vector<std::size_t> micro_vars = {4, 8, 16};
  std::size_t micro_samples = 1'000'000;
  std::string matrix_file;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--systems", systems, "System files, directories, cyclic:<k> or katsura:<k>");
    sub->add_option("--modulus", config.modulus, "Prime modulus")->capture_default_str();
    sub->add_option("--time-limit", config.max_seconds, "Seconds per run before ABORTED")
        ->capture_default_str();
    sub->add_flag("--reorder", config.reorder_variables, "Reorder variables heuristically");
  };

  CLI::App* run = app.add_subcommand("run", "Time each system under each order");
  add_common(run);
  run->add_option("--orders", orders, "Comma-separated order labels")->capture_default_str();
  run->add_option("--min-measure", config.min_measure_seconds, "Repeat until this many seconds")
      ->capture_default_str();
  run->add_option("--seed", config.seed, "RNG seed")->capture_default_str();
  run->add_option("--format", format, "text, csv or jsonl")
      ->check(CLI::IsMember({"text", "csv", "jsonl"}))
      ->capture_default_str();

  CLI::App* verify = app.add_subcommand("verify", "Check reduced bases agree across all orders");
  add_common(verify);

  CLI::App* micro = app.add_subcommand("microbench", "Time the native comparators");
  micro->add_option("--vars", micro_vars, "Variable counts")->capture_default_str();
  micro->add_option("--samples", micro_samples, "Comparisons per timing round")->capture_default_str();
  micro->add_option("--seed", config.seed, "RNG seed")->capture_default_str();

  CLI::App* check = app.add_subcommand("check-matrix", "Admissibility and equivalence of a weight matrix");
  check->add_option("file", matrix_file, "n followed by n*n rationals")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*run) {
      config.orders = parse_roster(orders);
      config.systems = load_all(systems);
      config.validate();
      return cmd_run(config, *parse_report_format(format));
    }
    if (*verify) {
      config.systems = load_all(systems);
      config.validate();
      return cmd_verify(config);
    }
    if (*micro) return cmd_microbench(micro_vars, micro_samples, config.seed);
    if (*check) return cmd_check_matrix(matrix_file);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
