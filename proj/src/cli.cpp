#include "leafy/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "leafy/errors.hpp"
#include "leafy/generators.hpp"
#include "leafy/instance_io.hpp"
#include "leafy/reduction.hpp"
#include "leafy/verify.hpp"

namespace leafy::cli {

namespace fs = std::filesystem;

const std::vector<std::string>& algorithm_names() {
  static const std::vector<std::string> names{"maxleaves", "expansion2", "w3dm-greedy",
                                              "w3dm-exact", "exact"};
  return names;
}

SolveResult solve_with(const Digraph& d, const std::string& algorithm, Objective objective) {
  if (algorithm == "maxleaves") return max_leaves(d);
  if (algorithm == "expansion2") return expansion_baseline(d);
  if (algorithm == "w3dm-greedy") return max_leaves_w3dm(d, greedy_packer());
  if (algorithm == "w3dm-exact") return max_leaves_w3dm(d, exact_packer());
  if (algorithm == "exact") return exact_solution(d, objective);
  throw PreconditionViolated("unknown algorithm '" + algorithm + "'");
}

namespace {

struct GenOptions {
  std::string generator = "random";
  std::size_t n = 10;
  double p = 0.3;
  std::size_t k = 3;
  std::uint64_t seed = 1;
  std::string output;
};

struct SolveOptions {
  std::string input;
  std::string algorithm = "maxleaves";
  std::string objective = "count";
  std::string output;
  std::string dot;
};

struct VerifyOptions {
  std::string instance;
  std::string solution;
};

struct BenchOptions {
  std::string dir;
  std::vector<std::string> algorithms{"maxleaves", "expansion2", "exact"};
  std::string csv;
  std::size_t threads = 0;
};

std::string format_double(double value, int digits) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << value;
  return s.str();
}

int do_gen(const GenOptions& o, std::ostream& out) {
  std::ostringstream provenance;
  std::optional<Digraph> d;
  if (o.generator == "random") {
    d.emplace(gen_random_rooted_dag(o.n, o.p, o.seed));
    provenance << "random n=" << o.n << " p=" << o.p << " seed=" << o.seed;
  } else if (o.generator == "adversarial") {
    d.emplace(gen_adversarial_family(o.k));
    provenance << "adversarial k=" << o.k;
  } else {
    d.emplace(reduce_independent_set(gen_random_graph(o.n, o.p, o.seed)));
    provenance << "is-reduction n=" << o.n << " p=" << o.p << " seed=" << o.seed;
  }
  write_instance(*d, o.output, provenance.str());
  out << "wrote " << o.output << " (" << d->vertex_count() << " vertices, " << d->arc_count()
      << " arcs)\n";
  return kOk;
}

int do_solve(const SolveOptions& o, std::ostream& out, std::ostream& err) {
  Digraph d = read_instance(o.input);
  auto objective = o.objective == "weight" ? Objective::kLeafWeight : Objective::kLeafCount;
  if (objective == Objective::kLeafWeight && o.algorithm != "exact")
    err << "note: --objective only affects --algo exact\n";
  auto result = solve_with(d, o.algorithm, objective);
  write_text_file(o.output, solution_to_json(result).dump() + "\n");
  if (!o.dot.empty()) write_dot(result.tree, o.dot);
  out << o.algorithm << ": " << result.report.leaf_count << " leaves";
  if (result.report.leaf_weight) out << ", leaf weight " << *result.report.leaf_weight;
  out << ", certificate " << (result.report.certificate_ok ? "ok" : "FAILED") << "\n";
  return result.report.certificate_ok ? kOk : kValidationFailure;
}

int do_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  Digraph d = read_instance(o.instance);
  SolutionFile solution;
  try {
    solution = solution_from_json(parse_json_text(read_text_file(o.solution)));
  } catch (const ParseError& e) {
    throw ParseError(o.solution + ": " + e.what());
  }
  auto outcome = verify_solution(d, solution);
  if (outcome.ok()) {
    out << "ok: " << solution.leaf_count << " leaves verified\n";
    return kOk;
  }
  for (const auto& v : outcome.violations) err << "violation: " << v << "\n";
  return kValidationFailure;
}

struct BenchRow {
  std::string line;
  bool failed = false;
};

std::vector<BenchRow> bench_instance(const fs::path& path,
                                     const std::vector<std::string>& algorithms) {
  Digraph d = read_instance(path);
  std::optional<Weight> opt;
  if (exact_in_range(d)) opt = exact_max_leaves(d).value;

  std::vector<BenchRow> rows;
  for (const auto& algo : algorithms) {
    BenchRow row;
    std::ostringstream line;
    line << path.filename().string() << "," << algo << "," << d.vertex_count() << ",";
    if (algo == "exact" && !opt) {
      line << ",,,,,,";
      rows.push_back({line.str(), false});
      continue;
    }
    auto start = std::chrono::steady_clock::now();
    auto result = solve_with(d, algo);
    auto millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                      .count();
    const auto& r = result.report;
    auto cell = [](const std::optional<Rational>& v) { return v ? to_string(*v) : std::string(); };
    line << r.leaf_count << "," << cell(r.leaf_lower_bound) << ","
         << cell(r.expansion_upper_bound) << "," << cell(r.matching_upper_bound) << ",";
    if (opt) {
      line << *opt << ","
           << format_double(static_cast<double>(*opt) / static_cast<double>(r.leaf_count), 6);
      if (algo == "maxleaves" && 2 * *opt > 3 * static_cast<Weight>(r.leaf_count))
        row.failed = true;
    } else {
      line << ",";
    }
    line << "," << format_double(millis, 3);
    row.failed = row.failed || !r.certificate_ok;
    row.line = line.str();
    rows.push_back(std::move(row));
  }
  return rows;
}

int do_bench(const BenchOptions& o, std::ostream& out, std::ostream& err) {
  if (!fs::is_directory(o.dir)) throw IoError("'" + o.dir + "' is not a directory");
  for (const auto& a : o.algorithms)
    if (std::find(algorithm_names().begin(), algorithm_names().end(), a) ==
        algorithm_names().end())
      throw PreconditionViolated("unknown algorithm '" + a + "'");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(o.dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  std::vector<std::vector<BenchRow>> rows(files.size());
  std::vector<std::string> errors(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      try {
        rows[i] = bench_instance(files[i], o.algorithms);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  std::size_t threads = o.threads ? o.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(files.size(), 1));
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  std::ostringstream csv;
  csv << kCsvHeader << "\n";
  bool failed = false;
  for (std::size_t i = 0; i < files.size(); ++i) {
    if (!errors[i].empty()) throw ParseError(files[i].string() + ": " + errors[i]);
    for (const auto& row : rows[i]) {
      csv << row.line << "\n";
      if (row.failed) {
        failed = true;
        err << "bound violated: " << row.line << "\n";
      }
    }
  }
  write_text_file(o.csv, csv.str());
  out << "benchmarked " << files.size() << " instances x " << o.algorithms.size()
      << " algorithms into " << o.csv << "\n";
  return failed ? kValidationFailure : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maximum-leaf spanning arborescences in rooted DAGs", "leafy"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance file");
  gen_cmd->add_option("--generator", gen.generator, "Instance family")
      ->check(CLI::IsMember({"random", "adversarial", "is-reduction"}));
  gen_cmd->add_option("-n", gen.n, "Vertex count (random DAG or source graph)")
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("-p", gen.p, "Extra-arc / edge probability")->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("-k", gen.k, "Adversarial family parameter")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_option("-o,--output", gen.output, "Instance file to write")->required();

  SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance");
  solve_cmd->add_option("-i,--input", solve.input, "Instance file")->required();
  solve_cmd->add_option("--algo", solve.algorithm, "Algorithm")
      ->check(CLI::IsMember(algorithm_names()));
  solve_cmd->add_option("--objective", solve.objective, "Objective of the exact solver")
      ->check(CLI::IsMember({"count", "weight"}));
  solve_cmd->add_option("-o,--output", solve.output, "Solution file to write")->required();
  solve_cmd->add_option("--dot", solve.dot, "Also write a DOT rendering of the arborescence");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Re-check a solution against its instance");
  verify_cmd->add_option("-i,--instance", verify.instance, "Instance file")->required();
  verify_cmd->add_option("-s,--solution", verify.solution, "Solution file")->required();

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run every instance in a directory");
  bench_cmd->add_option("--dir", bench.dir, "Directory of instance .json files")->required();
  bench_cmd->add_option("--algos", bench.algorithms, "Comma-separated algorithms")
      ->delimiter(',');
  bench_cmd->add_option("--csv", bench.csv, "CSV file to write")->required();
  bench_cmd->add_option("--threads", bench.threads, "Worker threads (0 = hardware)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kUsageError;
  }

  try {
    if (*gen_cmd) return do_gen(gen, out);
    if (*solve_cmd) return do_solve(solve, out, err);
    if (*verify_cmd) return do_verify(verify, out, err);
    return do_bench(bench, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kIoError;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return kIoError;
  } catch (const TooLarge& e) {
    err << "instance too large: " << e.what() << "\n";
    return kUsageError;
  } catch (const PreconditionViolated& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kValidationFailure;
  }
}

}  // namespace leafy::cli
