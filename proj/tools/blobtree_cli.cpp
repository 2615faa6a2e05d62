#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "blobtree/generate.hpp"
#include "blobtree/instance_io.hpp"
#include "blobtree/oracle.hpp"
#include "blobtree/svg.hpp"

namespace {

using namespace blobtree;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitDisagree = 3;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& data) {
  if (path.empty() || path == "-") {
    std::cout << data;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << data;
}

PointSet load_points(const std::string& path, std::optional<double> jitter,
                     std::uint64_t seed, std::string* name_out = nullptr) {
  RawInstance inst = parse_instance(read_input(path));
  if (name_out) *name_out = inst.name.empty() ? path : inst.name;
  auto coords = inst.coords;
  if (jitter) coords = jitter_coords(std::move(coords), *jitter, seed);
  return PointSet::validated(std::move(coords));
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

int cmd_solve(const std::string& input, const std::string& out,
              const std::string& svg_out, std::optional<double> jitter,
              std::uint64_t seed) {
  std::string name;
  const PointSet ps = load_points(input, jitter, seed, &name);
  const auto t0 = std::chrono::steady_clock::now();
  const SolveResult res = solve(ps);
  const double ms = elapsed_ms(t0);
  const auto violations = validate_solution(ps, res.solution);
  if (!violations.empty()) {
    for (const auto& v : violations) std::cerr << "violation: " << v.what << "\n";
    return kExitValidation;
  }
  const ResultRecord rec =
      make_result(name, res.solution, ms, res.edge_problems,
                  res.wall_problems, res.chord_problems);
  write_output(out, serialize_result_json(rec));
  if (!svg_out.empty()) {
    const RootedMst t = build_mst(ps);
    write_output(svg_out, render_svg(ps, res.solution, t));
  }
  return kExitOk;
}

int cmd_oracle(const std::string& which, const std::string& input,
               const std::string& out, std::optional<double> jitter,
               std::uint64_t seed) {
  std::string name;
  const PointSet ps = load_points(input, jitter, seed, &name);
  const auto t0 = std::chrono::steady_clock::now();
  const OracleResult res =
      which == "subset" ? mst_subset_oracle(ps) : partition_oracle(ps);
  const double ms = elapsed_ms(t0);
  ResultRecord rec = make_result(name, res.solution, ms, 0, 0, 0);
  std::cerr << which << " oracle examined " << res.nodes_examined
            << " candidates\n";
  write_output(out, serialize_result_json(rec));
  return kExitOk;
}

int cmd_compare(const std::vector<std::string>& inputs,
                const std::string& which, double tol,
                std::optional<double> jitter, std::uint64_t seed) {
  bool all_ok = true;
  for (const auto& path : inputs) {
    std::string name;
    const PointSet ps = load_points(path, jitter, seed, &name);
    std::string used = which;
    if (used == "auto") {
      used = ps.size() <= 10 ? "partition" : "subset";
    }
    const SolveResult dp = solve(ps);
    const OracleResult oracle =
        used == "subset" ? mst_subset_oracle(ps) : partition_oracle(ps);
    const bool ok = costs_match(dp.cost, oracle.cost, tol);
    all_ok = all_ok && ok;
    std::cout << (ok ? "AGREE    " : "DISAGREE ") << name << "  solver="
              << dp.cost << "  " << used << "=" << oracle.cost << "\n";
  }
  return all_ok ? kExitOk : kExitDisagree;
}

int cmd_generate(const std::string& kind, int n, std::uint64_t seed,
                 const std::string& format, const std::string& out) {
  const InstanceKind k = instance_kind_from_string(kind);
  const auto coords = generate_coords(k, n, seed);
  RawInstance inst;
  inst.name = kind + "-" + std::to_string(n) + "-" + std::to_string(seed);
  inst.seed = seed;
  inst.coords = coords;
  write_output(out, format == "json" ? serialize_instance_json(inst)
                                     : serialize_instance_plain(inst));
  return kExitOk;
}

int cmd_render(const std::string& input, const std::string& out,
               std::optional<double> jitter, std::uint64_t seed) {
  const PointSet ps = load_points(input, jitter, seed);
  const SolveResult res = solve(ps);
  const RootedMst t = build_mst(ps);
  write_output(out, render_svg(ps, res.solution, t));
  return kExitOk;
}

int cmd_bench(const std::vector<int>& sizes, std::uint64_t seed, int reps) {
  std::vector<double> medians;
  for (int n : sizes) {
    std::vector<double> times;
    for (int r = 0; r < reps; ++r) {
      const PointSet ps = generate(InstanceKind::Uniform, n,
                                   seed + static_cast<std::uint64_t>(r));
      const auto t0 = std::chrono::steady_clock::now();
      const SolveResult res = solve(ps);
      times.push_back(elapsed_ms(t0));
      (void)res;
    }
    std::sort(times.begin(), times.end());
    const double median = times[times.size() / 2];
    medians.push_back(median);
    std::cout << "n=" << n << "  median_ms=" << median << "  (" << reps
              << " instances)\n";
  }
  for (std::size_t i = 1; i < sizes.size(); ++i) {
    std::cout << "ratio n=" << sizes[i] << " / n=" << sizes[i - 1] << ": "
              << medians[i] / medians[i - 1] << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimum-cost blob-tree solver"};
  app.require_subcommand(1);

  std::string input, out, svg_out, oracle_kind = "auto", kind = "uniform";
  std::string format = "plain";
  std::vector<std::string> inputs;
  std::optional<double> jitter;
  std::uint64_t seed = 0;
  double tol = kCostTol;
  int n = 10, reps = 5;
  std::vector<int> sizes;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--seed", seed, "random seed");
    cmd->add_option("--jitter", jitter,
                    "perturb inputs by +-eps (0 = 1e-7 x bbox diagonal)");
  };

  auto* solve_cmd = app.add_subcommand("solve", "solve one instance");
  solve_cmd->add_option("input", input, "instance file or '-'")->required();
  solve_cmd->add_option("--out", out, "result JSON path (default stdout)");
  solve_cmd->add_option("--svg", svg_out, "also render the solution");
  add_common(solve_cmd);

  auto* oracle_cmd = app.add_subcommand("oracle", "run a brute-force oracle");
  oracle_cmd->add_option("which", oracle_kind, "subset | partition")
      ->required()
      ->check(CLI::IsMember({"subset", "partition"}));
  oracle_cmd->add_option("input", input, "instance file or '-'")->required();
  oracle_cmd->add_option("--out", out, "result JSON path (default stdout)");
  add_common(oracle_cmd);

  auto* cmp_cmd = app.add_subcommand("compare", "solver vs oracle");
  cmp_cmd->add_option("inputs", inputs, "instance files")->required();
  cmp_cmd->add_option("--oracle", oracle_kind, "subset | partition | auto")
      ->check(CLI::IsMember({"subset", "partition", "auto"}));
  cmp_cmd->add_option("--tolerance", tol, "relative cost tolerance");
  add_common(cmp_cmd);

  auto* gen_cmd = app.add_subcommand("generate", "emit a random instance");
  gen_cmd->add_option("--kind", kind, "uniform | cluster | circle | grid")
      ->check(CLI::IsMember({"uniform", "cluster", "circle", "grid"}));
  gen_cmd->add_option("--n", n, "number of points")->required();
  gen_cmd->add_option("--format", format, "plain | json")
      ->check(CLI::IsMember({"plain", "json"}));
  gen_cmd->add_option("--out", out, "output path (default stdout)");
  add_common(gen_cmd);

  auto* render_cmd = app.add_subcommand("render", "solve and render to SVG");
  render_cmd->add_option("input", input, "instance file or '-'")->required();
  render_cmd->add_option("--out", out, "SVG path (default stdout)");
  add_common(render_cmd);

  auto* bench_cmd = app.add_subcommand("bench", "timing across sizes");
  bench_cmd->add_option("--sizes", sizes, "instance sizes, ascending")
      ->required()
      ->delimiter(',');
  bench_cmd->add_option("--reps", reps, "instances per size (default 5)");
  add_common(bench_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(solve_cmd)) {
      return cmd_solve(input, out, svg_out, jitter, seed);
    }
    if (app.got_subcommand(oracle_cmd)) {
      return cmd_oracle(oracle_kind, input, out, jitter, seed);
    }
    if (app.got_subcommand(cmp_cmd)) {
      return cmd_compare(inputs, oracle_kind, tol, jitter, seed);
    }
    if (app.got_subcommand(gen_cmd)) {
      return cmd_generate(kind, n, seed, format, out);
    }
    if (app.got_subcommand(render_cmd)) {
      return cmd_render(input, out, jitter, seed);
    }
    if (app.got_subcommand(bench_cmd)) {
      return cmd_bench(sizes, seed, reps);
    }
  } catch (const GeneralPositionError& e) {
    std::cerr << "general-position error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
