#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "moead/experiment.hpp"
#include "moead/geometry.hpp"

namespace {

using moead::cli::json;

std::string read_text(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot read config " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

struct RunFlags {
  std::string config;
  std::vector<std::string> problems, strategies, decompositions;
  std::string output, baseline;
  std::uint64_t seed = 0;
  std::size_t replicates = 0, parallelism = 0, record_interval = 0, max_fe = 0;
  bool quiet = false;
};

int cmd_run(const RunFlags& fl) {
  std::string text;
  json j = json::object();
  if (!fl.config.empty()) {
    text = read_text(fl.config);
    try {
      j = json::parse(text);
    } catch (const json::parse_error&) {
      moead::cli::parse_config(text);  // rethrows with line context
    }
  }
  if (!fl.problems.empty()) {
    j.erase("preset");
    j["problem_id"] = fl.problems;
  }
  if (!fl.strategies.empty()) j["strategies"] = fl.strategies;
  if (!fl.decompositions.empty()) j["decompositions"] = fl.decompositions;
  if (!fl.output.empty()) j["output_dir"] = fl.output;
  if (!fl.baseline.empty()) j["baseline"] = fl.baseline;
  if (fl.seed != 0) j["base_seed"] = fl.seed;
  if (fl.replicates != 0) j["replicates"] = fl.replicates;
  if (fl.parallelism != 0) j["parallelism"] = fl.parallelism;
  if (fl.record_interval != 0) j["record_interval"] = fl.record_interval;
  if (fl.max_fe != 0) j["overrides"]["max_fe"] = fl.max_fe;

  const moead::cli::ExperimentSpec spec = moead::cli::parse_config_json(j, text);
  auto log = [&](const std::string& msg) {
    if (!fl.quiet) std::cerr << msg << "\n";
  };
  const moead::cli::ExperimentReport report = moead::cli::run_experiment(spec, log);
  std::cout << report.summary;
  for (const auto& cell : report.cells) {
    if (cell.outcome.failed()) {
      std::cerr << "cell " << moead::cli::cell_label(cell.outcome.config) << " failed: " << cell.outcome.error << "\n";
    }
  }
  return report.failed_cells == 0 ? 0 : 1;
}

struct TheoremFlags {
  std::size_t samples = 10000;
  std::uint64_t seed = 1;
  bool mirrored = false;
  moead::geometry::SweepRanges ranges;
  std::vector<int> ids{1, 2, 3, 4, 5, 6};
};

int cmd_theorems(const TheoremFlags& fl) {
  std::printf("theorem,draws,hypothesis_pass,ties,violations,violation_rate,stated_only_pass,stated_only_violations\n");
  std::size_t total_violations = 0;
  for (int id : fl.ids) {
    moead::Rng rng(moead::mix64(fl.seed + static_cast<std::uint64_t>(id)));
    const auto r = moead::geometry::theorem_sweep(id, fl.samples, rng, fl.ranges, fl.mirrored);
    std::printf("%d,%zu,%zu,%zu,%zu,%.6g,%zu,%zu\n", id, r.draws, r.hypothesis_pass, r.ties, r.violations,
                r.violation_rate, r.stated_only_pass, r.stated_only_violations);
    total_violations += r.violations;
  }
  return total_violations == 0 ? 0 : 2;
}

int cmd_pf(const std::string& problem, std::size_t M, std::size_t points, const std::string& output) {
  const auto id = moead::problem_from_string(problem);
  if (!id) throw std::invalid_argument("unknown problem '" + problem + "'");
  const moead::ProblemSpec spec = moead::make_problem(*id, M);
  const auto pf = moead::pf_sample(spec, points);
  std::ostringstream out;
  for (std::size_t i = 1; i <= spec.M; ++i) out << (i > 1 ? ",f" : "f") << i;
  out << "\n";
  char buf[40];
  for (const auto& p : pf) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.17g", p[i]);
      out << (i ? "," : "") << buf;
    }
    out << "\n";
  }
  if (output.empty() || output == "-") {
    std::cout << out.str();
  } else {
    std::ofstream f(output, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + output);
    f << out.str();
  }
  return 0;
}

int cmd_compare(const std::string& dir, const std::string& baseline, double alpha, const std::string& output) {
  auto [base, recorded_alpha] = moead::cli::load_baseline(dir);
  if (!baseline.empty()) {
    const auto s = moead::strategy_from_string(baseline);
    if (!s) throw std::invalid_argument("unknown baseline strategy '" + baseline + "'");
    base = *s;
  }
  const auto outcomes = moead::cli::load_outcomes(dir);
  const std::string summary = moead::cli::summary_table(outcomes, base, alpha > 0.0 ? alpha : recorded_alpha);
  if (output.empty() || output == "-") {
    std::cout << summary;
  } else {
    std::ofstream f(output, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + output);
    f << summary;
  }
  for (const auto& c : outcomes) {
    if (c.failed()) return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decomposition-based multi-objective optimizer with pluggable reference-point strategies"};
  app.require_subcommand(1);

  RunFlags run;
  auto* run_cmd = app.add_subcommand("run", "Run a replicated experiment and write CSV results");
  run_cmd->add_option("-c,--config", run.config, "JSON experiment config");
  run_cmd->add_option("-p,--problem", run.problems, "Problem id(s), overrides the config (e.g. imop2 dtlz2)");
  run_cmd->add_option("-s,--strategy", run.strategies, "Reference-point strategies: min trueideal drp normw");
  run_cmd->add_option("-d,--decomposition", run.decompositions, "Scalarizers: ws tch mtch pbi");
  run_cmd->add_option("-o,--output", run.output, "Output directory");
  run_cmd->add_option("--seed", run.seed, "Base seed (nonzero)");
  run_cmd->add_option("-r,--replicates", run.replicates, "Replicates per cell");
  run_cmd->add_option("-j,--parallelism", run.parallelism, "Worker threads");
  run_cmd->add_option("--record-interval", run.record_interval, "Evaluations between metric snapshots");
  run_cmd->add_option("--max-fe", run.max_fe, "Evaluation budget for every cell");
  run_cmd->add_option("--baseline", run.baseline, "Strategy the significance symbols compare against");
  run_cmd->add_flag("-q,--quiet", run.quiet, "Suppress progress output");

  TheoremFlags thm;
  auto* thm_cmd = app.add_subcommand("theorems", "Sample scenarios on the quartic front and check each theorem");
  thm_cmd->add_option("-n,--samples", thm.samples, "Hypothesis-satisfying samples per theorem")->check(CLI::PositiveNumber);
  thm_cmd->add_option("--seed", thm.seed, "Seed");
  thm_cmd->add_option("--theorem", thm.ids, "Theorem ids (default all)")->check(CLI::Range(1, 6));
  thm_cmd->add_option("--f1-max", thm.ranges.f1_max, "F1 is drawn from (0, f1-max)");
  thm_cmd->add_option("--gap-max", thm.ranges.gap_max, "G1 is drawn from (F1, F1 + gap-max)");
  thm_cmd->add_option("--theta", thm.ranges.theta, "PBI penalty");
  thm_cmd->add_flag("--mirrored", thm.mirrored, "Check the mirrored geometry near (1,0)");

  std::string pf_problem, pf_output;
  std::size_t pf_points = 10000, pf_m = 0;
  auto* pf_cmd = app.add_subcommand("pf", "Export a reference-front sample as CSV");
  pf_cmd->add_option("problem", pf_problem, "Problem id")->required();
  pf_cmd->add_option("-n,--points", pf_points, "Sample size")->check(CLI::PositiveNumber);
  pf_cmd->add_option("-m,--objectives", pf_m, "Objective count (default: preset)");
  pf_cmd->add_option("-o,--output", pf_output, "Output file (default stdout)");

  std::string cmp_dir, cmp_baseline, cmp_output;
  double cmp_alpha = 0.0;
  auto* cmp_cmd = app.add_subcommand("compare", "Recompute the summary table from persisted run CSVs");
  cmp_cmd->add_option("dir", cmp_dir, "Experiment output directory")->required()->check(CLI::ExistingDirectory);
  cmp_cmd->add_option("--baseline", cmp_baseline, "Baseline strategy (default: the one recorded in spec.json)");
  cmp_cmd->add_option("--alpha", cmp_alpha, "Significance level (default: recorded)");
  cmp_cmd->add_option("-o,--output", cmp_output, "Output file (default stdout)");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*run_cmd) return cmd_run(run);
    if (*thm_cmd) return cmd_theorems(thm);
    if (*pf_cmd) return cmd_pf(pf_problem, pf_m, pf_points, pf_output);
    if (*cmp_cmd) return cmd_compare(cmp_dir, cmp_baseline, cmp_alpha, cmp_output);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 0;
}
