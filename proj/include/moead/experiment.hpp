#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "json.hpp"
#include "moead/core.hpp"
#include "moead/metrics.hpp"
#include "moead/moead.hpp"
#include "moead/problems.hpp"

namespace moead::cli {

namespace fs = std::filesystem;
using json = nlohmann::json;

/// Config error carrying the offending key and its 1-based line (0 when
/// unknown).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string key, std::size_t line, const std::string& msg)
      : std::runtime_error(format(key, line, msg)), key_(std::move(key)), line_(line) {}
  const std::string& key() const { return key_; }
  std::size_t line() const { return line_; }

 private:
  static std::string format(const std::string& key, std::size_t line, const std::string& msg) {
    std::string out = "config";
    if (line > 0) out += ":" + std::to_string(line);
    if (!key.empty()) out += ": key '" + key + "'";
    return out + ": " + msg;
  }
  std::string key_;
  std::size_t line_;
};

enum class PlotKind { PopulationScatter, MetricTrajectory, PfOverlay };

inline std::string_view to_string(PlotKind k) {
  switch (k) {
    case PlotKind::PopulationScatter: return "population_scatter";
    case PlotKind::MetricTrajectory: return "metric_trajectory";
    case PlotKind::PfOverlay: return "pf_overlay";
  }
  return "?";
}

inline PlotKind plot_kind_from_string(std::string_view s) {
  for (auto k : {PlotKind::PopulationScatter, PlotKind::MetricTrajectory, PlotKind::PfOverlay}) {
    if (to_string(k) == s) return k;
  }
  throw std::invalid_argument("unknown plot kind '" + std::string(s) + "'");
}

struct ExperimentSpec {
  std::vector<RunConfig> cells;  // one per (problem, strategy, decomposition); seeds are derived per replicate
  std::size_t replicates = 30;
  std::uint64_t base_seed = 1;
  fs::path output_dir = "results";
  std::size_t parallelism = 1;
  RefStrategy baseline = RefStrategy::NormW;
  double alpha = 0.05;
  bool write_populations = true;
  std::vector<PlotKind> plots{PlotKind::PopulationScatter, PlotKind::MetricTrajectory, PlotKind::PfOverlay};
};

inline std::string cell_label(const RunConfig& c) {
  return std::string(to_string(c.problem)) + "|" + std::string(to_string(c.strategy)) + "|" +
         std::string(to_string(c.decomposition));
}

inline std::string cell_dirname(const RunConfig& c) {
  return std::string(to_string(c.problem)) + "_" + std::string(to_string(c.strategy)) + "_" +
         std::string(to_string(c.decomposition));
}

/// Column name of an algorithm in the summary: "<strategy>+<decomposition>".
inline std::string algorithm_label(RefStrategy s, Decomposition d) {
  return std::string(to_string(s)) + "+" + std::string(to_string(d));
}

/// seed(cell, r) = base_seed + mix64(fnv1a("<problem>|<strategy>|<decomposition>|<r>")), wrapping mod 2^64.
/// Depends only on the cell's own identity, so adding cells never shifts others.
inline std::uint64_t replicate_seed(std::uint64_t base_seed, const RunConfig& cell, std::size_t r) {
  return base_seed + mix64(fnv1a(cell_label(cell) + "|" + std::to_string(r)));
}

// ---------------------------------------------------------------------------
// Config parsing
// ---------------------------------------------------------------------------

namespace detail {

inline std::size_t line_at(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

inline std::size_t line_of_key(std::string_view text, std::string_view key) {
  if (text.empty()) return 0;
  const std::string quoted = "\"" + std::string(key) + "\"";
  const std::size_t pos = text.find(quoted);
  return pos == std::string_view::npos ? 0 : line_at(text, pos);
}

struct KeyReader {
  std::string_view text;

  [[noreturn]] void fail(const std::string& key, const std::string& msg) const {
    throw ParseError(key, line_of_key(text, key), msg);
  }

  std::size_t count(const json& v, const std::string& key, std::size_t min = 0) const {
    if (!v.is_number_integer()) fail(key, "expected a non-negative integer, got " + std::string(v.type_name()));
    if (v.is_number_unsigned()) {
      const auto n = v.get<std::uint64_t>();
      if (n < min) fail(key, "must be at least " + std::to_string(min));
      return static_cast<std::size_t>(n);
    }
    const auto n = v.get<std::int64_t>();
    if (n < static_cast<std::int64_t>(min) || n < 0) fail(key, "must be at least " + std::to_string(min));
    return static_cast<std::size_t>(n);
  }

  double real(const json& v, const std::string& key) const {
    if (!v.is_number()) fail(key, "expected a number, got " + std::string(v.type_name()));
    return v.get<double>();
  }

  bool boolean(const json& v, const std::string& key) const {
    if (!v.is_boolean()) fail(key, "expected true/false, got " + std::string(v.type_name()));
    return v.get<bool>();
  }

  std::string string(const json& v, const std::string& key) const {
    if (!v.is_string()) fail(key, "expected a string, got " + std::string(v.type_name()));
    return v.get<std::string>();
  }

  /// A string or a non-empty array of strings.
  std::vector<std::string> strings(const json& v, const std::string& key) const {
    std::vector<std::string> out;
    if (v.is_string()) {
      out.push_back(v.get<std::string>());
    } else if (v.is_array()) {
      for (const json& e : v) out.push_back(string(e, key));
    } else {
      fail(key, "expected a string or an array of strings, got " + std::string(v.type_name()));
    }
    if (out.empty()) fail(key, "must not be empty");
    return out;
  }
};

inline void apply_overrides(const json& o, RunConfig& cfg, const KeyReader& rd) {
  if (!o.is_object()) rd.fail("overrides", "expected an object");
  for (const auto& [k, v] : o.items()) {
    if (k == "N") cfg.N = rd.count(v, k, 1);
    else if (k == "M") cfg.M = rd.count(v, k, 2);
    else if (k == "D") cfg.D = rd.count(v, k, 1);
    else if (k == "max_fe") cfg.max_fe = rd.count(v, k, 1);
    else if (k == "T") cfg.T = rd.count(v, k, 1);
    else if (k == "theta") cfg.theta = rd.real(v, k);
    else if (k == "crossover_prob") cfg.ops.crossover_prob = rd.real(v, k);
    else if (k == "crossover_eta") cfg.ops.crossover_eta = rd.real(v, k);
    else if (k == "mutation_prob") cfg.ops.mutation_prob = rd.real(v, k);
    else if (k == "mutation_eta") cfg.ops.mutation_eta = rd.real(v, k);
    else if (k == "imop_k") cfg.imop_k = rd.count(v, k, 1);
    else if (k == "wfg_k") cfg.wfg_k = rd.count(v, k, 1);
    else if (k == "drp_eps_ini") cfg.drp_eps_ini = rd.real(v, k);
    else if (k == "drp_eps_end") cfg.drp_eps_end = rd.real(v, k);
    else rd.fail(k, "unknown override key");
  }
}

}  // namespace detail

/// Builds a validated spec from a parsed JSON document. `text` (the source,
/// if any) is used only to attach line numbers to errors.
inline ExperimentSpec parse_config_json(const json& j, std::string_view text = {}) {
  const detail::KeyReader rd{text};
  if (!j.is_object()) throw ParseError("", 1, "top level must be a JSON object");

  static const std::vector<std::string> known = {
      "problem_id", "preset",      "strategies", "decompositions", "replicates", "base_seed",
      "output_dir", "parallelism", "baseline",   "record_interval", "alpha",     "write_populations",
      "plots",      "overrides"};
  for (const auto& [k, v] : j.items()) {
    if (std::find(known.begin(), known.end(), k) == known.end()) rd.fail(k, "unknown key");
  }

  if (j.contains("problem_id") && j.contains("preset")) rd.fail("preset", "give either 'problem_id' or 'preset'");
  const char* problem_key = j.contains("preset") ? "preset" : "problem_id";
  if (!j.contains(problem_key)) throw ParseError("problem_id", 0, "missing required key 'problem_id'");
  std::vector<ProblemId> problems;
  for (const std::string& name : rd.strings(j.at(problem_key), problem_key)) {
    const auto id = problem_from_string(name);
    if (!id) rd.fail(problem_key, "unknown problem '" + name + "'");
    problems.push_back(*id);
  }

  std::vector<RefStrategy> strategies{RefStrategy::Min, RefStrategy::TrueIdeal, RefStrategy::DRP, RefStrategy::NormW};
  if (j.contains("strategies")) {
    strategies.clear();
    for (const std::string& name : rd.strings(j.at("strategies"), "strategies")) {
      const auto s = strategy_from_string(name);
      if (!s) rd.fail("strategies", "unknown strategy '" + name + "'");
      strategies.push_back(*s);
    }
  }
  std::vector<Decomposition> decompositions{Decomposition::MTCH};
  if (j.contains("decompositions")) {
    decompositions.clear();
    for (const std::string& name : rd.strings(j.at("decompositions"), "decompositions")) {
      const auto d = decomposition_from_string(name);
      if (!d) rd.fail("decompositions", "unknown decomposition '" + name + "'");
      decompositions.push_back(*d);
    }
  }

  ExperimentSpec spec;
  if (j.contains("replicates")) spec.replicates = rd.count(j.at("replicates"), "replicates", 1);
  if (j.contains("base_seed")) {
    const json& v = j.at("base_seed");
    if (!v.is_number_unsigned()) rd.fail("base_seed", "expected a non-negative integer");
    spec.base_seed = v.get<std::uint64_t>();
  }
  if (j.contains("output_dir")) spec.output_dir = rd.string(j.at("output_dir"), "output_dir");
  if (j.contains("parallelism")) spec.parallelism = rd.count(j.at("parallelism"), "parallelism", 1);
  if (j.contains("alpha")) {
    spec.alpha = rd.real(j.at("alpha"), "alpha");
    if (!(spec.alpha > 0.0 && spec.alpha < 1.0)) rd.fail("alpha", "must lie in (0,1)");
  }
  if (j.contains("write_populations")) spec.write_populations = rd.boolean(j.at("write_populations"), "write_populations");
  if (j.contains("plots")) {
    spec.plots.clear();
    const json& v = j.at("plots");
    if (!v.is_array()) rd.fail("plots", "expected an array of plot kinds");
    for (const json& e : v) {
      try {
        spec.plots.push_back(plot_kind_from_string(rd.string(e, "plots")));
      } catch (const std::invalid_argument& ex) {
        rd.fail("plots", ex.what());
      }
    }
  }

  spec.baseline = std::find(strategies.begin(), strategies.end(), RefStrategy::NormW) != strategies.end()
                      ? RefStrategy::NormW
                      : strategies.front();
  if (j.contains("baseline")) {
    const std::string name = rd.string(j.at("baseline"), "baseline");
    const auto s = strategy_from_string(name);
    if (!s) rd.fail("baseline", "unknown strategy '" + name + "'");
    if (std::find(strategies.begin(), strategies.end(), *s) == strategies.end()) {
      rd.fail("baseline", "strategy '" + name + "' is not part of the experiment");
    }
    spec.baseline = *s;
  }

  std::optional<std::size_t> record_interval;
  if (j.contains("record_interval")) record_interval = rd.count(j.at("record_interval"), "record_interval", 1);

  for (ProblemId id : problems) {
    const Preset p = preset_for(id);
    for (Decomposition d : decompositions) {
      for (RefStrategy s : strategies) {
        RunConfig cfg;
        cfg.problem = id;
        cfg.N = p.N;
        cfg.M = p.M;
        cfg.D = p.D;
        cfg.max_fe = p.max_fe;
        cfg.decomposition = d;
        cfg.strategy = s;
        if (record_interval) cfg.record_interval = *record_interval;
        if (j.contains("overrides")) detail::apply_overrides(j.at("overrides"), cfg, rd);
        try {
          cfg = resolve(cfg);
        } catch (const std::invalid_argument& ex) {
          rd.fail(j.contains("overrides") ? "overrides" : problem_key, cell_label(cfg) + ": " + ex.what());
        }
        spec.cells.push_back(cfg);
      }
    }
  }
  return spec;
}

inline ExperimentSpec parse_config(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& ex) {
    throw ParseError("", detail::line_at(text, ex.byte == 0 ? 0 : ex.byte - 1), ex.what());
  }
  return parse_config_json(j, text);
}

// ---------------------------------------------------------------------------
// Results and summaries
// ---------------------------------------------------------------------------

/// Final indicators of every replicate of one cell.
struct CellOutcome {
  RunConfig config;            // seed unused
  std::vector<double> hv;      // final HV per replicate, replicate order
  std::vector<double> igd;     // final IGD per replicate
  std::string error;           // non-empty when the cell was aborted
  bool failed() const { return !error.empty(); }
};

struct CellResult {
  CellOutcome outcome;
  std::vector<RunResult> runs;  // replicate order; empty when failed
};

/// Replicate index of the median final HV; the lower median for an even
/// count, ties resolved by replicate index.
inline std::size_t median_replicate(std::span<const double> final_hv) {
  if (final_hv.empty()) throw std::invalid_argument("median_replicate: no replicates");
  std::vector<std::size_t> order(final_hv.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return final_hv[a] < final_hv[b]; });
  return order[(order.size() - 1) / 2];
}

namespace detail {

inline std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string sci(double v, int digits) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*e", digits, v);
  return buf;
}

inline std::string csv_safe(std::string s) {
  for (char& c : s) {
    if (c == ',' || c == '\n' || c == '\r' || c == '"') c = ' ';
  }
  return s;
}

/// "n/a" stands for a comparison that needs at least 5 replicates per group.
inline std::string verdict_symbol(std::span<const double> a, std::span<const double> base, Preference pref,
                                  double alpha) {
  if (a.size() < 5 || base.size() < 5) return "n/a";
  return symbol(rank_sum_compare(a, base, pref, alpha));
}

}  // namespace detail

/// Table layout: one row per (problem, metric), one column per algorithm,
/// each entry "mean (std) symbol". The symbol compares the column against
/// the baseline strategy under the same decomposition ('+' better, '-'
/// worse, '≈' no significant difference); the baseline column carries none.
/// A final row per metric counts +/-/≈ for each algorithm.
inline std::string summary_table(const std::vector<CellOutcome>& cells, RefStrategy baseline, double alpha = 0.05) {
  std::vector<ProblemId> problems;
  std::vector<std::pair<RefStrategy, Decomposition>> algorithms;
  for (const CellOutcome& c : cells) {
    if (std::find(problems.begin(), problems.end(), c.config.problem) == problems.end()) {
      problems.push_back(c.config.problem);
    }
    const std::pair alg{c.config.strategy, c.config.decomposition};
    if (std::find(algorithms.begin(), algorithms.end(), alg) == algorithms.end()) algorithms.push_back(alg);
  }
  auto find = [&](ProblemId p, RefStrategy s, Decomposition d) -> const CellOutcome* {
    for (const CellOutcome& c : cells) {
      if (c.config.problem == p && c.config.strategy == s && c.config.decomposition == d) return &c;
    }
    return nullptr;
  };

  std::ostringstream out;
  out << "problem,M,D,metric";
  for (const auto& [s, d] : algorithms) out << "," << algorithm_label(s, d);
  out << "\n";

  struct Tally {
    int better = 0, worse = 0, similar = 0;
  };
  std::vector<Tally> hv_tally(algorithms.size()), igd_tally(algorithms.size());

  for (ProblemId p : problems) {
    for (int metric = 0; metric < 2; ++metric) {
      const bool is_hv = metric == 0;
      std::string header;
      for (const auto& [s, d] : algorithms) {
        if (const CellOutcome* c = find(p, s, d)) {
          header = std::string(to_string(p)) + "," + std::to_string(c->config.M) + "," + std::to_string(c->config.D);
          break;
        }
      }
      out << header << "," << (is_hv ? "HV" : "IGD");
      for (std::size_t a = 0; a < algorithms.size(); ++a) {
        const auto [s, d] = algorithms[a];
        const CellOutcome* c = find(p, s, d);
        out << ",";
        if (c == nullptr) continue;
        if (c->failed() || c->hv.empty()) {
          out << "FAILED";
          continue;
        }
        const std::vector<double>& v = is_hv ? c->hv : c->igd;
        out << detail::sci(mean_of(v), 4) << " (" << detail::sci(stddev_of(v), 2) << ")";
        if (s == baseline) continue;
        const CellOutcome* base = find(p, baseline, d);
        if (base == nullptr || base->failed() || base->hv.empty()) continue;
        const std::string sym = detail::verdict_symbol(v, is_hv ? base->hv : base->igd,
                                                       is_hv ? Preference::LargerIsBetter : Preference::SmallerIsBetter,
                                                       alpha);
        out << " " << sym;
        Tally& t = (is_hv ? hv_tally : igd_tally)[a];
        if (sym == "+") ++t.better;
        else if (sym == "-") ++t.worse;
        else if (sym == "≈") ++t.similar;
      }
      out << "\n";
    }
  }
  for (int metric = 0; metric < 2; ++metric) {
    out << "+/-/≈,,," << (metric == 0 ? "HV" : "IGD");
    for (std::size_t a = 0; a < algorithms.size(); ++a) {
      out << ",";
      if (algorithms[a].first == baseline) continue;
      const Tally& t = (metric == 0 ? hv_tally : igd_tally)[a];
      out << t.better << "/" << t.worse << "/" << t.similar;
    }
    out << "\n";
  }
  return out.str();
}

/// Long form: one row per cell with raw statistics.
inline std::string cells_table(const std::vector<CellOutcome>& cells) {
  std::ostringstream out;
  out << "problem,strategy,decomposition,replicates,hv_mean,hv_std,hv_median,igd_mean,igd_std,igd_median,status\n";
  auto median = [](std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
  };
  for (const CellOutcome& c : cells) {
    out << to_string(c.config.problem) << "," << to_string(c.config.strategy) << ","
        << to_string(c.config.decomposition) << "," << c.hv.size() << ",";
    if (c.failed() || c.hv.empty()) {
      out << ",,,,,,failed: " << detail::csv_safe(c.error) << "\n";
      continue;
    }
    out << detail::g17(mean_of(c.hv)) << "," << detail::g17(stddev_of(c.hv)) << "," << detail::g17(median(c.hv))
        << "," << detail::g17(mean_of(c.igd)) << "," << detail::g17(stddev_of(c.igd)) << ","
        << detail::g17(median(c.igd)) << ",ok\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Files
// ---------------------------------------------------------------------------

namespace detail {

inline void write_file(const fs::path& path, const std::string& content) {
  fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << content;
  if (!f) throw std::runtime_error("write failed for " + path.string());
}

inline std::string read_file(const fs::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

inline std::vector<std::string> split(const std::string& line, char sep = ',') {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

inline std::string objective_header(std::size_t M) {
  std::string h;
  for (std::size_t i = 1; i <= M; ++i) h += (i > 1 ? ",f" : "f") + std::to_string(i);
  return h;
}

}  // namespace detail

inline std::string history_csv(const RunResult& r) {
  std::string out = "fe,hv,igd\n";
  for (const Snapshot& s : r.history) {
    out += std::to_string(s.fe) + "," + detail::g17(s.hv) + "," + detail::g17(s.igd) + "\n";
  }
  return out;
}

inline std::string population_csv(const RunResult& r) {
  const std::size_t M = r.config.M, D = r.config.D;
  std::string out = detail::objective_header(M);
  for (std::size_t d = 1; d <= D; ++d) out += ",x" + std::to_string(d);
  out += "\n";
  for (const Solution& s : r.final_population) {
    for (std::size_t i = 0; i < M; ++i) out += (i ? "," : "") + detail::g17(s.f[i]);
    for (double x : s.x) out += "," + detail::g17(x);
    out += "\n";
  }
  return out;
}

inline fs::path history_path(const fs::path& dir, const RunConfig& cell, std::size_t r) {
  return dir / "runs" / cell_dirname(cell) / ("rep_" + std::to_string(r) + "_history.csv");
}

inline fs::path population_path(const fs::path& dir, const RunConfig& cell, std::size_t r) {
  return dir / "runs" / cell_dirname(cell) / ("rep_" + std::to_string(r) + "_population.csv");
}

/// Writes one plot-data CSV for a cell and returns its path. The median-HV
/// replicate supplies population and trajectory data.
inline fs::path emit_plot_data(const CellResult& cell, PlotKind kind, const MetricContext& ctx, const fs::path& dir) {
  const RunConfig& cfg = cell.outcome.config;
  if (cell.runs.empty()) throw std::invalid_argument("emit_plot_data: cell has no results");
  const std::size_t M = cfg.M;
  std::string out;
  fs::path path;
  switch (kind) {
    case PlotKind::PfOverlay: {
      path = dir / "plots" / (std::string(to_string(cfg.problem)) + "_pf_overlay.csv");
      out = detail::objective_header(M) + "\n";
      for (const Vec& p : ctx.pf_reference) {
        for (std::size_t i = 0; i < M; ++i) out += (i ? "," : "") + detail::g17(p[i]);
        out += "\n";
      }
      break;
    }
    case PlotKind::PopulationScatter: {
      const RunResult& run = cell.runs[median_replicate(cell.outcome.hv)];
      path = dir / "plots" / (cell_dirname(cfg) + "_population_scatter.csv");
      out = "source," + detail::objective_header(M) + "\n";
      for (const Solution& s : run.final_population) {
        out += "population";
        for (double v : s.f) out += "," + detail::g17(v);
        out += "\n";
      }
      for (const Vec& p : ctx.pf_reference) {
        out += "pf";
        for (double v : p) out += "," + detail::g17(v);
        out += "\n";
      }
      break;
    }
    case PlotKind::MetricTrajectory: {
      const RunResult& run = cell.runs[median_replicate(cell.outcome.hv)];
      path = dir / "plots" / (cell_dirname(cfg) + "_metric_trajectory.csv");
      out = history_csv(run);
      break;
    }
  }
  detail::write_file(path, out);
  return path;
}

inline std::string spec_json(const ExperimentSpec& spec) {
  json j;
  j["replicates"] = spec.replicates;
  j["base_seed"] = spec.base_seed;
  j["baseline"] = std::string(to_string(spec.baseline));
  j["alpha"] = spec.alpha;
  json cells = json::array();
  for (const RunConfig& c : spec.cells) {
    cells.push_back({{"problem", std::string(to_string(c.problem))},
                     {"strategy", std::string(to_string(c.strategy))},
                     {"decomposition", std::string(to_string(c.decomposition))},
                     {"N", c.N},
                     {"M", c.M},
                     {"D", c.D},
                     {"T", c.T},
                     {"max_fe", c.max_fe},
                     {"theta", c.theta},
                     {"record_interval", c.record_interval}});
  }
  j["cells"] = cells;
  return j.dump(2) + "\n";
}

struct ExperimentReport {
  std::vector<CellResult> cells;
  std::string summary;  // contents of summary.csv
  std::size_t failed_cells = 0;
};

/// Runs every (cell, replicate) on a pool of `spec.parallelism` workers.
///
/// Output layout under output_dir:
///   runs/<cell>/rep_<r>_history.csv, rep_<r>_population.csv
///   runs.csv      one row per replicate, including wall time
///   cells.csv     long-form statistics per cell
///   summary.csv   table layout, no wall time
///   plots/        plot-data CSVs
///   spec.json     resolved experiment echo
/// A failing replicate aborts its cell; the other cells proceed.
inline ExperimentReport run_experiment(const ExperimentSpec& spec,
                                       const std::function<void(const std::string&)>& log = {}) {
  if (spec.replicates == 0) throw std::invalid_argument("run_experiment: replicates must be >= 1");
  if (spec.cells.empty()) throw std::invalid_argument("run_experiment: no cells");
  const fs::path& dir = spec.output_dir;
  fs::create_directories(dir);

  std::map<std::string, MetricContext> contexts;
  auto context_key = [](const RunConfig& c) {
    return std::string(to_string(c.problem)) + "|" + std::to_string(c.M) + "|" + std::to_string(c.D) + "|" +
           std::to_string(c.imop_k) + "|" + std::to_string(c.wfg_k);
  };
  std::vector<std::string> cell_errors(spec.cells.size());
  for (std::size_t c = 0; c < spec.cells.size(); ++c) {
    const RunConfig& cfg = spec.cells[c];
    const std::string key = context_key(cfg);
    if (contexts.count(key)) continue;
    try {
      contexts.emplace(key, make_metric_context(make_problem(cfg.problem, cfg.M, cfg.D, cfg.imop_k, cfg.wfg_k)));
    } catch (const std::exception& ex) {
      cell_errors[c] = std::string("metric context: ") + ex.what();
    }
  }

  const std::size_t R = spec.replicates;
  const std::size_t jobs = spec.cells.size() * R;
  std::vector<std::optional<RunResult>> results(jobs);
  std::vector<std::string> job_status(jobs, "skipped");
  std::vector<std::uint64_t> seeds(jobs);
  std::vector<std::atomic<bool>> cell_failed(spec.cells.size());
  for (std::size_t c = 0; c < spec.cells.size(); ++c) cell_failed[c] = !cell_errors[c].empty();
  std::mutex mu;
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (;;) {
      const std::size_t job = next.fetch_add(1);
      if (job >= jobs) return;
      const std::size_t c = job / R, r = job % R;
      RunConfig cfg = spec.cells[c];
      cfg.seed = replicate_seed(spec.base_seed, cfg, r);
      seeds[job] = cfg.seed;
      if (cell_failed[c]) continue;
      try {
        const MetricContext& ctx = contexts.at(context_key(cfg));
        RunResult run = moead_run(cfg, &ctx);
        detail::write_file(history_path(dir, cfg, r), history_csv(run));
        if (spec.write_populations) detail::write_file(population_path(dir, cfg, r), population_csv(run));
        results[job] = std::move(run);
        job_status[job] = "ok";
        if (log) {
          std::lock_guard lock(mu);
          log(cell_label(cfg) + " replicate " + std::to_string(r) + " done");
        }
      } catch (const std::exception& ex) {
        std::lock_guard lock(mu);
        cell_failed[c] = true;
        job_status[job] = std::string("failed: ") + detail::csv_safe(ex.what());
        if (cell_errors[c].empty()) cell_errors[c] = "replicate " + std::to_string(r) + ": " + ex.what();
        if (log) log(cell_label(cfg) + " FAILED: " + cell_errors[c]);
      }
    }
  };
  const std::size_t workers = std::max<std::size_t>(1, std::min(spec.parallelism, jobs));
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  ExperimentReport report;
  std::vector<CellOutcome> outcomes;
  std::string runs = "problem,strategy,decomposition,replicate,seed,N,M,D,final_fe,hv,igd,wall_time,status\n";
  for (std::size_t c = 0; c < spec.cells.size(); ++c) {
    CellResult cell;
    cell.outcome.config = spec.cells[c];
    cell.outcome.error = cell_errors[c];
    for (std::size_t r = 0; r < R; ++r) {
      const std::size_t job = c * R + r;
      const RunConfig& cfg = spec.cells[c];
      runs += std::string(to_string(cfg.problem)) + "," + std::string(to_string(cfg.strategy)) + "," +
              std::string(to_string(cfg.decomposition)) + "," + std::to_string(r) + "," + std::to_string(seeds[job]) +
              "," + std::to_string(cfg.N) + "," + std::to_string(cfg.M) + "," + std::to_string(cfg.D) + ",";
      if (results[job]) {
        const RunResult& run = *results[job];
        runs += std::to_string(run.final_fe) + "," + detail::g17(run.history.back().hv) + "," +
                detail::g17(run.history.back().igd) + "," + detail::g17(run.wall_time) + ",ok\n";
      } else {
        runs += ",,,," + job_status[job] + "\n";
      }
    }
    if (!cell.outcome.failed()) {
      for (std::size_t r = 0; r < R; ++r) {
        RunResult& run = *results[c * R + r];
        cell.outcome.hv.push_back(run.history.back().hv);
        cell.outcome.igd.push_back(run.history.back().igd);
        cell.runs.push_back(std::move(run));
      }
    } else {
      ++report.failed_cells;
    }
    outcomes.push_back(cell.outcome);
    report.cells.push_back(std::move(cell));
  }

  report.summary = summary_table(outcomes, spec.baseline, spec.alpha);
  detail::write_file(dir / "runs.csv", runs);
  detail::write_file(dir / "cells.csv", cells_table(outcomes));
  detail::write_file(dir / "summary.csv", report.summary);
  detail::write_file(dir / "spec.json", spec_json(spec));

  std::map<std::string, bool> pf_done;
  for (const CellResult& cell : report.cells) {
    if (cell.outcome.failed()) continue;
    const MetricContext& ctx = contexts.at(context_key(cell.outcome.config));
    for (PlotKind kind : spec.plots) {
      if (kind == PlotKind::PfOverlay) {
        const std::string key = context_key(cell.outcome.config);
        if (pf_done[key]) continue;
        pf_done[key] = true;
      }
      emit_plot_data(cell, kind, ctx, dir);
    }
  }
  return report;
}

/// Reloads per-replicate final indicators from an output directory: the
/// replicate index comes from runs.csv and the values from the last row of
/// each history file.
inline std::vector<CellOutcome> load_outcomes(const fs::path& dir) {
  std::istringstream runs(detail::read_file(dir / "runs.csv"));
  std::string line;
  if (!std::getline(runs, line)) throw std::runtime_error("runs.csv is empty");
  const std::vector<std::string> header = detail::split(line);
  auto col = [&](const std::string& name) {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) throw std::runtime_error("runs.csv: missing column " + name);
    return static_cast<std::size_t>(it - header.begin());
  };
  const std::size_t c_problem = col("problem"), c_strategy = col("strategy"), c_decomp = col("decomposition"),
                    c_rep = col("replicate"), c_N = col("N"), c_M = col("M"), c_D = col("D"), c_status = col("status");

  std::vector<CellOutcome> out;
  while (std::getline(runs, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> f = detail::split(line);
    if (f.size() != header.size()) throw std::runtime_error("runs.csv: malformed row: " + line);
    RunConfig cfg;
    const auto p = problem_from_string(f[c_problem]);
    const auto s = strategy_from_string(f[c_strategy]);
    const auto d = decomposition_from_string(f[c_decomp]);
    if (!p || !s || !d) throw std::runtime_error("runs.csv: unknown cell in row: " + line);
    cfg.problem = *p;
    cfg.strategy = *s;
    cfg.decomposition = *d;
    cfg.N = std::stoul(f[c_N]);
    cfg.M = std::stoul(f[c_M]);
    cfg.D = std::stoul(f[c_D]);
    if (out.empty() || cell_label(out.back().config) != cell_label(cfg)) out.push_back({cfg, {}, {}, {}});
    CellOutcome& cell = out.back();
    if (cell.failed()) continue;
    if (f[c_status] != "ok") {
      cell.error = f[c_status];
      cell.hv.clear();
      cell.igd.clear();
      continue;
    }
    std::istringstream hist(detail::read_file(history_path(dir, cfg, std::stoul(f[c_rep]))));
    std::string last, cur;
    while (std::getline(hist, cur)) {
      if (!cur.empty()) last = cur;
    }
    const std::vector<std::string> v = detail::split(last);
    if (v.size() != 3) throw std::runtime_error("malformed history for " + cell_label(cfg));
    cell.hv.push_back(std::stod(v[1]));
    cell.igd.push_back(std::stod(v[2]));
  }
  return out;
}

/// Baseline and alpha recorded in spec.json, for recomputing the summary.
inline std::pair<RefStrategy, double> load_baseline(const fs::path& dir) {
  const json j = json::parse(detail::read_file(dir / "spec.json"));
  const auto s = strategy_from_string(j.at("baseline").get<std::string>());
  if (!s) throw std::runtime_error("spec.json: unknown baseline");
  return {*s, j.at("alpha").get<double>()};
}

}  // namespace moead::cli
