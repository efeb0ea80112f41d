#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "moead/core.hpp"
#include "moead/decomposition.hpp"
#include "moead/metrics.hpp"
#include "moead/operators.hpp"
#include "moead/problems.hpp"
#include "moead/refpoint.hpp"
#include "moead/weights.hpp"

namespace moead {

/// Resolves N to its simplex-lattice size and T to its default, then checks
/// every run-level invariant. Returns the resolved copy.
inline RunConfig resolve(RunConfig cfg) {
  const ProblemSpec spec = make_problem(cfg.problem, cfg.M, cfg.D, cfg.imop_k, cfg.wfg_k);
  cfg.M = spec.M;
  cfg.D = spec.D;
  if (cfg.N < cfg.M) throw InvalidConfig("N must be at least M");
  cfg.N = static_cast<std::size_t>(binomial(lattice_divisions(cfg.M, cfg.N) + cfg.M - 1, cfg.M - 1));
  if (cfg.T == 0) cfg.T = default_neighborhood_size(cfg.N);
  if (cfg.T < 2 || cfg.T > cfg.N) {
    throw InvalidConfig("T=" + std::to_string(cfg.T) + " must lie in [2, N=" + std::to_string(cfg.N) + "]");
  }
  if (cfg.max_fe < cfg.N) {
    throw InvalidConfig("max_fe=" + std::to_string(cfg.max_fe) + " is below the population size " +
                        std::to_string(cfg.N));
  }
  if (!(cfg.theta > 0.0)) throw InvalidConfig("theta must be positive");
  if (cfg.record_interval == 0) throw InvalidConfig("record_interval must be positive");
  if (!(cfg.drp_eps_ini >= cfg.drp_eps_end && cfg.drp_eps_end > 0.0)) {
    throw InvalidConfig("DRP schedule needs eps_ini >= eps_end > 0");
  }
  validate(cfg.ops);
  return cfg;
}

inline MetricContext make_metric_context(const ProblemSpec& spec, std::size_t pf_points = 10000) {
  return make_metric_context(pf_sample(spec, pf_points), true_ideal(spec));
}

/// Optional observation points inside a run.
struct RunHooks {
  /// Called after initialization (generation 0) and after every full sweep.
  std::function<void(std::size_t generation, std::size_t fe, const Population&, const RefPointState&)> on_generation;
};

/// Decomposition-based evolutionary run with a pluggable reference-point
/// strategy.
///
/// Subproblems are visited cyclically; each visit breeds one offspring from
/// two neighbours, spends one evaluation, updates the running minimum, draws
/// one reference point and replaces every neighbour j the offspring strictly
/// improves on g(. | W_j, Z). A started sweep always completes, so the final
/// evaluation count lies in [max_fe, max_fe + N).
inline RunResult moead_run(const RunConfig& config, const MetricContext* context = nullptr,
                           const RunHooks& hooks = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  const RunConfig cfg = resolve(config);
  const ProblemSpec spec = make_problem(cfg.problem, cfg.M, cfg.D, cfg.imop_k, cfg.wfg_k);

  std::optional<MetricContext> own_ctx;
  if (context == nullptr) {
    own_ctx = make_metric_context(spec);
    context = &*own_ctx;
  }
  const MetricContext& ctx = *context;

  const WeightSet ws = make_weight_set(cfg.M, cfg.N, cfg.T);
  const ScalarizerParams sp{cfg.decomposition, cfg.theta, 1e-6};
  Rng rng(cfg.seed);

  RunResult result;
  result.config = cfg;
  if (cfg.audit) result.audit.emplace();

  Population pop(cfg.N);
  for (Solution& s : pop) {
    s.x.resize(cfg.D);
    for (std::size_t d = 0; d < cfg.D; ++d) s.x[d] = rng.uniform(spec.lower[d], spec.upper[d]);
    s.f = evaluate(spec, s.x);
    require_finite(s.f, "initial objective");
  }
  std::size_t fe = cfg.N;

  const std::vector<Vec> initial = objectives_of(pop);
  RefPointState state = init_state(cfg.strategy, initial, cfg.max_fe,
                                   cfg.strategy == RefStrategy::TrueIdeal ? ctx.ideal : Vec{},
                                   RefPointParams{cfg.drp_eps_ini, cfg.drp_eps_end});

  auto snapshot = [&] {
    const std::vector<Vec> objs = objectives_of(pop);
    result.history.push_back({fe, hypervolume(objs, ctx), igd(objs, ctx)});
  };
  snapshot();
  std::size_t next_record = (fe / cfg.record_interval + 1) * cfg.record_interval;
  if (hooks.on_generation) hooks.on_generation(0, fe, pop, state);

  std::size_t generation = 0;
  while (fe < cfg.max_fe) {
    ++generation;
    GenerationAudit audit{generation, 0, 0, 0};
    for (std::size_t i = 0; i < cfg.N; ++i) {
      const auto& nb = ws.neighborhoods[i];
      const auto [p1, p2] = select_parents(nb, rng);
      Solution y;
      y.x = make_offspring(pop[p1].x, pop[p2].x, spec.lower, spec.upper, cfg.ops, rng);
      y.f = evaluate(spec, y.x);
      ++fe;
      for (double v : y.f) {
        if (!std::isfinite(v)) {
          std::ostringstream msg;
          msg << "non-finite objective at FE=" << fe << " on subproblem " << i << " (" << to_string(cfg.problem)
              << ")";
          throw NumericError(msg.str());
        }
      }
      observe(state, y.f);
      const ZChoice z = select_z(state, fe, ws.vectors[i], rng);
      for (std::size_t j : nb) {
        ++audit.comparisons;
        if (scalarize(y.f, ws.vectors[j], z.z, sp) < scalarize(pop[j].f, ws.vectors[j], z.z, sp)) {
          pop[j] = y;
          ++audit.replacements;
        }
      }
      if (fe >= next_record) {
        snapshot();
        next_record = (fe / cfg.record_interval + 1) * cfg.record_interval;
      }
    }
    audit.fe_end = fe;
    if (result.audit) result.audit->push_back(audit);
    if (hooks.on_generation) hooks.on_generation(generation, fe, pop, state);
  }
  if (result.history.back().fe != fe) snapshot();

  result.final_population = std::move(pop);
  result.final_fe = fe;
  result.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

/// Per-generation neighbour-replacement counts of an audited run.
inline const std::vector<GenerationAudit>& replacement_count_audit(const RunResult& run) {
  if (!run.audit) throw std::logic_error("replacement_count_audit: run was not recorded with audit enabled");
  return *run.audit;
}

}  // namespace moead
