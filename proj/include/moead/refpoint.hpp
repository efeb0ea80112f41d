#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "moead/core.hpp"

namespace moead {

struct RefPointParams {
  double drp_eps_ini = 1.0;
  double drp_eps_end = 0.001;
};

/// Which reference point a selection produced.
enum class ZSource { MinPoint, TrueIdeal, Drp, WeightGuided, Origin };

struct RefPointState {
  RefStrategy strategy = RefStrategy::Min;
  Vec z_min;     // running componentwise minimum of every observed objective
  Vec z_origin;  // coordinate origin
  Vec z_ideal;   // analytic ideal point, TrueIdeal only
  std::size_t max_fe = 0;
  double mu = 0.0;     // Gaussian schedule mean, max_fe / 2
  double sigma = 0.0;  // mu / 5
  RefPointParams params;
};

struct ZChoice {
  Vec z;
  ZSource source = ZSource::MinPoint;
};

inline RefPointState init_state(RefStrategy strategy, std::span<const Vec> initial_objectives, std::size_t max_fe,
                                const Vec& true_ideal, const RefPointParams& params = {}) {
  if (initial_objectives.empty()) throw std::invalid_argument("init_state: empty population");
  const std::size_t M = initial_objectives.front().size();
  RefPointState s;
  s.strategy = strategy;
  s.z_min = initial_objectives.front();
  for (const Vec& f : initial_objectives) {
    if (f.size() != M) throw std::invalid_argument("init_state: inconsistent objective dimension");
    require_finite(f, "init_state");
    for (std::size_t i = 0; i < M; ++i) s.z_min[i] = std::min(s.z_min[i], f[i]);
  }
  s.z_origin.assign(M, 0.0);
  s.z_ideal = true_ideal;
  if (strategy == RefStrategy::TrueIdeal && s.z_ideal.size() != M) {
    throw std::invalid_argument("init_state: true ideal has wrong dimension");
  }
  s.max_fe = max_fe;
  s.mu = static_cast<double>(max_fe) / 2.0;
  s.sigma = s.mu / 5.0;
  s.params = params;
  return s;
}

/// Folds an offspring's objectives into the running minimum.
inline void observe(RefPointState& state, std::span<const double> f) {
  if (f.size() != state.z_min.size()) throw std::invalid_argument("observe: dimension mismatch");
  require_finite(f, "observe");
  for (std::size_t i = 0; i < f.size(); ++i) state.z_min[i] = std::min(state.z_min[i], f[i]);
}

/// Normal CDF via std::erfc (relative error near machine precision across
/// the whole range, well inside 1e-7 absolute).
inline double gauss_cdf(double y, double mu, double sigma) {
  return 0.5 * std::erfc(-(y - mu) / (sigma * std::numbers::sqrt2));
}

/// Point where the origin-centred sphere of radius |z_min| meets the ray
/// along w.
inline Vec z_w(std::span<const double> z_min, std::span<const double> w) {
  if (z_min.size() != w.size()) throw std::invalid_argument("z_w: dimension mismatch");
  double rz = 0.0, rw = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    rz += z_min[i] * z_min[i];
    rw += w[i] * w[i];
  }
  if (!(rw > 0.0)) throw std::invalid_argument("z_w: zero weight vector");
  const double scale = std::sqrt(rz) / std::sqrt(rw);
  Vec out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = scale * w[i];
  return out;
}

/// Linearly decaying DRP offset: eps_ini at FE=1, eps_end at FE=max_fe.
/// FE past the budget is held at max_fe so the offset stays positive.
inline double drp_epsilon(const RefPointState& s, std::size_t fe) {
  const double maxfe = static_cast<double>(s.max_fe);
  const double e = static_cast<double>(std::clamp<std::size_t>(fe, 1, std::max<std::size_t>(s.max_fe, 1)));
  if (s.max_fe <= 1) return s.params.drp_eps_end;
  return (s.params.drp_eps_ini - s.params.drp_eps_end) * (maxfe - e) / (maxfe - 1.0) + s.params.drp_eps_end;
}

/// Gaussian-hybrid branch: Z_w when u > pro, otherwise the origin in the
/// first half of the schedule (pro < 1/2) and the running minimum after.
inline ZSource normw_branch(double pro, double u) {
  if (u > pro) return ZSource::WeightGuided;
  return pro < 0.5 ? ZSource::Origin : ZSource::MinPoint;
}

/// Reference point for the offspring produced at evaluation count `fe` on
/// the subproblem with weight `w_i`.
inline ZChoice select_z(const RefPointState& s, std::size_t fe, std::span<const double> w_i, Rng& rng) {
  switch (s.strategy) {
    case RefStrategy::Min: return {s.z_min, ZSource::MinPoint};
    case RefStrategy::TrueIdeal: return {s.z_ideal, ZSource::TrueIdeal};
    case RefStrategy::DRP: {
      const double eps = drp_epsilon(s, fe);
      Vec z = s.z_min;
      for (double& v : z) v -= eps;
      return {std::move(z), ZSource::Drp};
    }
    case RefStrategy::NormW: {
      const double pro = gauss_cdf(static_cast<double>(fe), s.mu, s.sigma);
      switch (normw_branch(pro, rng.uniform())) {
        case ZSource::WeightGuided: return {z_w(s.z_min, w_i), ZSource::WeightGuided};
        case ZSource::Origin: return {s.z_origin, ZSource::Origin};
        default: return {s.z_min, ZSource::MinPoint};
      }
    }
  }
  throw std::invalid_argument("select_z: unknown strategy");
}

}  // namespace moead
