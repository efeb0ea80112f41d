#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "moead/core.hpp"
#include "moead/decomposition.hpp"
#include "moead/refpoint.hpp"

namespace moead::geometry {

using Point = std::array<double, 2>;

/// Point of the concave front f1^4 + f2^4 = 1.
inline Point pf_point(double f1) {
  if (!(f1 >= 0.0 && f1 <= 1.0)) throw std::domain_error("pf_point: f1 must lie in [0,1]");
  return {f1, std::pow(1.0 - f1 * f1 * f1 * f1, 0.25)};
}

/// Magnitude of the front's slope at abscissa g1.
inline double slope_kg(double g1) {
  if (!(g1 >= 0.0)) throw std::domain_error("slope_kg: G1 must be >= 0");
  if (g1 >= 1.0) throw std::domain_error("slope_kg: slope is singular at G1 >= 1");
  return g1 * g1 * g1 / std::pow(1.0 - g1 * g1 * g1 * g1, 0.75);
}

/// Area under the front over [0,1], by tanh-sinh quadrature (handles the
/// infinite derivative at f1 = 1).
inline double pf_area() {
  boost::math::quadrature::tanh_sinh<double> integrator;
  return integrator.integrate([](double x) { return std::pow(1.0 - x * x * x * x, 0.25); }, 0.0, 1.0);
}

/// Two front points F (left) and G (right), the min-style reference point
/// Z = (Z1, G2), and the unit weight direction at angle alpha.
struct Scenario {
  Point F{};
  Point G{};
  Point Z{};
  Point W{};
  double alpha = 0.0;
  double theta = 5.0;
  double k_G = 0.0;
};

inline Scenario make_scenario(double f1, double g1, double z1, double alpha, double theta = 5.0) {
  if (!(f1 >= 0.0 && g1 > f1 && g1 < 1.0)) throw std::invalid_argument("scenario: need 0 <= F1 < G1 < 1");
  if (!(z1 >= 0.0 && z1 <= f1)) throw std::invalid_argument("scenario: need 0 <= Z1 <= F1");
  if (!(alpha > 0.0 && alpha < std::numbers::pi / 2)) throw std::invalid_argument("scenario: need 0 < alpha < pi/2");
  if (!(theta > 0.0)) throw std::invalid_argument("scenario: theta must be positive");
  Scenario s;
  s.F = pf_point(f1);
  s.G = pf_point(g1);
  s.Z = {z1, s.G[1]};
  s.W = {std::cos(alpha), std::sin(alpha)};
  s.alpha = alpha;
  s.theta = theta;
  s.k_G = slope_kg(g1);
  return s;
}

struct TheoremCheck {
  bool stated_condition = false;  // the condition printed in the theorem
  bool configuration = false;     // geometric case the proof works in
  bool assumption_holds = false;  // stated_condition && configuration
  bool inequality_holds = false;
  bool tie = false;  // |g(F) - g(G)| < 1e-12
  double g_F = 0.0;
  double g_G = 0.0;
};

inline constexpr double kTieTolerance = 1e-12;

namespace detail {

inline Point swap(Point p) { return {p[1], p[0]}; }

inline double slope_or_inf(Point from, Point to) {
  const double dx = to[0] - from[0];
  if (dx == 0.0) return std::numeric_limits<double>::infinity();
  return (to[1] - from[1]) / dx;
}

}  // namespace detail

/// Evaluates theorem `id` (1..6) on a scenario.
///
/// Theorems 1-4 use Z = (Z1, G2) and split on k_OW against k_ZF; they claim
/// g(F) < g(G). Theorems 5-6 use Z_W = z_w(Z, W) and claim g(G) < g(F).
/// Theorem 5 adds the configuration tan(alpha) <= G2/G1 (the weight ray
/// passes below G). `mirrored` swaps both coordinates of every point, so
/// the same geometry is checked near (1,0).
inline TheoremCheck check_theorem(int id, const Scenario& s, bool mirrored = false) {
  if (id < 1 || id > 6) throw std::invalid_argument("check_theorem: id must be in 1..6");
  if (!(s.G[0] > s.F[0]) || !(s.alpha > 0.0 && s.alpha < std::numbers::pi / 2) || !(s.theta > 0.0)) {
    throw std::invalid_argument("check_theorem: malformed scenario");
  }
  const double tan_a = std::tan(s.alpha);
  const double k_ow = tan_a;
  const double k_zf = detail::slope_or_inf(s.Z, s.F);
  const bool upper_case = k_ow > k_zf;

  TheoremCheck c;
  switch (id) {
    case 1:
      c.stated_condition = s.k_G <= s.theta;
      c.configuration = upper_case;
      break;
    case 2: {
      const double sa = std::sin(s.alpha), ca = std::cos(s.alpha);
      c.stated_condition = s.k_G <= std::min(0.5 * sa * sa * sa * ca, 0.5 * ca / sa);
      c.configuration = !upper_case;
      break;
    }
    case 3:
      c.stated_condition = true;
      c.configuration = upper_case;
      break;
    case 4:
      c.stated_condition = s.k_G <= tan_a;
      c.configuration = !upper_case;
      break;
    case 5:
      c.stated_condition = tan_a >= 1.0 / s.theta;
      c.configuration = tan_a <= s.G[1] / s.G[0];
      break;
    case 6:
      c.stated_condition = tan_a <= s.G[1] / s.G[0];
      c.configuration = true;
      break;
  }
  c.assumption_holds = c.stated_condition && c.configuration;

  Point F = s.F, G = s.G, W = s.W;
  Point Z = s.Z;
  if (id >= 5) {
    const Vec zw = z_w(Vec{Z[0], Z[1]}, Vec{W[0], W[1]});
    Z = {zw[0], zw[1]};
  }
  if (mirrored) {
    F = detail::swap(F);
    G = detail::swap(G);
    W = detail::swap(W);
    Z = detail::swap(Z);
  }
  const ScalarizerParams sp{id == 1 || id == 2 || id == 5 ? Decomposition::PBI : Decomposition::MTCH, s.theta,
                            1e-6};
  c.g_F = scalarize(F, W, Z, sp);
  c.g_G = scalarize(G, W, Z, sp);
  c.tie = std::abs(c.g_F - c.g_G) < kTieTolerance;
  c.inequality_holds = id <= 4 ? c.g_F < c.g_G : c.g_G < c.g_F;
  return c;
}

/// Scenario sampling box; alpha is drawn from the open interval (0, pi/2).
struct SweepRanges {
  double f1_max = 0.2;   // F1 in (0, f1_max)
  double gap_max = 0.3;  // G1 in (F1, F1 + gap_max), capped below 1
  double theta = 5.0;
};

struct SweepReport {
  int theorem = 0;
  std::size_t draws = 0;
  std::size_t hypothesis_pass = 0;  // non-tied scenarios satisfying the hypothesis
  std::size_t ties = 0;
  std::size_t violations = 0;
  double violation_rate = 0.0;  // violations / hypothesis_pass
  std::size_t stated_only_pass = 0;        // non-tied scenarios meeting only the printed condition
  std::size_t stated_only_violations = 0;  // diagnostic, differs from violations only for Theorem 5
};

namespace detail {

inline double open_uniform(Rng& rng, double lo, double hi) {
  for (;;) {
    const double v = rng.uniform(lo, hi);
    if (v > lo && v < hi) return v;
  }
}

}  // namespace detail

/// Draws scenarios until `n_samples` non-tied ones satisfy the theorem's
/// hypothesis (or 10^4 * n_samples draws are spent) and counts violations.
inline SweepReport theorem_sweep(int id, std::size_t n_samples, Rng& rng, const SweepRanges& ranges = {},
                                 bool mirrored = false) {
  if (id < 1 || id > 6) throw std::invalid_argument("theorem_sweep: id must be in 1..6");
  if (n_samples == 0) throw std::invalid_argument("theorem_sweep: n_samples must be positive");
  if (!(ranges.f1_max > 0.0 && ranges.f1_max < 1.0 && ranges.gap_max > 0.0 && ranges.theta > 0.0)) {
    throw std::invalid_argument("theorem_sweep: invalid sampling ranges");
  }
  SweepReport r;
  r.theorem = id;
  const std::size_t cap = n_samples * 10000;
  while (r.hypothesis_pass < n_samples && r.draws < cap) {
    ++r.draws;
    const double f1 = detail::open_uniform(rng, 0.0, ranges.f1_max);
    const double g1 = detail::open_uniform(rng, f1, std::min(f1 + ranges.gap_max, 1.0));
    const double z1 = rng.uniform(0.0, f1);
    const double alpha = detail::open_uniform(rng, 0.0, std::numbers::pi / 2);
    const TheoremCheck c = check_theorem(id, make_scenario(f1, g1, z1, alpha, ranges.theta), mirrored);
    if (!c.stated_condition) continue;
    if (c.tie) {
      ++r.ties;
      continue;
    }
    ++r.stated_only_pass;
    if (!c.inequality_holds) ++r.stated_only_violations;
    if (!c.configuration) continue;
    ++r.hypothesis_pass;
    if (!c.inequality_holds) ++r.violations;
  }
  if (r.hypothesis_pass > 0) {
    r.violation_rate = static_cast<double>(r.violations) / static_cast<double>(r.hypothesis_pass);
  }
  return r;
}

}  // namespace moead::geometry
