#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "moead/core.hpp"
#include "moead/weights.hpp"

namespace moead {

struct ImopParams {
  std::size_t K = 5;  // position variables
  std::size_t L = 5;  // distance variables
  double a = 0.05;    // exponent of y (y1 for IMOP5-8)
  double a3 = 10.0;   // exponent of y2, IMOP5-8 only
};

struct ProblemSpec {
  ProblemId id = ProblemId::IMOP2;
  std::size_t M = 2;
  std::size_t D = 10;
  Vec lower;
  Vec upper;
  ImopParams imop;
  std::size_t wfg_k = 4;  // WFG position-related parameters
};

/// Problem settings used in the reference experiments.
struct Preset {
  ProblemId id;
  std::size_t N;
  std::size_t M;
  std::size_t D;
  std::size_t max_fe;
};

inline Preset preset_for(ProblemId id) {
  switch (id) {
    case ProblemId::IMOP1:
    case ProblemId::IMOP2:
    case ProblemId::IMOP3: return {id, 100, 2, 10, 20000};
    case ProblemId::IMOP4:
    case ProblemId::IMOP5:
    case ProblemId::IMOP6:
    case ProblemId::IMOP7:
    case ProblemId::IMOP8: return {id, 100, 3, 10, 20000};
    case ProblemId::WFG1:
    case ProblemId::WFG2:
    case ProblemId::WFG3:
    case ProblemId::WFG4: return {id, 100, 3, 12, 30000};
    case ProblemId::DTLZ1: return {id, 100, 3, 7, 20000};
    case ProblemId::DTLZ2:
    case ProblemId::DTLZ3:
    case ProblemId::DTLZ4: return {id, 100, 3, 12, 20000};
  }
  throw Unsupported("preset_for: unknown problem");
}

inline bool is_imop(ProblemId id) { return id <= ProblemId::IMOP8; }
inline bool is_dtlz(ProblemId id) { return id >= ProblemId::DTLZ1 && id <= ProblemId::DTLZ4; }
inline bool is_wfg(ProblemId id) { return id >= ProblemId::WFG1; }

/// Builds and validates a problem. M and D of 0 select the preset values.
inline ProblemSpec make_problem(ProblemId id, std::size_t M = 0, std::size_t D = 0,
                                std::size_t imop_k = 5, std::size_t wfg_k = 4) {
  const Preset p = preset_for(id);
  ProblemSpec s;
  s.id = id;
  s.M = M == 0 ? p.M : M;
  s.D = D == 0 ? p.D : D;
  const std::string name(to_string(id));

  if (is_imop(id)) {
    if (s.M != p.M) throw InvalidConfig(name + ": objective count is fixed at " + std::to_string(p.M));
    if (imop_k < 1 || imop_k >= s.D) throw InvalidConfig(name + ": need 1 <= K < D");
    if (id >= ProblemId::IMOP5 && imop_k < 2) throw InvalidConfig(name + ": need K >= 2");
    s.imop.K = imop_k;
    s.imop.L = s.D - imop_k;
    s.imop.a = 0.05;
  } else if (is_dtlz(id)) {
    if (s.M < 2 || s.M > 3) throw Unsupported(name + ": supported for M in {2,3}");
    if (s.D < s.M) throw InvalidConfig(name + ": need D >= M");
  } else {
    if (s.M < 2 || s.M > 3) throw Unsupported(name + ": supported for M in {2,3}");
    if (wfg_k < s.M - 1 || wfg_k % (s.M - 1) != 0) {
      throw InvalidConfig(name + ": k must be a positive multiple of M-1");
    }
    s.wfg_k = wfg_k;
    if (s.D <= s.wfg_k) throw InvalidConfig(name + ": need D > k");
    const std::size_t l = s.D - s.wfg_k;
    if ((id == ProblemId::WFG2 || id == ProblemId::WFG3) && l % 2 != 0) {
      throw InvalidConfig(name + ": distance-parameter count must be even");
    }
  }

  s.lower.assign(s.D, 0.0);
  s.upper.assign(s.D, 1.0);
  if (is_wfg(id)) {
    for (std::size_t i = 0; i < s.D; ++i) s.upper[i] = 2.0 * static_cast<double>(i + 1);
  }
  return s;
}

namespace detail {

constexpr double kPi = std::numbers::pi;

inline double clamp01(double v) { return std::min(1.0, std::max(0.0, v)); }

// ---- IMOP -------------------------------------------------------------------

inline double mean_of(std::span<const double> x, std::size_t begin, std::size_t end,
                      std::size_t step) {
  double s = 0.0;
  std::size_t n = 0;
  for (std::size_t i = begin; i < end; i += step, ++n) s += x[i];
  return s / static_cast<double>(n);
}

inline double imop_distance(std::span<const double> x, std::size_t K) {
  double g = 0.0;
  for (std::size_t i = K; i < x.size(); ++i) g += (x[i] - 0.5) * (x[i] - 0.5);
  return g;
}

inline Vec imop5_front(double y1, double y2, double g) {
  const double h1 = 0.4 * std::cos(kPi / 4.0 * std::ceil(8.0 * y1)) + 0.1 * y2 * std::cos(16.0 * kPi * y1);
  const double h2 = 0.4 * std::sin(kPi / 4.0 * std::ceil(8.0 * y1)) + 0.1 * y2 * std::sin(16.0 * kPi * y1);
  return {g + h1, g + h2, g + 0.5 - h1 - h2};
}

inline Vec imop6_front(double y1, double y2, double g) {
  const double s1 = std::sin(3.0 * kPi * y1);
  const double s2 = std::sin(3.0 * kPi * y2);
  const double r = std::max(0.0, std::min(s1 * s1, s2 * s2) - 0.05);
  const double lift = std::ceil(r);
  return {(1.0 + g) * y1 + lift, (1.0 + g) * y2 + lift, (0.5 + g) * (2.0 - y1 - y2) + lift};
}

inline Vec imop7_front(const Vec& h, double g) {
  const double r = std::min({std::abs(h[0] - h[1]), std::abs(h[1] - h[2]), std::abs(h[2] - h[0])});
  const double lift = 10.0 * std::max(0.0, r - 0.1);
  return {(1.0 + g) * h[0] + lift, (1.0 + g) * h[1] + lift, (1.0 + g) * h[2] + lift};
}

inline Vec imop8_front(double y1, double y2, double g) {
  const double s = y1 * (1.0 + std::sin(19.0 * kPi * y1)) + y2 * (1.0 + std::sin(19.0 * kPi * y2));
  return {y1, y2, (1.0 + g) * (3.0 - s / (1.0 + g))};
}

inline Vec sphere_point(double y1, double y2) {
  return {std::cos(kPi / 2.0 * y1) * std::cos(kPi / 2.0 * y2),
          std::cos(kPi / 2.0 * y1) * std::sin(kPi / 2.0 * y2), std::sin(kPi / 2.0 * y1)};
}

inline Vec evaluate_imop(const ProblemSpec& s, std::span<const double> x) {
  const std::size_t K = s.imop.K;
  const double g = imop_distance(x, K);
  const double a = s.imop.a;
  switch (s.id) {
    case ProblemId::IMOP1: {
      const double y = std::pow(mean_of(x, 0, K, 1), a);
      return {g + std::pow(std::cos(y * kPi / 2.0), 8.0), g + std::pow(std::sin(y * kPi / 2.0), 8.0)};
    }
    case ProblemId::IMOP2: {
      const double y = std::pow(mean_of(x, 0, K, 1), a);
      // cos(pi/2 y) written as sin(pi/2 (1-y)) so y=1 gives exactly 0.
      return {g + std::sqrt(std::max(0.0, std::sin((1.0 - y) * kPi / 2.0))),
              g + std::sqrt(std::max(0.0, std::sin(y * kPi / 2.0)))};
    }
    case ProblemId::IMOP3: {
      const double y = std::pow(mean_of(x, 0, K, 1), a);
      return {g + 1.0 + std::cos(10.0 * kPi * y) / 5.0 - y, g + y};
    }
    case ProblemId::IMOP4: {
      const double y = std::pow(mean_of(x, 0, K, 1), a);
      return {(1.0 + g) * y, (1.0 + g) * (y + std::sin(10.0 * kPi * y) / 10.0), (1.0 + g) * (1.0 - y)};
    }
    default: break;
  }
  const double y1 = std::pow(mean_of(x, 0, K, 2), a);
  const double y2 = std::pow(mean_of(x, 1, K, 2), s.imop.a3);
  switch (s.id) {
    case ProblemId::IMOP5: return imop5_front(y1, y2, g);
    case ProblemId::IMOP6: return imop6_front(y1, y2, g);
    case ProblemId::IMOP7: return imop7_front(sphere_point(y1, y2), g);
    case ProblemId::IMOP8: return imop8_front(y1, y2, g);
    default: break;
  }
  throw Unsupported("evaluate: not an IMOP problem");
}

// ---- DTLZ -------------------------------------------------------------------

inline Vec evaluate_dtlz(const ProblemSpec& s, std::span<const double> x) {
  const std::size_t M = s.M;
  const std::size_t D = s.D;
  const auto tail = x.subspan(M - 1);
  double g = 0.0;
  if (s.id == ProblemId::DTLZ1 || s.id == ProblemId::DTLZ3) {
    for (double xi : tail) g += (xi - 0.5) * (xi - 0.5) - std::cos(20.0 * kPi * (xi - 0.5));
    g = 100.0 * (static_cast<double>(D - M + 1) + g);
  } else {
    for (double xi : tail) g += (xi - 0.5) * (xi - 0.5);
  }

  Vec f(M, 1.0 + g);
  if (s.id == ProblemId::DTLZ1) {
    for (std::size_t m = 0; m < M; ++m) {
      f[m] *= 0.5;
      for (std::size_t i = 0; i + m + 1 < M; ++i) f[m] *= x[i];
      if (m > 0) f[m] *= 1.0 - x[M - m - 1];
    }
    return f;
  }
  const double alpha = s.id == ProblemId::DTLZ4 ? 100.0 : 1.0;
  for (std::size_t m = 0; m < M; ++m) {
    for (std::size_t i = 0; i + m + 1 < M; ++i) f[m] *= std::cos(std::pow(x[i], alpha) * kPi / 2.0);
    if (m > 0) f[m] *= std::sin(std::pow(x[M - m - 1], alpha) * kPi / 2.0);
  }
  return f;
}

// ---- WFG --------------------------------------------------------------------

inline double s_linear(double y, double A) { return std::abs(y - A) / std::abs(std::floor(A - y) + A); }

inline double b_flat(double y, double A, double B, double C) {
  const double t1 = std::min(0.0, std::floor(y - B)) * A * (B - y) / B;
  const double t2 = std::min(0.0, std::floor(C - y)) * (1.0 - A) * (y - C) / (1.0 - C);
  return clamp01(A + t1 - t2);
}

inline double b_poly(double y, double alpha) { return clamp01(std::pow(y, alpha)); }

inline double s_multi(double y, double A, double B, double C) {
  const double t1 = std::abs(y - C) / (2.0 * (std::floor(C - y) + C));
  const double t2 = (4.0 * A + 2.0) * kPi * (0.5 - t1);
  return clamp01((1.0 + std::cos(t2) + 4.0 * B * t1 * t1) / (B + 2.0));
}

inline double r_sum(std::span<const double> y, std::span<const double> w) {
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    num += w[i] * y[i];
    den += w[i];
  }
  return clamp01(num / den);
}

inline double r_nonsep(std::span<const double> y, std::size_t A) {
  const std::size_t n = y.size();
  double num = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    num += y[j];
    for (std::size_t k = 0; k + 2 <= A; ++k) num += std::abs(y[j] - y[(j + k + 1) % n]);
  }
  const double a = static_cast<double>(A);
  const double half = std::ceil(a / 2.0);
  return clamp01(num / (static_cast<double>(n) * half * (1.0 + 2.0 * a - 2.0 * half) / a));
}

enum class Shape { Linear, Convex, Concave };

/// Shape function h_m (m is 1-based) over positions x_1..x_{M-1}.
inline double shape_h(Shape shape, std::span<const double> x, std::size_t M, std::size_t m) {
  double r = 1.0;
  for (std::size_t i = 0; i + m < M; ++i) {
    switch (shape) {
      case Shape::Linear: r *= x[i]; break;
      case Shape::Convex: r *= 1.0 - std::cos(x[i] * kPi / 2.0); break;
      case Shape::Concave: r *= std::sin(x[i] * kPi / 2.0); break;
    }
  }
  if (m != 1) {
    const double xv = x[M - m];
    switch (shape) {
      case Shape::Linear: r *= 1.0 - xv; break;
      case Shape::Convex: r *= 1.0 - std::sin(xv * kPi / 2.0); break;
      case Shape::Concave: r *= std::cos(xv * kPi / 2.0); break;
    }
  }
  return r;
}

inline double mixed_h(double x1, double alpha, double A) {
  return std::pow(1.0 - x1 - std::cos(2.0 * A * kPi * x1 + kPi / 2.0) / (2.0 * A * kPi), alpha);
}

inline double disc_h(double x1, double alpha, double beta, double A) {
  const double c = std::cos(A * std::pow(x1, beta) * kPi);
  return 1.0 - std::pow(x1, alpha) * c * c;
}

/// Objective vector from the underlying positions x_1..x_{M-1} and the
/// distance x_M.
inline Vec wfg_objectives(ProblemId id, std::span<const double> x, std::size_t M) {
  Vec f(M);
  for (std::size_t m = 1; m <= M; ++m) {
    double h = 0.0;
    switch (id) {
      case ProblemId::WFG1:
        h = m < M ? shape_h(Shape::Convex, x, M, m) : mixed_h(x[0], 1.0, 5.0);
        break;
      case ProblemId::WFG2:
        h = m < M ? shape_h(Shape::Convex, x, M, m) : disc_h(x[0], 1.0, 1.0, 5.0);
        break;
      case ProblemId::WFG3: h = shape_h(Shape::Linear, x, M, m); break;
      default: h = shape_h(Shape::Concave, x, M, m); break;
    }
    f[m - 1] = x[M - 1] + 2.0 * static_cast<double>(m) * h;
  }
  return f;
}

inline Vec evaluate_wfg(const ProblemSpec& s, std::span<const double> z) {
  const std::size_t M = s.M;
  const std::size_t n = s.D;
  const std::size_t k = s.wfg_k;
  const std::size_t l = n - k;

  Vec y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = clamp01(z[i] / (2.0 * static_cast<double>(i + 1)));

  Vec t(M);
  const std::size_t group = k / (M - 1);
  const Vec ones(n, 1.0);

  switch (s.id) {
    case ProblemId::WFG1: {
      for (std::size_t i = k; i < n; ++i) y[i] = clamp01(s_linear(y[i], 0.35));
      for (std::size_t i = k; i < n; ++i) y[i] = b_flat(y[i], 0.8, 0.75, 0.85);
      for (double& v : y) v = b_poly(v, 0.02);
      Vec w(n);
      for (std::size_t i = 0; i < n; ++i) w[i] = 2.0 * static_cast<double>(i + 1);
      for (std::size_t i = 0; i + 1 < M; ++i) {
        t[i] = r_sum(std::span(y).subspan(i * group, group), std::span(w).subspan(i * group, group));
      }
      t[M - 1] = r_sum(std::span(y).subspan(k, l), std::span(w).subspan(k, l));
      break;
    }
    case ProblemId::WFG2:
    case ProblemId::WFG3: {
      for (std::size_t i = k; i < n; ++i) y[i] = clamp01(s_linear(y[i], 0.35));
      Vec y2(k + l / 2);
      for (std::size_t i = 0; i < k; ++i) y2[i] = y[i];
      for (std::size_t j = 0; j < l / 2; ++j) {
        const double pair[2] = {y[k + 2 * j], y[k + 2 * j + 1]};
        y2[k + j] = r_nonsep(pair, 2);
      }
      for (std::size_t i = 0; i + 1 < M; ++i) {
        t[i] = r_sum(std::span(y2).subspan(i * group, group), std::span(ones).subspan(0, group));
      }
      t[M - 1] = r_sum(std::span(y2).subspan(k, l / 2), std::span(ones).subspan(0, l / 2));
      break;
    }
    case ProblemId::WFG4: {
      for (double& v : y) v = s_multi(v, 30.0, 10.0, 0.35);
      for (std::size_t i = 0; i + 1 < M; ++i) {
        t[i] = r_sum(std::span(y).subspan(i * group, group), std::span(ones).subspan(0, group));
      }
      t[M - 1] = r_sum(std::span(y).subspan(k, l), std::span(ones).subspan(0, l));
      break;
    }
    default: throw Unsupported("evaluate: not a WFG problem");
  }

  // Degeneracy constants: WFG3 collapses every position but the first.
  Vec x(M);
  for (std::size_t i = 0; i + 1 < M; ++i) {
    const double A = (s.id == ProblemId::WFG3 && i > 0) ? 0.0 : 1.0;
    x[i] = std::max(t[M - 1], A) * (t[i] - 0.5) + 0.5;
  }
  x[M - 1] = t[M - 1];
  return wfg_objectives(s.id, x, M);
}

// ---- Front sampling ---------------------------------------------------------

inline bool dominates(const Vec& a, const Vec& b) {
  bool strict = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
    if (a[i] < b[i]) strict = true;
  }
  return strict;
}

/// Keeps the mutually nondominated points, preserving input order.
inline std::vector<Vec> nondominated(const std::vector<Vec>& pts) {
  std::vector<std::size_t> order(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pts[a] < pts[b]; });
  // In lexicographic order no later point dominates an earlier one.
  std::vector<std::size_t> kept;
  for (std::size_t idx : order) {
    bool dominated = false;
    for (std::size_t j : kept) {
      if (dominates(pts[j], pts[idx]) || pts[j] == pts[idx]) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(idx);
  }
  std::sort(kept.begin(), kept.end());
  std::vector<Vec> out;
  out.reserve(kept.size());
  for (std::size_t i : kept) out.push_back(pts[i]);
  return out;
}

/// `count` points spaced evenly by arc length along param(u), u in [0, 1].
inline std::vector<Vec> sample_curve(const std::function<Vec(double)>& param, std::size_t count) {
  const std::size_t dense = std::max<std::size_t>(64 * count, 4096);
  std::vector<double> us(dense + 1), len(dense + 1, 0.0);
  Vec prev = param(0.0);
  for (std::size_t i = 0; i <= dense; ++i) {
    us[i] = static_cast<double>(i) / static_cast<double>(dense);
    if (i == 0) continue;
    Vec cur = param(us[i]);
    double d = 0.0;
    for (std::size_t k = 0; k < cur.size(); ++k) d += (cur[k] - prev[k]) * (cur[k] - prev[k]);
    len[i] = len[i - 1] + std::sqrt(d);
    prev = std::move(cur);
  }
  std::vector<Vec> out;
  out.reserve(count);
  std::size_t seg = 1;
  for (std::size_t j = 0; j < count; ++j) {
    if (j == 0) { out.push_back(param(0.0)); continue; }
    if (j + 1 == count) { out.push_back(param(1.0)); continue; }
    const double target = len.back() * static_cast<double>(j) / static_cast<double>(count - 1);
    while (seg < dense && len[seg] < target) ++seg;
    const double span = len[seg] - len[seg - 1];
    const double frac = span > 0.0 ? (target - len[seg - 1]) / span : 0.0;
    out.push_back(param(us[seg - 1] + frac * (us[seg] - us[seg - 1])));
  }
  return out;
}

/// Symmetric 2-objective front f2 = h(f1) with h an involution, traced from
/// (0,1) to (1,0) by following f1 up to the crossing point and f2 after it.
inline std::vector<Vec> sample_symmetric_front(const std::function<double(double)>& h, double crossing,
                                               std::size_t count) {
  return sample_curve(
      [&](double u) -> Vec {
        if (u <= 0.5) {
          const double f1 = 2.0 * u * crossing;
          return {f1, h(f1)};
        }
        const double f2 = 2.0 * (1.0 - u) * crossing;
        return {h(f2), f2};
      },
      count);
}

inline std::vector<Vec> sample_grid(const std::function<Vec(double, double)>& map, std::size_t count) {
  const auto side = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(count))));
  std::vector<Vec> pts;
  pts.reserve(side * side);
  for (std::size_t i = 0; i < side; ++i) {
    for (std::size_t j = 0; j < side; ++j) {
      pts.push_back(map(static_cast<double>(i) / static_cast<double>(side - 1),
                        static_cast<double>(j) / static_cast<double>(side - 1)));
    }
  }
  return pts;
}

}  // namespace detail

inline void check_in_bounds(const ProblemSpec& spec, std::span<const double> x) {
  if (x.size() != spec.D) {
    throw std::invalid_argument("evaluate: expected " + std::to_string(spec.D) + " variables, got " +
                                std::to_string(x.size()));
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] >= spec.lower[i] && x[i] <= spec.upper[i])) {
      throw std::out_of_range("evaluate: x[" + std::to_string(i) + "]=" + std::to_string(x[i]) +
                              " outside [" + std::to_string(spec.lower[i]) + ", " +
                              std::to_string(spec.upper[i]) + "]");
    }
  }
}

/// Objective vector F(x). x must lie inside the box bounds.
inline Vec evaluate(const ProblemSpec& spec, std::span<const double> x) {
  check_in_bounds(spec, x);
  if (is_imop(spec.id)) return detail::evaluate_imop(spec, x);
  if (is_dtlz(spec.id)) return detail::evaluate_dtlz(spec, x);
  return detail::evaluate_wfg(spec, x);
}

/// Deterministic sample of the analytic Pareto front, roughly `count` points
/// (fronts with holes or gaps return fewer after dominance filtering).
inline std::vector<Vec> pf_sample(const ProblemSpec& spec, std::size_t count = 10000) {
  using namespace detail;
  if (count < 2) throw std::invalid_argument("pf_sample: count must be at least 2");
  const std::size_t M = spec.M;

  switch (spec.id) {
    case ProblemId::IMOP1:
      // f1^(1/4) + f2^(1/4) = 1
      return sample_symmetric_front(
          [](double v) { return std::pow(1.0 - std::pow(v, 0.25), 4.0); }, 1.0 / 16.0, count);
    case ProblemId::IMOP2:
      // f1^4 + f2^4 = 1
      return sample_symmetric_front(
          [](double v) { return std::pow(1.0 - std::pow(v, 4.0), 0.25); }, std::pow(0.5, 0.25), count);
    case ProblemId::IMOP3:
      return nondominated(sample_curve(
          [](double t) -> Vec { return {1.0 + std::cos(10.0 * kPi * t) / 5.0 - t, t}; }, count));
    case ProblemId::IMOP4:
      return nondominated(sample_curve(
          [](double t) -> Vec { return {t, t + std::sin(10.0 * kPi * t) / 10.0, 1.0 - t}; }, count));
    case ProblemId::IMOP5:
      return nondominated(sample_grid([](double a, double b) { return imop5_front(a, b, 0.0); }, count));
    case ProblemId::IMOP6:
      return nondominated(sample_grid([](double a, double b) { return imop6_front(a, b, 0.0); }, count));
    case ProblemId::IMOP7: {
      std::vector<Vec> pts;
      for (Vec w : generate_weights(3, count)) {
        const double n = std::sqrt(w[0] * w[0] + w[1] * w[1] + w[2] * w[2]);
        for (double& v : w) v /= n;
        pts.push_back(imop7_front(w, 0.0));
      }
      return nondominated(pts);
    }
    case ProblemId::IMOP8:
      return nondominated(sample_grid([](double a, double b) { return imop8_front(a, b, 0.0); }, count));
    case ProblemId::DTLZ1:
    case ProblemId::DTLZ2:
    case ProblemId::DTLZ3:
    case ProblemId::DTLZ4: {
      std::vector<Vec> pts = generate_weights(M, count);
      for (Vec& w : pts) {
        if (spec.id == ProblemId::DTLZ1) {
          for (double& v : w) v *= 0.5;
        } else {
          double n = 0.0;
          for (double v : w) n += v * v;
          n = std::sqrt(n);
          for (double& v : w) v /= n;
        }
      }
      return pts;
    }
    case ProblemId::WFG1:
    case ProblemId::WFG2: {
      if (M == 2) {
        return nondominated(sample_curve(
            [&](double u) { const double x[2] = {u, 0.0}; return wfg_objectives(spec.id, x, 2); }, count));
      }
      return nondominated(sample_grid(
          [&](double a, double b) { const double x[3] = {a, b, 0.0}; return wfg_objectives(spec.id, x, 3); },
          count));
    }
    case ProblemId::WFG3:
      return sample_curve(
          [&](double u) {
            Vec x(M, 0.5);
            x[0] = u;
            x[M - 1] = 0.0;
            return wfg_objectives(spec.id, x, M);
          },
          count);
    case ProblemId::WFG4: {
      std::vector<Vec> pts = generate_weights(M, count);
      for (Vec& w : pts) {
        double n = 0.0;
        for (double v : w) n += v * v;
        n = std::sqrt(n);
        for (std::size_t m = 0; m < M; ++m) w[m] = 2.0 * static_cast<double>(m + 1) * w[m] / n;
      }
      return pts;
    }
  }
  throw Unsupported("pf_sample: unsupported problem");
}

/// Componentwise minimum over the true front. Fronts touching every
/// coordinate plane give the zero vector; IMOP3, IMOP5 and IMOP8 dip below
/// zero and use the minimum of a dense front sample.
inline Vec true_ideal(const ProblemSpec& spec) {
  if (spec.id != ProblemId::IMOP3 && spec.id != ProblemId::IMOP5 && spec.id != ProblemId::IMOP8) {
    return Vec(spec.M, 0.0);
  }
  Vec ideal(spec.M, 0.0);
  for (const Vec& p : pf_sample(spec, 10000)) {
    for (std::size_t m = 0; m < spec.M; ++m) ideal[m] = std::min(ideal[m], p[m]);
  }
  return ideal;
}

}  // namespace moead
