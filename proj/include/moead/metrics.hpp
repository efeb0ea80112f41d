#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "moead/core.hpp"

namespace moead {

/// Reference data for quality indicators. Objective vectors are normalized to
/// (f - ideal) / (nadir - ideal) for HV; IGD works in raw objective space.
struct MetricContext {
  std::vector<Vec> pf_reference;
  Vec ideal;
  Vec nadir;   // componentwise max over pf_reference
  Vec hv_ref;  // in normalized space, 1.1 per objective
};

inline MetricContext make_metric_context(std::vector<Vec> pf_reference, Vec ideal) {
  if (pf_reference.empty()) throw std::invalid_argument("metric context: empty reference front");
  const std::size_t M = ideal.size();
  MetricContext ctx;
  ctx.nadir.assign(M, -std::numeric_limits<double>::infinity());
  for (const Vec& p : pf_reference) {
    if (p.size() != M) throw std::invalid_argument("metric context: reference dimension mismatch");
    for (std::size_t i = 0; i < M; ++i) ctx.nadir[i] = std::max(ctx.nadir[i], p[i]);
  }
  for (std::size_t i = 0; i < M; ++i) {
    if (!(ideal[i] < ctx.nadir[i])) throw std::invalid_argument("metric context: ideal must lie below nadir");
  }
  ctx.pf_reference = std::move(pf_reference);
  ctx.ideal = std::move(ideal);
  ctx.hv_ref.assign(M, 1.1);
  return ctx;
}

namespace detail {

/// Area dominated by 2-D points (minimization) and bounded by ref.
/// Every point must already lie strictly below ref.
inline double hv2d(std::vector<std::pair<double, double>> pts, double r1, double r2) {
  std::sort(pts.begin(), pts.end());
  double area = 0.0;
  double cur = r2;
  for (const auto& [a, b] : pts) {
    if (b < cur) {
      area += (r1 - a) * (cur - b);
      cur = b;
    }
  }
  return area;
}

}  // namespace detail

/// Exact hypervolume dominated by `points` and bounded by `ref`, M in {2,3}.
/// Points not strictly dominating ref contribute nothing. 3-D uses slicing
/// along the last objective with a 2-D sweep per slab.
inline double hypervolume_exact(std::span<const Vec> points, std::span<const double> ref) {
  const std::size_t M = ref.size();
  if (M != 2 && M != 3) throw Unsupported("hypervolume: only 2 or 3 objectives are supported");
  std::vector<Vec> pts;
  for (const Vec& p : points) {
    if (p.size() != M) throw std::invalid_argument("hypervolume: dimension mismatch");
    bool inside = true;
    for (std::size_t i = 0; i < M; ++i) inside = inside && p[i] < ref[i];
    if (inside) pts.push_back(p);
  }
  if (pts.empty()) return 0.0;

  if (M == 2) {
    std::vector<std::pair<double, double>> xy;
    for (const Vec& p : pts) xy.emplace_back(p[0], p[1]);
    return detail::hv2d(std::move(xy), ref[0], ref[1]);
  }

  std::sort(pts.begin(), pts.end(), [](const Vec& a, const Vec& b) { return a[2] < b[2]; });
  double volume = 0.0;
  std::vector<std::pair<double, double>> slab;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    slab.emplace_back(pts[k][0], pts[k][1]);
    const double top = k + 1 < pts.size() ? pts[k + 1][2] : ref[2];
    const double height = top - pts[k][2];
    if (height > 0.0) volume += height * detail::hv2d(slab, ref[0], ref[1]);
  }
  return volume;
}

inline Vec normalize(std::span<const double> f, const MetricContext& ctx) {
  Vec out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = (f[i] - ctx.ideal[i]) / (ctx.nadir[i] - ctx.ideal[i]);
  return out;
}

/// Normalized hypervolume: exact HV of the normalized points against
/// hv_ref, divided by the volume of the reference box.
inline double hypervolume(std::span<const Vec> points, const MetricContext& ctx) {
  std::vector<Vec> normed;
  normed.reserve(points.size());
  for (const Vec& p : points) {
    if (p.size() != ctx.ideal.size()) throw std::invalid_argument("hypervolume: dimension mismatch");
    normed.push_back(normalize(p, ctx));
  }
  double box = 1.0;
  for (double r : ctx.hv_ref) box *= r;
  return hypervolume_exact(normed, ctx.hv_ref) / box;
}

/// Mean distance from each reference-front point to its nearest point in
/// `points`.
inline double igd(std::span<const Vec> points, const MetricContext& ctx) {
  if (points.empty()) throw std::invalid_argument("igd: empty point set");
  const std::size_t M = ctx.ideal.size();
  std::vector<double> flat;
  flat.reserve(points.size() * M);
  for (const Vec& p : points) {
    if (p.size() != M) throw std::invalid_argument("igd: dimension mismatch");
    flat.insert(flat.end(), p.begin(), p.end());
  }
  double total = 0.0;
  for (const Vec& r : ctx.pf_reference) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < flat.size(); j += M) {
      double d = 0.0;
      for (std::size_t i = 0; i < M; ++i) {
        const double t = r[i] - flat[j + i];
        d += t * t;
      }
      best = std::min(best, d);
    }
    total += std::sqrt(best);
  }
  return total / static_cast<double>(ctx.pf_reference.size());
}

inline std::vector<Vec> objectives_of(const Population& pop) {
  std::vector<Vec> out;
  out.reserve(pop.size());
  for (const Solution& s : pop) out.push_back(s.f);
  return out;
}

// ---------------------------------------------------------------------------
// Significance testing
// ---------------------------------------------------------------------------

enum class Preference { LargerIsBetter, SmallerIsBetter };

enum class Verdict { Better, Worse, Similar };

inline std::string symbol(Verdict v) {
  switch (v) {
    case Verdict::Better: return "+";
    case Verdict::Worse: return "-";
    case Verdict::Similar: return "≈";
  }
  return "?";
}

struct RankSumResult {
  double rank_sum_a = 0.0;  // sum of the ranks of sample a in the pooled sample
  double z = 0.0;
  double p_value = 1.0;     // two-sided
};

/// Midranks (1-based) of the pooled sample a ++ b.
inline std::vector<double> pooled_ranks(std::span<const double> a, std::span<const double> b) {
  std::vector<double> all(a.begin(), a.end());
  all.insert(all.end(), b.begin(), b.end());
  std::vector<std::size_t> order(all.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return all[i] < all[j]; });
  std::vector<double> ranks(all.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && all[order[j + 1]] == all[order[i]]) ++j;
    const double mid = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = mid;
    i = j + 1;
  }
  return ranks;
}

/// Two-sided Wilcoxon rank-sum test, normal approximation with tie and
/// continuity corrections.
inline RankSumResult rank_sum_test(std::span<const double> a, std::span<const double> b) {
  if (a.size() < 5 || b.size() < 5) throw std::invalid_argument("rank_sum_test: need at least 5 samples per group");
  require_finite(a, "rank_sum_test");
  require_finite(b, "rank_sum_test");
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  const double n = na + nb;
  const std::vector<double> ranks = pooled_ranks(a, b);

  RankSumResult r;
  for (std::size_t i = 0; i < a.size(); ++i) r.rank_sum_a += ranks[i];

  std::vector<double> sorted = ranks;
  std::sort(sorted.begin(), sorted.end());
  double tie_term = 0.0;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    const double t = static_cast<double>(j - i);
    tie_term += t * t * t - t;
    i = j;
  }
  const double mean = na * (n + 1.0) / 2.0;
  const double var = na * nb / 12.0 * ((n + 1.0) - tie_term / (n * (n - 1.0)));
  if (!(var > 0.0)) return r;
  const double diff = r.rank_sum_a - mean;
  const double corrected = diff - 0.5 * (diff > 0.0 ? 1.0 : (diff < 0.0 ? -1.0 : 0.0));
  r.z = corrected / std::sqrt(var);
  r.p_value = std::min(1.0, std::erfc(std::abs(r.z) / std::numbers::sqrt2));
  return r;
}

/// '+' when a is significantly better than b at level alpha, '-' when
/// significantly worse, otherwise similar.
inline Verdict rank_sum_compare(std::span<const double> a, std::span<const double> b, Preference pref,
                                double alpha = 0.05) {
  const RankSumResult r = rank_sum_test(a, b);
  if (!(r.p_value < alpha)) return Verdict::Similar;
  const double mean_rank = static_cast<double>(a.size() + b.size() + 1) / 2.0;
  const bool a_larger = r.rank_sum_a / static_cast<double>(a.size()) > mean_rank;
  const bool a_better = pref == Preference::LargerIsBetter ? a_larger : !a_larger;
  return a_better ? Verdict::Better : Verdict::Worse;
}

inline double mean_of(std::span<const double> v) {
  if (v.empty()) return 0.0;
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

/// Sample standard deviation (n - 1 denominator).
inline double stddev_of(std::span<const double> v) {
  if (v.size() < 2) return 0.0;
  const double m = mean_of(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return std::sqrt(s / static_cast<double>(v.size() - 1));
}

}  // namespace moead
