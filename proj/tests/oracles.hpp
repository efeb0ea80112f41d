#pragma once

// Reference computations used only to check the library: brute-force or
// sampling-based, and deliberately independent of the code under test.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using Vec = std::vector<double>;

/// Monte Carlo estimate of the volume dominated by `points` inside the box
/// [0, ref]. Returns {estimate, standard error}.
inline std::pair<double, double> mc_hypervolume(const std::vector<Vec>& points, const Vec& ref, std::size_t samples,
                                                std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::size_t M = ref.size();
  double box = 1.0;
  for (double r : ref) box *= r;
  std::size_t hits = 0;
  Vec s(M);
  for (std::size_t k = 0; k < samples; ++k) {
    for (std::size_t i = 0; i < M; ++i) s[i] = unit(gen) * ref[i];
    for (const Vec& p : points) {
      bool dom = true;
      for (std::size_t i = 0; i < M && dom; ++i) dom = p[i] <= s[i];
      if (dom) {
        ++hits;
        break;
      }
    }
  }
  const double frac = static_cast<double>(hits) / static_cast<double>(samples);
  return {frac * box, box * std::sqrt(frac * (1.0 - frac) / static_cast<double>(samples))};
}

/// Exact two-sided permutation p-value of the rank-sum statistic: every
/// split of the pooled midranks into groups of |a| and |b| is enumerated.
inline double exact_rank_sum_p(const Vec& a, const Vec& b) {
  Vec all = a;
  all.insert(all.end(), b.begin(), b.end());
  const std::size_t n = all.size(), na = a.size();
  Vec ranks(n);
  for (std::size_t i = 0; i < n; ++i) {
    double less = 0.0, equal = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (all[j] < all[i]) less += 1.0;
      else if (all[j] == all[i]) equal += 1.0;
    }
    ranks[i] = less + (equal + 1.0) / 2.0;
  }
  double observed = 0.0;
  for (std::size_t i = 0; i < na; ++i) observed += ranks[i];
  const double expected = static_cast<double>(na) * static_cast<double>(n + 1) / 2.0;
  const double dev = std::abs(observed - expected);

  std::size_t extreme = 0, total = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != na) continue;
    double w = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) w += ranks[i];
    }
    ++total;
    if (std::abs(w - expected) >= dev - 1e-9) ++extreme;
  }
  return static_cast<double>(extreme) / static_cast<double>(total);
}

/// Number of nonnegative integer M-tuples summing to H, by enumeration.
inline std::size_t lattice_count(std::size_t M, std::size_t H) {
  if (M == 1) return 1;
  std::size_t c = 0;
  for (std::size_t a = 0; a <= H; ++a) c += lattice_count(M - 1, H - a);
  return c;
}

/// Phi(-1) to 17 significant digits.
inline constexpr double kPhiMinusOne = 0.15865525393145707;

/// Closed-form area under f1^4 + f2^4 = 1 on [0,1]: Gamma(5/4)^2 / Gamma(3/2).
inline double quartic_area() { return std::tgamma(1.25) * std::tgamma(1.25) / std::tgamma(1.5); }

}  // namespace oracle
