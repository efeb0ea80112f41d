#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "moead/core.hpp"

namespace moead {

inline void validate(const OperatorParams& p) {
  if (!(p.crossover_prob >= 0.0 && p.crossover_prob <= 1.0)) {
    throw InvalidConfig("operators: crossover_prob must lie in [0,1]");
  }
  if (!(p.crossover_eta > 0.0)) throw InvalidConfig("operators: crossover_eta must be positive");
  if (!(p.mutation_prob <= 1.0)) throw InvalidConfig("operators: mutation_prob must be <= 1");
  if (!(p.mutation_eta > 0.0)) throw InvalidConfig("operators: mutation_eta must be positive");
}

/// Two distinct members of `nb`, each position equally likely.
inline std::pair<std::size_t, std::size_t> select_parents(std::span<const std::size_t> nb, Rng& rng) {
  if (nb.size() < 2) throw std::invalid_argument("select_parents: neighborhood needs at least 2 members");
  const std::size_t a = rng.below(nb.size());
  std::size_t b = rng.below(nb.size() - 1);
  if (b >= a) ++b;
  return {nb[a], nb[b]};
}

/// SBX spread factor for a uniform draw u in [0,1).
inline double sbx_beta(double u, double eta) {
  if (u <= 0.5) return std::pow(2.0 * u, 1.0 / (eta + 1.0));
  return std::pow(2.0 - 2.0 * u, -1.0 / (eta + 1.0));
}

/// Simulated binary crossover returning the first child only.
///
/// Per variable: spread beta from the polynomial distribution, random sign,
/// and with probability 1/2 the variable is inherited unchanged (beta = 1).
/// Child = (x1+x2)/2 + beta (x1-x2)/2, clamped to the box.
inline Vec sbx_crossover(std::span<const double> x1, std::span<const double> x2, std::span<const double> lower,
                         std::span<const double> upper, const OperatorParams& params, Rng& rng) {
  Vec child(x1.begin(), x1.end());
  if (!(rng.uniform() < params.crossover_prob)) return child;
  for (std::size_t i = 0; i < child.size(); ++i) {
    double beta = sbx_beta(rng.uniform(), params.crossover_eta);
    if (rng.coin()) beta = -beta;
    if (rng.uniform() < 0.5) beta = 1.0;
    const double v = 0.5 * (x1[i] + x2[i]) + 0.5 * beta * (x1[i] - x2[i]);
    child[i] = std::clamp(v, lower[i], upper[i]);
  }
  return child;
}

/// Polynomial mutation, each variable independently with probability
/// `params.mutation_prob_for(D)`.
inline void polynomial_mutation(std::span<double> x, std::span<const double> lower, std::span<const double> upper,
                                const OperatorParams& params, Rng& rng) {
  const double prob = params.mutation_prob_for(x.size());
  const double eta = params.mutation_eta;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const bool site = rng.uniform() < prob;
    const double mu = rng.uniform();
    if (!site) continue;
    const double range = upper[i] - lower[i];
    if (range <= 0.0) continue;
    double v = x[i];
    if (mu <= 0.5) {
      const double d = (v - lower[i]) / range;
      v += range * (std::pow(2.0 * mu + (1.0 - 2.0 * mu) * std::pow(1.0 - d, eta + 1.0), 1.0 / (eta + 1.0)) - 1.0);
    } else {
      const double d = (upper[i] - v) / range;
      v += range * (1.0 - std::pow(2.0 * (1.0 - mu) + 2.0 * (mu - 0.5) * std::pow(1.0 - d, eta + 1.0),
                                   1.0 / (eta + 1.0)));
    }
    x[i] = std::clamp(v, lower[i], upper[i]);
  }
}

/// One offspring decision vector from two parents: SBX then mutation.
inline Vec make_offspring(std::span<const double> p1, std::span<const double> p2, std::span<const double> lower,
                          std::span<const double> upper, const OperatorParams& params, Rng& rng) {
  Vec child = sbx_crossover(p1, p2, lower, upper, params, rng);
  polynomial_mutation(child, lower, upper, params, rng);
  return child;
}

}  // namespace moead
