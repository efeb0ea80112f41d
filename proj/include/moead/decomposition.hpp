#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <string>

#include "moead/core.hpp"

namespace moead {

struct ScalarizerParams {
  Decomposition kind = Decomposition::MTCH;
  double theta = 5.0;          // PBI penalty
  double weight_floor = 1e-6;  // replaces smaller weight components

  void validate() const {
    if (!(theta > 0.0)) throw InvalidConfig("scalarizer: theta must be positive");
    if (!(weight_floor > 0.0 && weight_floor <= 1e-3)) {
      throw InvalidConfig("scalarizer: weight_floor must lie in (0, 1e-3]");
    }
  }
};

/// Distances of f from the line Z + t*W: d1 along the unit direction W/|W|
/// (signed), d2 perpendicular to it.
struct PbiParts {
  double d1 = 0.0;
  double d2 = 0.0;
};

inline PbiParts pbi_parts(std::span<const double> f, std::span<const double> w,
                          std::span<const double> z, double weight_floor = 1e-6) {
  const std::size_t m = f.size();
  double norm2 = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double wi = std::max(w[i], weight_floor);
    norm2 += wi * wi;
  }
  const double norm = std::sqrt(norm2);
  double d1 = 0.0;
  for (std::size_t i = 0; i < m; ++i) d1 += (f[i] - z[i]) * std::max(w[i], weight_floor) / norm;
  double d2sq = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double r = f[i] - (z[i] + d1 * std::max(w[i], weight_floor) / norm);
    d2sq += r * r;
  }
  return {d1, std::sqrt(d2sq)};
}

/// Scalar fitness g(f | W, Z) to be minimized.
///
///   WS   = sum_i W_i f_i
///   TCH  = max_i W_i |f_i - z_i|
///   MTCH = max_i (f_i - z_i) / W_i
///   PBI  = d1 + theta d2, measured along the unit direction of W
///
/// Weight components below `weight_floor` are raised to it first.
inline double scalarize(std::span<const double> f, std::span<const double> w,
                        std::span<const double> z, const ScalarizerParams& params) {
  const std::size_t m = f.size();
  if (w.size() != m || z.size() != m) {
    throw std::invalid_argument("scalarize: dimension mismatch (f=" + std::to_string(m) +
                                ", W=" + std::to_string(w.size()) + ", Z=" +
                                std::to_string(z.size()) + ")");
  }
  require_finite(f, "scalarize f");
  require_finite(w, "scalarize W");
  require_finite(z, "scalarize Z");

  const double floor = params.weight_floor;
  switch (params.kind) {
    case Decomposition::WS: {
      double s = 0.0;
      for (std::size_t i = 0; i < m; ++i) s += std::max(w[i], floor) * f[i];
      return s;
    }
    case Decomposition::TCH: {
      double g = -std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < m; ++i) g = std::max(g, std::max(w[i], floor) * std::abs(f[i] - z[i]));
      return g;
    }
    case Decomposition::MTCH: {
      double g = -std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < m; ++i) g = std::max(g, (f[i] - z[i]) / std::max(w[i], floor));
      return g;
    }
    case Decomposition::PBI: {
      const PbiParts p = pbi_parts(f, w, z, floor);
      return p.d1 + params.theta * p.d2;
    }
  }
  throw std::invalid_argument("scalarize: unknown decomposition");
}

}  // namespace moead
