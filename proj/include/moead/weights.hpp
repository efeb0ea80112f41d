#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "moead/core.hpp"

namespace moead {

/// Smallest lattice resolution H with C(H+M-1, M-1) >= n_requested.
inline std::size_t lattice_divisions(std::size_t M, std::size_t n_requested) {
  std::size_t H = 1;
  while (binomial(H + M - 1, M - 1) < n_requested) ++H;
  return H;
}

/// Das-Dennis simplex-lattice weights.
///
/// The lattice resolution H is the smallest one holding at least
/// `n_requested` vectors, so the returned count can exceed the request
/// (105 for M=3, N=100). Vectors come out in descending lexicographic order:
/// (1,0), (0.5,0.5), (0,1) for M=2, H=2.
inline std::vector<Vec> generate_weights(std::size_t M, std::size_t n_requested) {
  if (M != 2 && M != 3) {
    throw Unsupported("generate_weights: unsupported dimension M=" + std::to_string(M));
  }
  if (n_requested < M) {
    throw InvalidConfig("generate_weights: N must be at least M");
  }
  const std::size_t H = lattice_divisions(M, n_requested);
  const double h = static_cast<double>(H);

  std::vector<Vec> out;
  out.reserve(binomial(H + M - 1, M - 1));
  if (M == 2) {
    for (std::size_t a = H + 1; a-- > 0;) {
      out.push_back({static_cast<double>(a) / h, static_cast<double>(H - a) / h});
    }
  } else {
    for (std::size_t a = H + 1; a-- > 0;) {
      for (std::size_t b = H - a + 1; b-- > 0;) {
        const std::size_t c = H - a - b;
        out.push_back({static_cast<double>(a) / h, static_cast<double>(b) / h,
                       static_cast<double>(c) / h});
      }
    }
  }
  return out;
}

/// T nearest weight vectors (Euclidean) for every vector, ties broken by the
/// lower index. Each list is ordered nearest first, so it starts with i.
inline std::vector<std::vector<std::size_t>> build_neighborhoods(const std::vector<Vec>& vectors,
                                                                 std::size_t T) {
  const std::size_t n = vectors.size();
  if (T < 1 || T > n) {
    throw InvalidConfig("build_neighborhoods: T=" + std::to_string(T) + " outside [1, " +
                        std::to_string(n) + "]");
  }
  std::vector<std::vector<std::size_t>> nb(n);
  std::vector<double> dist(n);
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < vectors[i].size(); ++k) {
        const double d = vectors[i][k] - vectors[j][k];
        s += d * d;
      }
      dist[j] = s;
    }
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return dist[a] < dist[b]; });
    nb[i].assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(T));
  }
  return nb;
}

inline std::size_t default_neighborhood_size(std::size_t n) { return (n + 9) / 10; }

inline WeightSet make_weight_set(std::size_t M, std::size_t n_requested, std::size_t T = 0) {
  WeightSet ws;
  ws.vectors = generate_weights(M, n_requested);
  if (T == 0) T = default_neighborhood_size(ws.vectors.size());
  ws.neighborhoods = build_neighborhoods(ws.vectors, T);
  return ws;
}

}  // namespace moead
