#pragma once

#include <cctype>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace moead {

using Vec = std::vector<double>;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

/// A run or experiment configuration that violates its contract.
class InvalidConfig : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A request outside what the library implements (e.g. M > 3 hypervolume).
class Unsupported : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Non-finite or otherwise unusable numeric input.
class NumericError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline void require_finite(std::span<const double> v, const char* what) {
  for (double d : v) {
    if (!std::isfinite(d)) throw NumericError(std::string(what) + ": non-finite value");
  }
}

// ---------------------------------------------------------------------------
// Enumerations
// ---------------------------------------------------------------------------

enum class ProblemId {
  IMOP1, IMOP2, IMOP3, IMOP4, IMOP5, IMOP6, IMOP7, IMOP8,
  DTLZ1, DTLZ2, DTLZ3, DTLZ4,
  WFG1, WFG2, WFG3, WFG4,
};

enum class Decomposition { WS, TCH, MTCH, PBI };

enum class RefStrategy { Min, TrueIdeal, DRP, NormW };

inline constexpr ProblemId kAllProblems[] = {
    ProblemId::IMOP1, ProblemId::IMOP2, ProblemId::IMOP3, ProblemId::IMOP4,
    ProblemId::IMOP5, ProblemId::IMOP6, ProblemId::IMOP7, ProblemId::IMOP8,
    ProblemId::DTLZ1, ProblemId::DTLZ2, ProblemId::DTLZ3, ProblemId::DTLZ4,
    ProblemId::WFG1,  ProblemId::WFG2,  ProblemId::WFG3,  ProblemId::WFG4,
};

inline std::string_view to_string(ProblemId id) {
  switch (id) {
    case ProblemId::IMOP1: return "imop1";
    case ProblemId::IMOP2: return "imop2";
    case ProblemId::IMOP3: return "imop3";
    case ProblemId::IMOP4: return "imop4";
    case ProblemId::IMOP5: return "imop5";
    case ProblemId::IMOP6: return "imop6";
    case ProblemId::IMOP7: return "imop7";
    case ProblemId::IMOP8: return "imop8";
    case ProblemId::DTLZ1: return "dtlz1";
    case ProblemId::DTLZ2: return "dtlz2";
    case ProblemId::DTLZ3: return "dtlz3";
    case ProblemId::DTLZ4: return "dtlz4";
    case ProblemId::WFG1: return "wfg1";
    case ProblemId::WFG2: return "wfg2";
    case ProblemId::WFG3: return "wfg3";
    case ProblemId::WFG4: return "wfg4";
  }
  return "?";
}

inline std::string_view to_string(Decomposition d) {
  switch (d) {
    case Decomposition::WS: return "ws";
    case Decomposition::TCH: return "tch";
    case Decomposition::MTCH: return "mtch";
    case Decomposition::PBI: return "pbi";
  }
  return "?";
}

inline std::string_view to_string(RefStrategy s) {
  switch (s) {
    case RefStrategy::Min: return "min";
    case RefStrategy::TrueIdeal: return "trueideal";
    case RefStrategy::DRP: return "drp";
    case RefStrategy::NormW: return "normw";
  }
  return "?";
}

namespace detail {
inline std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}
}  // namespace detail

inline std::optional<ProblemId> problem_from_string(std::string_view s) {
  const std::string key = detail::lower(s);
  for (ProblemId id : kAllProblems) {
    if (to_string(id) == key) return id;
  }
  return std::nullopt;
}

inline std::optional<Decomposition> decomposition_from_string(std::string_view s) {
  const std::string key = detail::lower(s);
  for (auto d : {Decomposition::WS, Decomposition::TCH, Decomposition::MTCH, Decomposition::PBI}) {
    if (to_string(d) == key) return d;
  }
  if (key == "m-tch") return Decomposition::MTCH;
  return std::nullopt;
}

inline std::optional<RefStrategy> strategy_from_string(std::string_view s) {
  const std::string key = detail::lower(s);
  for (auto r : {RefStrategy::Min, RefStrategy::TrueIdeal, RefStrategy::DRP, RefStrategy::NormW}) {
    if (to_string(r) == key) return r;
  }
  if (key == "ideal" || key == "true_ideal") return RefStrategy::TrueIdeal;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Randomness
// ---------------------------------------------------------------------------

/// Per-run random stream.
///
/// Backed by std::mt19937_64, whose output sequence is fixed by the standard,
/// so a seed reproduces the same draws on every conforming toolchain. The
/// std distributions are implementation-defined and are not used; reals are
/// formed from the top 53 bits and integers by rejection sampling.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform real in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform real in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, n). n must be positive.
  std::size_t below(std::size_t n) {
    const std::uint64_t bound = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t r = engine_();
    while (r >= limit) r = engine_();
    return static_cast<std::size_t>(r % bound);
  }

  bool coin() { return (engine_() >> 63) != 0; }

  std::uint64_t next_u64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// 64-bit finalizer from SplitMix64; used to derive independent seeds.
inline constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// FNV-1a over bytes; stable across platforms and runs.
inline constexpr std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

// ---------------------------------------------------------------------------
// Domain types
// ---------------------------------------------------------------------------

struct Solution {
  Vec x;  // decision vector, length D
  Vec f;  // objective vector, length M (minimized)
};

/// Index i is permanently paired with weight vector i.
using Population = std::vector<Solution>;

struct WeightSet {
  std::vector<Vec> vectors;
  std::vector<std::vector<std::size_t>> neighborhoods;

  std::size_t size() const { return vectors.size(); }
};

struct OperatorParams {
  double crossover_prob = 1.0;
  double crossover_eta = 20.0;
  /// Per-variable mutation probability; a negative value means 1/D.
  double mutation_prob = -1.0;
  double mutation_eta = 20.0;

  double mutation_prob_for(std::size_t D) const {
    return mutation_prob < 0.0 ? 1.0 / static_cast<double>(D) : mutation_prob;
  }
};

struct RunConfig {
  ProblemId problem = ProblemId::IMOP2;
  std::size_t N = 100;  // requested; snapped up to a simplex-lattice size
  std::size_t M = 2;
  std::size_t D = 10;
  std::size_t max_fe = 20000;
  std::size_t T = 0;  // 0 selects ceil(N_effective / 10)
  Decomposition decomposition = Decomposition::MTCH;
  double theta = 5.0;
  RefStrategy strategy = RefStrategy::Min;
  std::uint64_t seed = 1;
  OperatorParams ops;
  std::size_t record_interval = 100;
  bool audit = false;

  std::size_t imop_k = 5;
  std::size_t wfg_k = 4;
  double drp_eps_ini = 1.0;
  double drp_eps_end = 0.001;
};

struct Snapshot {
  std::size_t fe = 0;
  double hv = 0.0;
  double igd = 0.0;
};

/// Neighbor comparisons and replacements performed in one sweep over all
/// subproblems.
struct GenerationAudit {
  std::size_t generation = 0;
  std::size_t fe_end = 0;
  std::size_t comparisons = 0;
  std::size_t replacements = 0;

  double rate() const {
    return comparisons == 0 ? 0.0 : static_cast<double>(replacements) / static_cast<double>(comparisons);
  }
};

struct RunResult {
  RunConfig config;  // echo, with N and T resolved
  std::vector<Snapshot> history;
  Population final_population;
  std::size_t final_fe = 0;
  double wall_time = 0.0;  // seconds
  std::optional<std::vector<GenerationAudit>> audit;
};

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace moead
