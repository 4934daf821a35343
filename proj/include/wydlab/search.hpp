#pragma once

#include <cstdint>
#include <optional>

#include "wydlab/catalog.hpp"
#include "wydlab/verify.hpp"

namespace wydlab::engine {

struct SearchConfig {
  InequalityCase target;
  /// Hard cap on (lhs, rhs) evaluations.
  std::uint64_t budget = 1'000'000;
  std::uint64_t seed = 0x5eed;
  /// Coarse scan; only its x range, p range and point counts are used
  /// (tolerance is taken from `tolerance` below).
  GridSpec coarse{1e-8, 1e8, 400, 0.0, 1.0, 201, 1e-10, false};
  /// Uniform random probes in (log x, p), drawn from `seed` after the scan.
  std::uint64_t random_probes = 20'000;
  /// Number of best coarse/random points refined locally.
  int starts = 4;
  /// Alternating (log x, p) golden-section sweeps per start.
  int refine_rounds = 8;
  /// Golden-section iterations per coordinate sweep.
  int golden_iterations = 40;
  /// A point counts as a counterexample when gap / scale exceeds this.
  double tolerance = 1e-10;

  /// Throws ConfigError on an invalid grid or budget < coarse grid size.
  void validate() const;
};

/// Default configuration for a catalog case: x in [1e-8, 1e8], p over the
/// hull of its region.
SearchConfig default_search(const InequalityCase& target);

struct SearchPoint {
  double x = 0.0;
  double p = 0.0;
  /// Signed gap (positive = violation) and its relative size.
  double gap = 0.0;
  double relative_gap = 0.0;
};

struct SearchOutcome {
  /// Set when best.relative_gap > tolerance.
  std::optional<SearchPoint> witness;
  /// Best point seen, whether or not it is a violation.
  SearchPoint best;
  std::uint64_t evaluations = 0;
};

/// Coarse scan of the target region, seeded random probes, then
/// coordinate-wise golden-section refinement (log x, then p) from the best
/// points. Deterministic for a fixed configuration; never evaluates more
/// than `budget` points.
SearchOutcome search_counterexample(const SearchConfig& config);

}  // namespace wydlab::engine
