#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "wydlab/catalog.hpp"

namespace wydlab::engine {

/// Scan configuration: log-spaced x, linearly spaced p.
struct GridSpec {
  double x_min = 1e-4;
  double x_max = 1e4;
  std::size_t x_points = 400;
  double p_min = 0.0;
  double p_max = 1.0;
  std::size_t p_points = 65;
  double tolerance = 1e-10;
  /// Insert x = 1 (the equality locus of every catalog case) when it lies
  /// strictly inside (x_min, x_max) and is not already a node.
  bool anchor_unity = true;

  /// Throws ConfigError unless 0 < x_min < x_max, x_points >= 2,
  /// p_min <= p_max, p_points >= 1 (>= 2 when p_min < p_max), tolerance > 0.
  void validate() const;
  [[nodiscard]] std::vector<double> x_values() const;
  [[nodiscard]] std::vector<double> p_values() const;
};

/// Default grid for a case: x in [1e-4, 1e4] (400 log points plus x = 1),
/// p over the hull of the case region with 65 points (one point if p-free).
GridSpec default_grid(const InequalityCase& c);

struct GridPoint {
  double x = 0.0;
  double p = 0.0;
};

struct ViolationReport {
  std::string case_name;
  CaseStatus status = CaseStatus::kProven;
  GridSpec grid;
  /// lhs - rhs (or rhs - lhs for >=) at the worst point; positive = violation.
  double max_signed_gap = 0.0;
  /// max_signed_gap / scale, the quantity that is maximized.
  double max_relative_gap = 0.0;
  /// max(1, |lhs|, |rhs|) at the argmax.
  double scale = 1.0;
  GridPoint argmax;
  /// No point violates the relation beyond tolerance.
  bool pass = false;
  std::size_t samples_evaluated = 0;
  std::size_t skipped = 0;
};

/// Whether the grid outcome agrees with the catalog status
/// (proven -> pass, false -> violation found, open -> always).
bool matches_status(const ViolationReport& report);

/// Scans every in-region grid point. Ties in the maximum are broken toward
/// the smallest x, then the smallest p. Throws VacuousGridError if no grid
/// point lies in the region.
ViolationReport verify(const InequalityCase& c, const GridSpec& grid);

struct SharpnessReport {
  std::string case_name;
  double min_abs_gap = 0.0;
  GridPoint argmin;
  /// max over the grid of |gap| / max(1, |lhs|, |rhs|)
  double max_abs_relative_gap = 0.0;
  std::size_t samples_evaluated = 0;
};

/// Where the two sides come closest (for proven cases: the x = 1 line).
SharpnessReport sharpness(const InequalityCase& c, const GridSpec& grid);

/// Writes `x,p,lhs,rhs,gap` and one row per in-region point (x-major, then
/// p) with 17 significant digits. Returns the row count. Throws
/// std::ios_base::failure if the stream goes bad.
std::size_t emit_csv(const InequalityCase& c, const GridSpec& grid, std::ostream& sink);

struct OrderingSample {
  double x = 0.0;
  /// G_hat_p(x,1) - K(x)^{-p(1-p)} W_p(x,1)
  double difference = 0.0;
};

struct NoOrderingWitness {
  double p = 0.0;
  /// Largest positive difference on the grid, if any.
  std::optional<OrderingSample> ghat_above;
  /// Most negative difference on the grid, if any.
  std::optional<OrderingSample> ghat_below;

  [[nodiscard]] bool found() const { return ghat_above && ghat_below; }
};

/// Looks for x values on the grid where G_hat_p and K^{-p(1-p)} W_p are
/// ordered both ways. Only the x axis of the grid is used. Requires
/// 1/2 < p < 1 (DomainError otherwise).
NoOrderingWitness no_ordering_witness(double p, const GridSpec& grid);

}  // namespace wydlab::engine
