#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wydlab/mean_expr.hpp"

namespace wydlab::engine {

enum class Relation { kLessEq, kGreaterEq, kEqual };
enum class CaseStatus { kProven, kFalse, kOpen };

std::string_view to_string(Relation relation);
std::string_view to_string(CaseStatus status);

/// A real interval with optionally open ends.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool lo_open = false;
  bool hi_open = false;

  [[nodiscard]] bool contains(double v) const noexcept;
};

enum class XDomain { kPositive, kAtLeastOne, kAtMostOne };

/// Validity region in (x, p): an x half-line and a union of p intervals.
/// A p-free region ignores p entirely.
struct Region {
  XDomain x = XDomain::kPositive;
  std::vector<Interval> p;
  bool p_free = false;

  [[nodiscard]] bool contains(double x, double p) const noexcept;
  /// Smallest interval covering every p interval ([0,0] when p-free).
  [[nodiscard]] Interval p_hull() const;
};

struct InequalityCase {
  std::string name;
  std::string family;
  MeanExpr lhs;
  Relation relation = Relation::kLessEq;
  MeanExpr rhs;
  Region region;
  CaseStatus status = CaseStatus::kProven;
  std::string statement;  // short description of where the claim comes from

  /// Signed violation: positive means the relation fails at (x, p).
  [[nodiscard]] double gap(double lhs_value, double rhs_value) const noexcept;
  [[nodiscard]] std::string formula() const;
};

/// The full catalog, in a fixed order. Built once; immutable.
const std::vector<InequalityCase>& builtin_catalog();

/// Catalog entry with a given name, or nullptr.
const InequalityCase* find_case(std::string_view name);

/// Cases whose name or family equals `selector`; empty if none.
std::vector<InequalityCase> select_cases(std::string_view selector);

/// An r-chain case with a custom shift r >= 1/4 (the catalog uses r = 1/4).
std::vector<InequalityCase> r_chain_cases(double r);

}  // namespace wydlab::engine
