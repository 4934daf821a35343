#include "wydlab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ios>

#include "wydlab/errors.hpp"
#include "wydlab/scalar_means.hpp"

namespace wydlab::engine {
namespace {

double point_scale(double lhs, double rhs) {
  return std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Sample {
  double x;
  double p;
  double lhs;
  double rhs;
  double gap;
  double scale;
};

// Calls `visit(sample)` for every in-region point, x-major; returns the
// number of skipped (out-of-region) points.
template <class Visit>
std::size_t scan(const InequalityCase& c, const GridSpec& grid, Visit&& visit) {
  grid.validate();
  const auto xs = grid.x_values();
  const auto ps = c.region.p_free ? std::vector<double>{grid.p_min} : grid.p_values();
  std::size_t skipped = 0;
  for (double x : xs) {
    for (double p : ps) {
      if (!c.region.contains(x, p)) {
        ++skipped;
        continue;
      }
      const double lhs = evaluate(c.lhs, x, p);
      const double rhs = evaluate(c.rhs, x, p);
      if (!std::isfinite(lhs) || !std::isfinite(rhs)) {
        throw NumericError("non-finite value in case " + c.name + " at x=" + g17(x) +
                           " p=" + g17(p));
      }
      visit(Sample{x, p, lhs, rhs, c.gap(lhs, rhs), point_scale(lhs, rhs)});
    }
  }
  return skipped;
}

}  // namespace

void GridSpec::validate() const {
  if (!(x_min > 0.0) || !(x_max > x_min) || !std::isfinite(x_max)) {
    throw ConfigError("grid requires 0 < x_min < x_max");
  }
  if (x_points < 2) throw ConfigError("grid requires x_points >= 2");
  if (!std::isfinite(p_min) || !std::isfinite(p_max) || p_min > p_max) {
    throw ConfigError("grid requires finite p_min <= p_max");
  }
  if (p_points < 1 || (p_min < p_max && p_points < 2)) {
    throw ConfigError("grid requires p_points >= 2 for a non-degenerate p range");
  }
  if (!(tolerance > 0.0)) throw ConfigError("grid requires tolerance > 0");
}

std::vector<double> GridSpec::x_values() const {
  std::vector<double> xs(x_points);
  const double lo = std::log(x_min);
  const double step = (std::log(x_max) - lo) / static_cast<double>(x_points - 1);
  for (std::size_t k = 0; k < x_points; ++k) {
    xs[k] = std::exp(lo + step * static_cast<double>(k));
  }
  xs.front() = x_min;
  xs.back() = x_max;
  if (anchor_unity && x_min < 1.0 && x_max > 1.0 &&
      std::find(xs.begin(), xs.end(), 1.0) == xs.end()) {
    xs.insert(std::upper_bound(xs.begin(), xs.end(), 1.0), 1.0);
  }
  return xs;
}

std::vector<double> GridSpec::p_values() const {
  if (p_points == 1 || p_min == p_max) return {p_min};
  std::vector<double> ps(p_points);
  const double step = (p_max - p_min) / static_cast<double>(p_points - 1);
  for (std::size_t k = 0; k < p_points; ++k) {
    ps[k] = p_min + step * static_cast<double>(k);
  }
  ps.back() = p_max;
  return ps;
}

GridSpec default_grid(const InequalityCase& c) {
  GridSpec g;
  if (c.region.p_free) {
    g.p_min = g.p_max = 0.0;
    g.p_points = 1;
  } else {
    const Interval hull = c.region.p_hull();
    g.p_min = hull.lo;
    g.p_max = hull.hi;
  }
  return g;
}

bool matches_status(const ViolationReport& report) {
  switch (report.status) {
    case CaseStatus::kProven: return report.pass;
    case CaseStatus::kFalse: return !report.pass;
    case CaseStatus::kOpen: return true;
  }
  return false;
}

ViolationReport verify(const InequalityCase& c, const GridSpec& grid) {
  ViolationReport r;
  r.case_name = c.name;
  r.status = c.status;
  r.grid = grid;
  bool any = false;
  r.skipped = scan(c, grid, [&](const Sample& s) {
    ++r.samples_evaluated;
    const double rel = s.gap / s.scale;
    if (!any || rel > r.max_relative_gap) {
      any = true;
      r.max_relative_gap = rel;
      r.max_signed_gap = s.gap;
      r.scale = s.scale;
      r.argmax = {s.x, s.p};
    }
  });
  if (!any) {
    throw VacuousGridError("grid has no point inside the region of " + c.name);
  }
  r.pass = r.max_signed_gap <= grid.tolerance * r.scale;
  return r;
}

SharpnessReport sharpness(const InequalityCase& c, const GridSpec& grid) {
  SharpnessReport r;
  r.case_name = c.name;
  bool any = false;
  scan(c, grid, [&](const Sample& s) {
    ++r.samples_evaluated;
    const double a = std::abs(s.lhs - s.rhs);
    if (!any || a < r.min_abs_gap) {
      r.min_abs_gap = a;
      r.argmin = {s.x, s.p};
    }
    r.max_abs_relative_gap = std::max(r.max_abs_relative_gap, a / s.scale);
    any = true;
  });
  if (!any) {
    throw VacuousGridError("grid has no point inside the region of " + c.name);
  }
  return r;
}

std::size_t emit_csv(const InequalityCase& c, const GridSpec& grid, std::ostream& sink) {
  const auto old_mask = sink.exceptions();
  sink.exceptions(std::ios_base::badbit | std::ios_base::failbit);
  std::size_t rows = 0;
  try {
    sink << "x,p,lhs,rhs,gap\n";
    scan(c, grid, [&](const Sample& s) {
      sink << g17(s.x) << ',' << g17(s.p) << ',' << g17(s.lhs) << ',' << g17(s.rhs) << ','
           << g17(s.gap) << '\n';
      ++rows;
    });
    sink.flush();
  } catch (...) {
    sink.exceptions(old_mask);
    throw;
  }
  sink.exceptions(old_mask);
  return rows;
}

NoOrderingWitness no_ordering_witness(double p, const GridSpec& grid) {
  if (!(p > 0.5 && p < 1.0)) {
    throw DomainError("no_ordering_witness requires 1/2 < p < 1");
  }
  grid.validate();
  NoOrderingWitness w;
  w.p = p;
  const double q = p * (1.0 - p);
  for (double x : grid.x_values()) {
    const scalar::PositivePair pair(x, 1.0);
    const double ghat = scalar::g_hat(p, pair);
    const double scaled_w = std::pow(scalar::kantorovich(x), -q) * scalar::wyd(p, pair);
    const double d = ghat - scaled_w;
    const double noise = grid.tolerance * point_scale(ghat, scaled_w);
    if (d > noise && (!w.ghat_above || d > w.ghat_above->difference)) {
      w.ghat_above = OrderingSample{x, d};
    }
    if (d < -noise && (!w.ghat_below || d < w.ghat_below->difference)) {
      w.ghat_below = OrderingSample{x, d};
    }
  }
  return w;
}

}  // namespace wydlab::engine
