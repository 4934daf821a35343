#include "wydlab/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wydlab/errors.hpp"

namespace wydlab::engine {

std::string_view to_string(Relation relation) {
  switch (relation) {
    case Relation::kLessEq: return "<=";
    case Relation::kGreaterEq: return ">=";
    case Relation::kEqual: return "==";
  }
  return "?";
}

std::string_view to_string(CaseStatus status) {
  switch (status) {
    case CaseStatus::kProven: return "proven";
    case CaseStatus::kFalse: return "false";
    case CaseStatus::kOpen: return "open";
  }
  return "?";
}

bool Interval::contains(double v) const noexcept {
  const bool above = lo_open ? v > lo : v >= lo;
  const bool below = hi_open ? v < hi : v <= hi;
  return above && below;
}

bool Region::contains(double x, double p) const noexcept {
  if (!(x > 0.0)) return false;
  if (this->x == XDomain::kAtLeastOne && x < 1.0) return false;
  if (this->x == XDomain::kAtMostOne && x > 1.0) return false;
  if (p_free) return true;
  return std::any_of(this->p.begin(), this->p.end(),
                     [p](const Interval& i) { return i.contains(p); });
}

Interval Region::p_hull() const {
  if (p_free || p.empty()) return {0.0, 0.0};
  Interval hull = p.front();
  for (const auto& i : p) {
    if (i.lo < hull.lo) hull.lo = i.lo;
    if (i.hi > hull.hi) hull.hi = i.hi;
  }
  hull.lo_open = false;
  hull.hi_open = false;
  return hull;
}

double InequalityCase::gap(double lhs_value, double rhs_value) const noexcept {
  switch (relation) {
    case Relation::kLessEq: return lhs_value - rhs_value;
    case Relation::kGreaterEq: return rhs_value - lhs_value;
    case Relation::kEqual: return std::abs(lhs_value - rhs_value);
  }
  return 0.0;
}

std::string InequalityCase::formula() const {
  return describe(lhs) + " " + std::string(to_string(relation)) + " " + describe(rhs);
}

namespace {

MeanExpr e(ExprTag tag, double param = 0.0) { return {tag, param}; }

Region any_x(std::vector<Interval> p) { return {XDomain::kPositive, std::move(p), false}; }
Region p_free(XDomain x = XDomain::kPositive) { return {x, {}, true}; }

const Interval kUnit{0.0, 1.0};
const Interval kLowerHalf{0.0, 0.5};

InequalityCase make(std::string name, std::string family, MeanExpr lhs, Relation rel,
                    MeanExpr rhs, Region region, CaseStatus status, std::string statement) {
  return {std::move(name), std::move(family), lhs, rel, rhs, std::move(region), status,
          std::move(statement)};
}

std::vector<InequalityCase> build() {
  using T = ExprTag;
  constexpr auto le = Relation::kLessEq;
  constexpr auto ge = Relation::kGreaterEq;
  constexpr auto eq = Relation::kEqual;
  constexpr auto proven = CaseStatus::kProven;
  std::vector<InequalityCase> c;

  const std::string basic = "known chain H <= G <= L <= W_p <= W_{1/2} <= A";
  c.push_back(make("chain_basic.H_le_G", "chain_basic", e(T::kH), le, e(T::kG),
                   p_free(), proven, basic));
  c.push_back(make("chain_basic.G_le_L", "chain_basic", e(T::kG), le, e(T::kL),
                   p_free(), proven, basic));
  c.push_back(make("chain_basic.L_le_W", "chain_basic", e(T::kL), le, e(T::kWp),
                   any_x({kUnit}), proven, basic));
  c.push_back(make("chain_basic.W_le_Whalf", "chain_basic", e(T::kWp), le, e(T::kWHalf),
                   any_x({kUnit}), proven, basic));
  c.push_back(make("chain_basic.Whalf_le_A", "chain_basic", e(T::kWHalf), le, e(T::kA),
                   p_free(), proven, basic));

  const std::string tlog = "simple bounds from ln_{-t} x <= log x <= ln_t x";
  c.push_back(make("wyd_Lsq_upper", "wyd_Lsq_upper", e(T::kWp), le, e(T::kLSquared),
                   {XDomain::kAtLeastOne, {kUnit}, false}, proven, tlog));
  c.push_back(make("wyd_Lsq_lower", "wyd_Lsq_lower", e(T::kWp), ge, e(T::kLSquared),
                   {XDomain::kAtMostOne, {kUnit}, false}, proven, tlog));

  const std::string hh = "Hermite-Hadamard bounds on ln_p x";
  const Region x_ge_1{XDomain::kAtLeastOne, {kUnit}, false};
  const Region x_le_1{XDomain::kAtMostOne, {kUnit}, false};
  c.push_back(make("hh_bounds.lower_x_ge_1", "hh_bounds", e(T::kHermiteLower), le, e(T::kWp),
                   x_ge_1, proven, hh));
  c.push_back(make("hh_bounds.upper_x_ge_1", "hh_bounds", e(T::kWp), le, e(T::kHermiteUpper),
                   x_ge_1, proven, hh));
  // For x <= 1 both t-logarithms are negative, so the concave Hermite-Hadamard
  // bounds on |ln_p x| give the same two-sided bound on W_p, not its reverse.
  c.push_back(make("hh_bounds.lower_x_le_1", "hh_bounds", e(T::kHermiteLower), le, e(T::kWp),
                   x_le_1, proven, hh + " (same direction for x <= 1)"));
  c.push_back(make("hh_bounds.upper_x_le_1", "hh_bounds", e(T::kWp), le, e(T::kHermiteUpper),
                   x_le_1, proven, hh + " (same direction for x <= 1)"));
  c.push_back(make("hh_bounds.reversed_lower_x_le_1", "hh_bounds", e(T::kHermiteLower), ge,
                   e(T::kWp), x_le_1, CaseStatus::kFalse,
                   hh + ", literally reversed for x <= 1"));
  c.push_back(make("hh_bounds.reversed_upper_x_le_1", "hh_bounds", e(T::kWp), ge,
                   e(T::kHermiteUpper), x_le_1, CaseStatus::kFalse,
                   hh + ", literally reversed for x <= 1"));

  for (auto& r : r_chain_cases(0.25)) c.push_back(std::move(r));

  const std::string diff = "difference-type reverse inequality of L <= W_p";
  c.push_back(make("thm_diff.W_le_bound", "thm_diff", e(T::kWp), le, e(T::kDifferenceBound),
                   any_x({kUnit}), proven, diff));
  c.push_back(make("thm_diff.bound_le_A", "thm_diff", e(T::kDifferenceBound), le, e(T::kA),
                   any_x({kUnit}), proven, diff));

  const std::string specht = "ratio chain through the Specht ratio";
  c.push_back(make("specht_chain.W_le_Bhalf", "specht_chain", e(T::kWp), le, e(T::kBHalf),
                   any_x({kUnit}), proven, specht));
  c.push_back(make("specht_chain.Bhalf_le_A", "specht_chain", e(T::kBHalf), le, e(T::kA),
                   p_free(), proven, specht));
  c.push_back(make("specht_chain.A_le_SG", "specht_chain", e(T::kA), le, e(T::kSpechtTimesG),
                   p_free(), proven, specht));
  c.push_back(make("specht_chain.SG_le_SL", "specht_chain", e(T::kSpechtTimesG), le,
                   e(T::kSpechtTimesL), p_free(), proven, specht));

  const std::string kant = "ratio chain through K(sqrt x)";
  c.push_back(make("kant_sqrt_chain.W_le_Bhalf", "kant_sqrt_chain", e(T::kWp), le,
                   e(T::kBHalf), any_x({kUnit}), proven, kant));
  c.push_back(make("kant_sqrt_chain.Bhalf_eq_KsqrtSqrt", "kant_sqrt_chain", e(T::kBHalf), eq,
                   e(T::kKSqrtTimesSqrt), p_free(), proven, kant));
  c.push_back(make("kant_sqrt_chain.KsqrtSqrt_le_KsqrtL", "kant_sqrt_chain",
                   e(T::kKSqrtTimesSqrt), le, e(T::kKSqrtTimesL), p_free(), proven, kant));

  c.push_back(make("specht_sqrt_reverse", "specht_sqrt_reverse", e(T::kBHalf), ge,
                   e(T::kSSqrtTimesSqrt), p_free(), proven,
                   "((sqrt x + 1)/2)^2 dominates S(sqrt x) sqrt x"));

  c.push_back(make("thm_ratio", "thm_ratio", e(T::kWp), le, e(T::kKPowTimesL),
                   any_x({kUnit}), proven, "ratio-type reverse inequality of L <= W_p"));

  const std::string logk = "relative defects of L bounded by log K(x)";
  c.push_back(make("logk_bounds.defect_le_rel_arith", "logk_bounds", e(T::kRelLogGeoDefect), le,
                   e(T::kRelArithDefect), p_free(), proven, logk));
  c.push_back(make("logk_bounds.rel_arith_le_logK", "logk_bounds", e(T::kRelArithDefect), le, e(T::kLogK),
                   p_free(), proven, logk));
  c.push_back(make("logk_form_ratio", "logk_form_ratio", e(T::kLogKFormRatio), ge, e(T::kZero),
                   p_free(), proven, logk + ", logarithmic form of (A-L)/L <= log K"));
  c.push_back(make("logk_form_square", "logk_form_square", e(T::kLogKFormSquare), le, e(T::kZero),
                   p_free(), proven, logk + ", logarithmic form of (L^2-G^2)/(2L^2) <= log K"));

  c.push_back(make("wyd_ge_ahat", "wyd_ge_ahat", e(T::kWp), ge, e(T::kAHat), any_x({kLowerHalf}),
                   proven, "W_p dominates A_hat_p for p in [0, 1/2]"));
  c.push_back(make("wyd_le_ahat", "wyd_le_ahat", e(T::kWp), le, e(T::kAHat),
                   any_x({{-1.0, 0.0}, {0.5, 2.0}}), proven,
                   "A_hat_p dominates W_p for p outside (0, 1/2)"));

  c.push_back(make("ghat_ge_kwyd", "ghat_ge_kwyd", e(T::kGHat), ge, e(T::kKInvPowTimesW),
                   any_x({kLowerHalf}), proven,
                   "G_hat_p dominates K^{-p(1-p)} W_p for p in [0, 1/2]"));
  c.push_back(make("ghat_le_kwyd", "ghat_le_kwyd", e(T::kGHat), le, e(T::kKInvPowTimesW),
                   any_x({{-1.0, 0.0}, {1.0, 2.0}}), proven,
                   "K^{-p(1-p)} W_p dominates G_hat_p for p <= 0 or p >= 1"));

  const std::string combined = "combined bounds of L for p in [0, 1/2]";
  c.push_back(make("lower_half_chain.KW_le_Ghat", "lower_half_chain", e(T::kKInvPowTimesW),
                   le, e(T::kGHat), any_x({kLowerHalf}), proven, combined));
  c.push_back(make("lower_half_chain.Ghat_le_L", "lower_half_chain", e(T::kGHat), le,
                   e(T::kL), any_x({kLowerHalf}), proven, combined));
  c.push_back(make("lower_half_chain.L_le_Ahat", "lower_half_chain", e(T::kL), le,
                   e(T::kAHat), any_x({kLowerHalf}), proven, combined));
  c.push_back(make("lower_half_chain.Ahat_le_W", "lower_half_chain", e(T::kAHat), le,
                   e(T::kWp), any_x({kLowerHalf}), proven, combined));

  const std::string cubes = "H(x,x^p)^3 <= x^{p+1} A(x,x^p) <= L(x,x^p)^3";
  c.push_back(make("xp_cubes.H3_le_G2A", "xp_cubes", e(T::kHarmonicCubedXp), le,
                   e(T::kGeoSqArithXp), any_x({{-1.0, 1.0}}), proven, cubes));
  c.push_back(make("xp_cubes.G2A_le_L3", "xp_cubes", e(T::kGeoSqArithXp), le,
                   e(T::kLogCubedXp), any_x({{-1.0, 1.0}}), proven, cubes));

  const std::string refuted = "candidate sharpening of the ratio bound, refuted numerically";
  c.push_back(make("cand_K_xp", "cand_K_xp", e(T::kWp), le, e(T::kKOfXpTimesL),
                   any_x({kUnit}), CaseStatus::kFalse, refuted));
  c.push_back(make("cand_S_xp", "cand_S_xp", e(T::kWp), le, e(T::kSOfXpTimesL),
                   any_x({kUnit}), CaseStatus::kFalse, refuted));
  c.push_back(make("cand_K_xpp", "cand_K_xpp", e(T::kWp), le, e(T::kKOfXppTimesL),
                   any_x({kUnit}), CaseStatus::kFalse, refuted));

  c.push_back(make("cand_S_ratio", "cand_S_ratio", e(T::kWp), le, e(T::kSPowTimesL),
                   any_x({kUnit}), CaseStatus::kOpen,
                   "K(x) replaced by S(x) in the ratio bound; neither proven nor refuted"));

  const Region t_pos = any_x({{0.0, 2.0, true, false}});
  c.push_back(make("lnt_bounds.lower", "lnt_bounds", e(T::kTLogNeg), le, e(T::kLogX), t_pos,
                   proven, "ln_{-t} x <= log x for t > 0"));
  c.push_back(make("lnt_bounds.upper", "lnt_bounds", e(T::kLogX), le, e(T::kTLogPos), t_pos,
                   proven, "log x <= ln_t x for t > 0"));
  return c;
}

}  // namespace

std::vector<InequalityCase> r_chain_cases(double r) {
  if (!(r >= 0.25) || !std::isfinite(r)) {
    throw ConfigError("the r-chain requires r >= 1/4");
  }
  using T = ExprTag;
  const std::string s = "W_p <= ((sqrt x+1)/2)^2 <= r(sqrt x-1)^2+sqrt x <= r(sqrt x-1)^2+L";
  std::vector<InequalityCase> c;
  c.push_back(make("r_chain.W_le_Bhalf", "r_chain", e(T::kWp), Relation::kLessEq,
                   e(T::kBHalf), any_x({kUnit}), CaseStatus::kProven, s));
  c.push_back(make("r_chain.Bhalf_le_shifted_sqrt", "r_chain", e(T::kBHalf),
                   Relation::kLessEq, e(T::kRShiftedSqrt, r), p_free(), CaseStatus::kProven, s));
  c.push_back(make("r_chain.shifted_sqrt_le_shifted_L", "r_chain", e(T::kRShiftedSqrt, r),
                   Relation::kLessEq, e(T::kRShiftedL, r), p_free(), CaseStatus::kProven, s));
  return c;
}

const std::vector<InequalityCase>& builtin_catalog() {
  static const std::vector<InequalityCase> catalog = build();
  return catalog;
}

const InequalityCase* find_case(std::string_view name) {
  for (const auto& c : builtin_catalog()) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::vector<InequalityCase> select_cases(std::string_view selector) {
  std::vector<InequalityCase> out;
  for (const auto& c : builtin_catalog()) {
    if (c.name == selector || c.family == selector) out.push_back(c);
  }
  return out;
}

}  // namespace wydlab::engine
