#include "wydlab/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "wydlab/errors.hpp"

namespace wydlab::engine {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Budget-limited evaluation of the relative gap; remembers the best point.
class Objective {
 public:
  Objective(const InequalityCase& c, std::uint64_t budget) : case_(c), budget_(budget) {
    best_.relative_gap = kNegInf;
  }

  [[nodiscard]] bool exhausted() const { return used_ >= budget_; }
  [[nodiscard]] std::uint64_t used() const { return used_; }
  [[nodiscard]] const SearchPoint& best() const { return best_; }

  // Relative gap at (x, p); -inf outside the region or after the budget.
  double operator()(double x, double p) {
    if (exhausted() || !case_.region.contains(x, p)) return kNegInf;
    ++used_;
    const double lhs = evaluate(case_.lhs, x, p);
    const double rhs = evaluate(case_.rhs, x, p);
    const double gap = case_.gap(lhs, rhs);
    const double rel = gap / std::max({1.0, std::abs(lhs), std::abs(rhs)});
    if (!std::isfinite(rel)) return kNegInf;
    if (rel > best_.relative_gap) best_ = {x, p, gap, rel};
    return rel;
  }

 private:
  const InequalityCase& case_;
  std::uint64_t budget_;
  std::uint64_t used_ = 0;
  SearchPoint best_;
};

struct Candidate {
  double log_x;
  double p;
  double value;
};

struct Peak {
  double arg;
  double value;
};

// Maximizes f on [a, b] by golden-section search. Returns the better of the
// located peak and the starting point.
template <class F>
Peak golden_max(F&& f, double a, double b, int iterations, double start, double start_value) {
  if (!(b > a)) return {start, start_value};
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int i = 0; i < iterations; ++i) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  const Peak peak = fc >= fd ? Peak{c, fc} : Peak{d, fd};
  return peak.value > start_value ? peak : Peak{start, start_value};
}

// The p interval of the region that contains p (the whole hull if p-free).
Interval enclosing(const Region& region, double p) {
  for (const auto& i : region.p) {
    if (i.contains(p)) return i;
  }
  return region.p_hull();
}

}  // namespace

void SearchConfig::validate() const {
  coarse.validate();
  const auto cells = static_cast<std::uint64_t>(coarse.x_points) *
                     (target.region.p_free ? 1 : coarse.p_points);
  if (budget < cells) {
    throw ConfigError("search budget " + std::to_string(budget) +
                      " is smaller than the coarse grid (" + std::to_string(cells) + ")");
  }
  if (starts < 1 || refine_rounds < 0 || golden_iterations < 0) {
    throw ConfigError("search refinement parameters must be non-negative");
  }
  if (!(tolerance > 0.0)) throw ConfigError("search tolerance must be > 0");
}

SearchConfig default_search(const InequalityCase& target) {
  SearchConfig cfg;
  cfg.target = target;
  if (target.region.p_free) {
    cfg.coarse.p_min = cfg.coarse.p_max = 0.0;
    cfg.coarse.p_points = 1;
  } else {
    const Interval hull = target.region.p_hull();
    cfg.coarse.p_min = hull.lo;
    cfg.coarse.p_max = hull.hi;
  }
  return cfg;
}

SearchOutcome search_counterexample(const SearchConfig& config) {
  config.validate();
  const InequalityCase& c = config.target;
  Objective objective(c, config.budget);

  const double lx_min = std::log(config.coarse.x_min);
  const double lx_max = std::log(config.coarse.x_max);
  // exp(log x) can land one ulp outside the range
  auto x_at = [&config](double lx) {
    return std::clamp(std::exp(lx), config.coarse.x_min, config.coarse.x_max);
  };
  const double p_min = c.region.p_free ? 0.0 : config.coarse.p_min;
  const double p_max = c.region.p_free ? 0.0 : config.coarse.p_max;
  const auto xs = config.coarse.x_values();
  const auto ps = c.region.p_free ? std::vector<double>{p_min} : config.coarse.p_values();

  std::vector<Candidate> pool;
  pool.reserve(xs.size() * ps.size() + config.random_probes);
  for (double x : xs) {
    for (double p : ps) {
      const double v = objective(x, p);
      if (v > kNegInf) pool.push_back({std::log(x), p, v});
    }
  }

  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::uint64_t i = 0; i < config.random_probes && !objective.exhausted(); ++i) {
    const double lx = lx_min + unit(rng) * (lx_max - lx_min);
    const double p = p_min + unit(rng) * (p_max - p_min);
    const double v = objective(x_at(lx), p);
    if (v > kNegInf) pool.push_back({lx, p, v});
  }

  // Best-first; stable so equal values keep scan order (smallest x, then p).
  const auto n_starts = std::min<std::size_t>(pool.size(), static_cast<std::size_t>(config.starts));
  std::partial_sort(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(n_starts), pool.end(),
                    [](const Candidate& a, const Candidate& b) {
                      if (a.value != b.value) return a.value > b.value;
                      if (a.log_x != b.log_x) return a.log_x < b.log_x;
                      return a.p < b.p;
                    });

  const double dlx = (lx_max - lx_min) / static_cast<double>(config.coarse.x_points - 1);
  const double dp = ps.size() > 1 ? (p_max - p_min) / static_cast<double>(ps.size() - 1) : 0.0;
  for (std::size_t s = 0; s < n_starts && !objective.exhausted(); ++s) {
    Candidate cur = pool[s];
    for (int round = 0; round < config.refine_rounds && !objective.exhausted(); ++round) {
      const double p_fixed = cur.p;
      const Peak along_x = golden_max([&](double lx) { return objective(x_at(lx), p_fixed); },
                                      std::max(lx_min, cur.log_x - dlx),
                                      std::min(lx_max, cur.log_x + dlx),
                                      config.golden_iterations, cur.log_x, cur.value);
      cur.log_x = along_x.arg;
      cur.value = along_x.value;
      if (c.region.p_free || dp == 0.0) continue;
      const Interval span = enclosing(c.region, cur.p);
      const double lx_fixed = cur.log_x;
      const Peak along_p = golden_max([&](double p) { return objective(x_at(lx_fixed), p); },
                                      std::max(span.lo, cur.p - dp), std::min(span.hi, cur.p + dp),
                                      config.golden_iterations, cur.p, cur.value);
      cur.p = along_p.arg;
      cur.value = along_p.value;
    }
  }

  SearchOutcome out;
  out.best = objective.best();
  out.evaluations = objective.used();
  if (out.best.relative_gap > config.tolerance) out.witness = out.best;
  return out;
}

}  // namespace wydlab::engine
