// Command-line front end: verify, search, matrix, emit.
//
// Exit codes: 0 outcome matches expectations, 1 mathematical mismatch (or a
// numeric failure), 2 usage error. Machine output goes to stdout or --out;
// diagnostics go to stderr.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wydlab/catalog.hpp"
#include "wydlab/errors.hpp"
#include "wydlab/operator_means.hpp"
#include "wydlab/report_json.hpp"
#include "wydlab/search.hpp"
#include "wydlab/verify.hpp"

namespace {

using wydlab::Json;
namespace engine = wydlab::engine;
namespace op = wydlab::op;

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;
constexpr std::uint64_t kDefaultSeed = 0x5eed;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Grid flags shared by verify and emit; unset flags keep the per-case default.
struct GridFlags {
  std::optional<double> x_min, x_max, p_min, p_max;
  std::optional<std::size_t> x_points, p_points;
  std::optional<double> tol;

  void attach(CLI::App* cmd) {
    cmd->add_option("--x-min", x_min, "smallest x")->check(CLI::PositiveNumber);
    cmd->add_option("--x-max", x_max, "largest x")->check(CLI::PositiveNumber);
    cmd->add_option("--x-points", x_points, "log-spaced x points")->check(CLI::Range(2, 100000000));
    cmd->add_option("--p-min", p_min, "smallest p");
    cmd->add_option("--p-max", p_max, "largest p");
    cmd->add_option("--p-points", p_points, "linear p points")->check(CLI::Range(1, 100000000));
    cmd->add_option("--tol", tol, "relative violation tolerance")->check(CLI::PositiveNumber);
  }

  [[nodiscard]] engine::GridSpec apply(engine::GridSpec g) const {
    if (x_min) g.x_min = *x_min;
    if (x_max) g.x_max = *x_max;
    if (x_points) g.x_points = *x_points;
    if (p_min) g.p_min = *p_min;
    if (p_max) g.p_max = *p_max;
    if (p_points) g.p_points = *p_points;
    if (tol) g.tolerance = *tol;
    if (g.p_min == g.p_max) g.p_points = 1;
    try {
      g.validate();
    } catch (const wydlab::ConfigError& e) {
      throw UsageError(e.what());
    }
    return g;
  }

  [[nodiscard]] Json describe() const {
    Json j = Json::object();
    auto put = [&j](const char* key, const auto& v) {
      if (v) j[key] = *v;
    };
    put("x_min", x_min);
    put("x_max", x_max);
    put("x_points", x_points);
    put("p_min", p_min);
    put("p_max", p_max);
    put("p_points", p_points);
    put("tol", tol);
    return j;
  }
};

Json manifest(const std::string& command, Json parameters, std::uint64_t seed, int passed,
              int failed) {
  return Json{{"command", command},
              {"parameters", std::move(parameters)},
              {"version", WYDLAB_VERSION},
              {"seed", seed},
              {"outcome", {{"pass", passed}, {"fail", failed}}}};
}

std::string valid_names() {
  std::string out;
  for (const auto& c : engine::builtin_catalog()) out += "  " + c.name + "\n";
  return out;
}

std::vector<engine::InequalityCase> resolve(const std::string& selector) {
  auto cases = engine::select_cases(selector);
  if (cases.empty()) {
    throw UsageError("unknown case '" + selector + "'; valid names:\n" + valid_names());
  }
  return cases;
}

// The whole document is built before the sink is touched, so a failed run
// never leaves a partial or empty report behind.
void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot open '" + path + "' for writing");
  out << text;
  if (!out.flush()) throw std::runtime_error("write to '" + path + "' failed");
}

// --- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::vector<std::string> cases;
  bool all = false;
  GridFlags grid;
  std::string out;
};

int run_verify(const VerifyArgs& a) {
  if (a.all == !a.cases.empty()) throw UsageError("give either --case or --all");
  std::vector<engine::InequalityCase> targets;
  if (a.all) {
    targets = engine::builtin_catalog();
  } else {
    for (const auto& name : a.cases) {
      for (auto& c : resolve(name)) targets.push_back(std::move(c));
    }
  }
  std::vector<std::pair<engine::InequalityCase, engine::GridSpec>> jobs;
  for (const auto& c : targets) jobs.emplace_back(c, a.grid.apply(engine::default_grid(c)));

  Json reports = Json::array();
  int passed = 0;
  int failed = 0;
  for (const auto& [c, g] : jobs) {
    engine::ViolationReport r;
    try {
      r = engine::verify(c, g);
    } catch (const wydlab::VacuousGridError& e) {
      throw UsageError(c.name + ": " + e.what());
    }
    const bool ok = engine::matches_status(r);
    (ok ? passed : failed) += 1;
    if (!ok) std::cerr << "status mismatch: " << c.name << "\n";
    Json j = wydlab::to_json(r);
    j["matches_status"] = ok;
    reports.push_back(std::move(j));
  }

  Json params{{"cases", a.all ? Json("all") : Json(a.cases)}, {"grid", a.grid.describe()}};
  Json doc{{"manifest", manifest("verify", std::move(params), 0, passed, failed)},
           {"reports", std::move(reports)}};
  write_output(a.out, doc.dump(2) + "\n");
  return failed == 0 ? kOk : kMismatch;
}

// --- search ---------------------------------------------------------------

struct SearchArgs {
  std::string candidate;
  std::uint64_t budget = 1'000'000;
  std::uint64_t seed = kDefaultSeed;
  std::string out;
};

int run_search(const SearchArgs& a) {
  const auto targets = resolve(a.candidate);
  std::vector<engine::SearchConfig> configs;
  for (const auto& c : targets) {
    auto cfg = engine::default_search(c);
    cfg.budget = a.budget;
    cfg.seed = a.seed;
    try {
      cfg.validate();
    } catch (const wydlab::ConfigError& e) {
      throw UsageError(c.name + ": " + e.what());
    }
    configs.push_back(std::move(cfg));
  }

  Json results = Json::array();
  int passed = 0;
  int failed = 0;
  for (const auto& cfg : configs) {
    const auto outcome = engine::search_counterexample(cfg);
    bool ok = true;
    if (cfg.target.status == engine::CaseStatus::kFalse) ok = outcome.witness.has_value();
    if (cfg.target.status == engine::CaseStatus::kProven) ok = !outcome.witness.has_value();
    (ok ? passed : failed) += 1;
    if (!ok) std::cerr << "status mismatch: " << cfg.target.name << "\n";
    Json j{{"case", cfg.target.name}, {"status", engine::to_string(cfg.target.status)}};
    j.update(wydlab::to_json(outcome));
    j["matches_status"] = ok;
    results.push_back(std::move(j));
  }

  Json params{{"candidate", a.candidate}, {"budget", a.budget}};
  Json doc{{"manifest", manifest("search", std::move(params), a.seed, passed, failed)},
           {"results", std::move(results)}};
  write_output(a.out, doc.dump(2) + "\n");
  return failed == 0 ? kOk : kMismatch;
}

// --- matrix ---------------------------------------------------------------

struct MatrixArgs {
  long dim = 4;
  long trials = 100;
  std::string p = "grid";
  std::uint64_t seed = kDefaultSeed;
  double tol = 1e-8;
  double identity_tol = 1e-10;
  double alpha = 0.5;
  double beta = 2.0;
  double cond = 1e3;
  std::string out;
};

std::vector<double> parse_p(const std::string& text) {
  if (text == "grid") return {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  double p = 0;
  std::istringstream in(text);
  if (!(in >> p) || !(in >> std::ws).eof()) throw UsageError("--p expects a number or 'grid'");
  if (!(p > 0.0 && p < 1.0)) {
    throw UsageError("--p must lie strictly between 0 and 1 (operator W_p is undefined at the ends)");
  }
  return {p};
}

int run_matrix(const MatrixArgs& a) {
  const auto ps = parse_p(a.p);
  if (!(a.alpha > 0 && a.alpha <= a.beta)) throw UsageError("need 0 < --alpha <= --beta");

  Json verdicts = Json::array();
  Json identities = Json::array();
  int passed = 0;
  int failed = 0;
  auto tally = [&](bool ok) { (ok ? passed : failed) += 1; };
  for (long k = 0; k < a.trials; ++k) {
    const auto base = a.seed + 2 * static_cast<std::uint64_t>(k);
    const auto s = op::random_spd(a.dim, a.cond, base);
    const auto t = op::random_spd(a.dim, a.cond, base + 1);
    const auto id = op::check_p_half_identity(s, t, a.identity_tol);
    tally(id.pass);
    Json ij = wydlab::to_json(id);
    ij["trial"] = k;
    identities.push_back(std::move(ij));
    for (double p : ps) {
      const auto v41 = op::check_difference_bound(s, t, p, a.tol);
      const auto v42 = op::check_ratio_bound(s, a.alpha, a.beta, p, base, a.tol);
      tally(v41.holds);
      tally(v42.holds);
      Json j41 = wydlab::to_json(v41);
      j41["trial"] = k;
      j41["p"] = p;
      j41["check"] = "difference_bound";
      Json j42 = wydlab::to_json(v42);
      j42["trial"] = k;
      j42["p"] = p;
      j42["check"] = "ratio_bound";
      verdicts.push_back(std::move(j41));
      verdicts.push_back(std::move(j42));
    }
  }

  Json params{{"dim", a.dim},   {"trials", a.trials}, {"p", a.p},
              {"tol", a.tol},   {"identity_tol", a.identity_tol},
              {"alpha", a.alpha}, {"beta", a.beta},   {"cond", a.cond}};
  Json doc{{"manifest", manifest("matrix", std::move(params), a.seed, passed, failed)},
           {"verdicts", std::move(verdicts)},
           {"identity", std::move(identities)}};
  write_output(a.out, doc.dump(2) + "\n");
  return failed == 0 ? kOk : kMismatch;
}

// --- emit -----------------------------------------------------------------

struct EmitArgs {
  std::string name;
  GridFlags grid;
  std::string csv;
};

int run_emit(const EmitArgs& a) {
  const engine::InequalityCase* c = engine::find_case(a.name);
  if (c == nullptr) throw UsageError("unknown case '" + a.name + "'; valid names:\n" + valid_names());
  const auto g = a.grid.apply(engine::default_grid(*c));
  std::ostringstream body;
  body.exceptions(std::ios::badbit | std::ios::failbit);
  const std::size_t rows = engine::emit_csv(*c, g, body);
  if (rows == 0) throw UsageError(c->name + ": no grid point lies in the case region");
  write_output(a.csv, body.str());
  if (!a.csv.empty()) {
    Json params{{"case", a.name}, {"grid", wydlab::to_json(g)}, {"csv", a.csv}, {"rows", rows}};
    std::cout << Json{{"manifest", manifest("emit", std::move(params), 0, 1, 0)}}.dump(2) << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical workbench for Wigner-Yanase-Dyson type means", "wydlab"};
  app.set_version_flag("--version", std::string(WYDLAB_VERSION));
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "check catalog cases on a grid");
  auto* case_opt = verify->add_option("--case", va.cases, "case name or family (repeatable)");
  verify->add_flag("--all", va.all, "every catalog case")->excludes(case_opt);
  va.grid.attach(verify);
  verify->add_option("--out", va.out, "report path (default stdout)");

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "budgeted counterexample search");
  search->add_option("--candidate", sa.candidate, "case name or family")->required();
  search->add_option("--budget", sa.budget, "maximum evaluations")->check(CLI::PositiveNumber);
  search->add_option("--seed", sa.seed, "random probe seed")->envname("WYDLAB_SEED");
  search->add_option("--out", sa.out, "report path (default stdout)");

  MatrixArgs ma;
  auto* matrix = app.add_subcommand("matrix", "operator inequality trials on random SPD pairs");
  matrix->add_option("--dim", ma.dim, "matrix dimension")->check(CLI::Range(1L, 64L));
  matrix->add_option("--trials", ma.trials, "number of seeded pairs")->check(CLI::PositiveNumber);
  matrix->add_option("--p", ma.p, "p in (0,1), or 'grid' for 0.1..0.9");
  matrix->add_option("--seed", ma.seed, "base seed")->envname("WYDLAB_SEED");
  matrix->add_option("--tol", ma.tol, "Loewner tolerance")->check(CLI::PositiveNumber);
  matrix->add_option("--identity-tol", ma.identity_tol, "identity residual tolerance")
      ->check(CLI::PositiveNumber);
  matrix->add_option("--alpha", ma.alpha, "lower sandwich constant")->check(CLI::PositiveNumber);
  matrix->add_option("--beta", ma.beta, "upper sandwich constant")->check(CLI::PositiveNumber);
  matrix->add_option("--cond", ma.cond, "condition number of S and T")
      ->check(CLI::Range(1.0, 1e12));
  matrix->add_option("--out", ma.out, "report path (default stdout)");

  EmitArgs ea;
  auto* emit = app.add_subcommand("emit", "write lhs, rhs and gap on a grid as CSV");
  emit->add_option("--case", ea.name, "case name")->required();
  ea.grid.attach(emit);
  emit->add_option("--csv", ea.csv, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (verify->parsed()) return run_verify(va);
    if (search->parsed()) return run_search(sa);
    if (matrix->parsed()) return run_matrix(ma);
    if (emit->parsed()) return run_emit(ea);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const wydlab::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return kMismatch;
  }
  return kUsage;
}
