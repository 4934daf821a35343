#include "wydlab/report_json.hpp"

namespace wydlab {

Json to_json(const engine::GridSpec& grid) {
  return Json{{"x_min", grid.x_min},         {"x_max", grid.x_max},
              {"x_points", grid.x_points},   {"x_scale", "log"},
              {"p_min", grid.p_min},         {"p_max", grid.p_max},
              {"p_points", grid.p_points},   {"tolerance", grid.tolerance},
              {"anchor_unity", grid.anchor_unity}};
}

Json to_json(const engine::ViolationReport& report) {
  Json j{{"case", report.case_name},
         {"status", engine::to_string(report.status)},
         {"grid", to_json(report.grid)},
         {"max_signed_gap", report.max_signed_gap},
         {"max_relative_gap", report.max_relative_gap},
         {"scale", report.scale},
         {"argmax", {{"x", report.argmax.x}, {"p", report.argmax.p}}}};
  if (report.status == engine::CaseStatus::kOpen) {
    j["pass"] = nullptr;
  } else {
    j["pass"] = report.pass;
  }
  j["holds_on_grid"] = report.pass;
  j["samples"] = report.samples_evaluated;
  j["skipped"] = report.skipped;
  return j;
}

Json to_json(const engine::SharpnessReport& report) {
  return Json{{"case", report.case_name},
              {"min_abs_gap", report.min_abs_gap},
              {"argmin", {{"x", report.argmin.x}, {"p", report.argmin.p}}},
              {"max_abs_relative_gap", report.max_abs_relative_gap},
              {"samples", report.samples_evaluated}};
}

Json to_json(const engine::NoOrderingWitness& witness) {
  auto sample = [](const std::optional<engine::OrderingSample>& s) -> Json {
    if (!s) return nullptr;
    return Json{{"x", s->x}, {"difference", s->difference}};
  };
  return Json{{"p", witness.p},
              {"found", witness.found()},
              {"ghat_above", sample(witness.ghat_above)},
              {"ghat_below", sample(witness.ghat_below)}};
}

Json to_json(const engine::SearchOutcome& outcome) {
  if (outcome.witness) {
    const auto& w = *outcome.witness;
    return Json{{"found", true},        {"x", w.x},
                {"p", w.p},             {"gap", w.gap},
                {"relative_gap", w.relative_gap},
                {"evaluations", outcome.evaluations}};
  }
  return Json{{"found", false},
              {"max_gap", outcome.best.gap},
              {"max_relative_gap", outcome.best.relative_gap},
              {"at", {{"x", outcome.best.x}, {"p", outcome.best.p}}},
              {"evaluations", outcome.evaluations}};
}

Json to_json(const op::LoewnerVerdict& verdict) {
  return Json{{"holds", verdict.holds},
              {"min_eigenvalue_of_difference", verdict.min_eigenvalue},
              {"scale", verdict.scale},
              {"tolerance", verdict.tolerance}};
}

Json to_json(const op::IdentityResidual& residual) {
  return Json{{"residual", residual.residual},
              {"reference_norm", residual.reference_norm},
              {"relative", residual.relative},
              {"pass", residual.pass}};
}

}  // namespace wydlab
