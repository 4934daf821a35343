#pragma once

#include "json.hpp"
#include "wydlab/operator_means.hpp"
#include "wydlab/search.hpp"
#include "wydlab/verify.hpp"

namespace wydlab {

using Json = nlohmann::ordered_json;

Json to_json(const engine::GridSpec& grid);
/// {case, status, grid, max_signed_gap, max_relative_gap, scale,
///  argmax:{x,p}, pass, holds_on_grid, samples, skipped}.
/// `pass` is null for open cases: they are reported, never judged.
Json to_json(const engine::ViolationReport& report);
Json to_json(const engine::SharpnessReport& report);
Json to_json(const engine::NoOrderingWitness& witness);
/// {"found": true, x, p, gap, relative_gap, evaluations} or
/// {"found": false, "max_gap", "max_relative_gap", "at":{x,p}, evaluations}.
Json to_json(const engine::SearchOutcome& outcome);
Json to_json(const op::LoewnerVerdict& verdict);
Json to_json(const op::IdentityResidual& residual);

}  // namespace wydlab
