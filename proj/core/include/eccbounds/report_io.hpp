#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "eccbounds/bounds.hpp"
#include "eccbounds/enumerate.hpp"
#include "eccbounds/families.hpp"
#include "eccbounds/invariants.hpp"

namespace eccb {

/// Flat object with snake_case keys; harary as {"num", "den", "decimal"}.
nlohmann::ordered_json to_json(const InvariantSet& inv);

/// {"id", "lhs", "rhs", "holds", "equality", "predicted_equality",
///  "agreement", "note"} plus "applicable", "form" and, where a second
/// candidate condition exists, "alt_predicted_equality"/"alt_agreement".
nlohmann::ordered_json to_json(const BoundCheck& check);

nlohmann::ordered_json to_json(const FamilyEvaluation& eval);

/// include_run_info adds worker count and elapsed time; without it the
/// output depends only on the sweep's inputs.
nlohmann::ordered_json to_json(const VerificationReport& report, bool include_run_info = true);

/// Header line plus one row.
std::string to_csv(const InvariantSet& inv);
std::string to_csv(const std::vector<BoundCheck>& checks);
std::string to_csv(const FamilyEvaluation& eval);
/// One row per bound.
std::string to_csv(const VerificationReport& report);

}  // namespace eccb
