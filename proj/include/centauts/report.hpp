#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "centauts/theory.hpp"

namespace centauts {

nlohmann::json report_to_json(const TheoremReport& r);
// Inverse of report_to_json; ParseError on a malformed document.
TheoremReport report_from_json(const nlohmann::json& j);
nlohmann::json sweep_to_json(const Lemma4Sweep& s);

// Fixed column order; one row per (group, check).
inline constexpr const char* kCsvHeader =
    "groupId,order,prime,class,check,rEqS,residualIso,expEq,conditionAll,"
    "autcentOrder,autZZOrder,innOrder,status,verdict";

std::string emit_csv(const std::vector<TheoremReport>& reports);
// Sorted keys and two-space indentation, so equal inputs give equal bytes.
std::string emit_json(const nlohmann::json& doc);

}  // namespace centauts
