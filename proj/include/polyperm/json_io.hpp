#pragma once

#include <json.hpp>

#include "polyperm/carlitz.hpp"
#include "polyperm/fractal.hpp"
#include "polyperm/report.hpp"
#include "polyperm/verify.hpp"

namespace polyperm {

/// All orders and counts serialize as decimal strings; values like 6^13
/// exceed common integer widths.

nlohmann::json group_report_json(const GroupReport& r);
nlohmann::json atlas_json(const std::vector<GroupReport>& records);
nlohmann::json fractal_report_json(const FractalReport& r);
nlohmann::json suite_result_json(const SuiteResult& r);
nlohmann::json p2_verify_report_json(const P2VerifyReport& r);

/// Jet wire form: {"p": ..., "k": ..., "c": row-major table}.
nlohmann::json jet_json(const CarlitzJet& j);
CarlitzJet jet_from_json(const nlohmann::json& j);

/// Triple wire form: {"p": ..., "a": [...], "u": [...], "sigma": "cycles"}.
nlohmann::json triple_json(const P2Triple& t);
P2Triple triple_from_json(const nlohmann::json& j);

}  // namespace polyperm
