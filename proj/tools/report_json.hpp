#pragma once

#include <json.hpp>

#include "littlewood/ball_geometry.hpp"
#include "littlewood/forms.hpp"
#include "littlewood/lemmata.hpp"
#include "littlewood/littlewood_opt.hpp"

namespace littlewood {

inline constexpr const char* kVersion = "0.1.0";

// Coefficient arrays are always emitted as [a11, a21, a12, a22].
nlohmann::json to_json(const FormCoefficients& form);
nlohmann::json to_json(const NormResult& result);
nlohmann::json to_json(const ExtremePoint& point);
nlohmann::json to_json(const SplitWitness& witness);
nlohmann::json to_json(const ClassificationResult& result);
nlohmann::json to_json(const ScanConfig& cfg);
nlohmann::json to_json(const ScanReport& report);
nlohmann::json to_json(const CaseBoundReport& report);
nlohmann::json to_json(const LemmaReport& report);

FormCoefficients form_from_json(const nlohmann::json& j);
ScanReport scan_report_from_json(const nlohmann::json& j);

nlohmann::json make_envelope(const std::string& command, nlohmann::json inputs, nlohmann::json result);

}  // namespace littlewood
