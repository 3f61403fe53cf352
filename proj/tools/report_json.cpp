#include "report_json.hpp"

#include <string>

namespace littlewood {

using nlohmann::json;

json to_json(const FormCoefficients& form) {
  return json::array({form.a11(), form.a21(), form.a12(), form.a22()});
}

json to_json(const NormResult& result) {
  json j{{"value", result.value}, {"branch", std::string(to_string(result.branch))}};
  j["critical_cos"] = result.critical_cos ? json(*result.critical_cos) : json(nullptr);
  return j;
}

json to_json(const ExtremePoint& point) {
  return {{"coeffs", to_json(point.coeffs)},
          {"kind", std::string(to_string(point.kind))},
          {"sign_pattern", point.sign_pattern}};
}

json to_json(const SplitWitness& witness) {
  return {{"A", to_json(witness.a)}, {"B", to_json(witness.b)}, {"epsilon", witness.epsilon}};
}

json to_json(const ClassificationResult& result) {
  json j{{"verdict", std::string(to_string(result.verdict))}, {"norm", result.norm}};
  j["matched"] = result.matched ? to_json(*result.matched) : json(nullptr);
  j["witness"] = result.witness ? to_json(*result.witness) : json(nullptr);
  return j;
}

json to_json(const ScanConfig& cfg) {
  return {{"step", cfg.step},
          {"box", {cfg.lo, cfg.hi}},
          {"field", std::string(to_string(cfg.field))},
          {"exclude_zero_forms", cfg.exclude_zero_forms}};
}

json to_json(const ScanReport& report) {
  json argmax = json::array();
  for (const auto& e : report.argmax) argmax.push_back(to_json(e.form));
  return {{"max_ratio", report.max_ratio},
          {"points_scanned", report.points_scanned},
          {"argmax_count", report.argmax.size()},
          {"argmax", argmax},
          {"config", to_json(report.config)}};
}

json to_json(const CaseBoundReport& report) {
  return {{"case", std::string(to_string(report.label))},
          {"samples", report.samples},
          {"worst_ratio", report.worst_ratio},
          {"worst_form", to_json(report.worst_form)}};
}

json to_json(const LemmaReport& report) {
  json lemmas = json::array();
  for (const auto& t : report.lemmas) {
    lemmas.push_back({{"name", t.name},
                      {"note", t.note.empty() ? json(nullptr) : json(t.note)},
                      {"checked", t.checked},
                      {"passed", t.passed},
                      {"failed", t.failed()},
                      {"excluded", t.excluded},
                      {"counterexamples", t.counterexamples}});
  }
  return {{"samples", report.samples},
          {"seed", report.seed},
          {"boundary_band", report.band},
          {"all_passed", report.all_passed()},
          {"lemmas", lemmas}};
}

FormCoefficients form_from_json(const json& j) {
  return FormCoefficients(j.at(0).get<double>(), j.at(1).get<double>(), j.at(2).get<double>(),
                          j.at(3).get<double>());
}

ScanReport scan_report_from_json(const json& j) {
  ScanReport report;
  report.max_ratio = j.at("max_ratio").get<double>();
  report.points_scanned = j.at("points_scanned").get<std::size_t>();
  const json& cfg = j.at("config");
  report.config.step = cfg.at("step").get<double>();
  report.config.lo = cfg.at("box").at(0).get<double>();
  report.config.hi = cfg.at("box").at(1).get<double>();
  report.config.field =
      cfg.at("field").get<std::string>() == "real" ? ScalarField::Real : ScalarField::ComplexRealCoeffs;
  report.config.exclude_zero_forms = cfg.at("exclude_zero_forms").get<bool>();
  for (const auto& f : j.at("argmax")) {
    const FormCoefficients form = form_from_json(f);
    report.argmax.push_back(
        {form, form.is_zero() ? 0.0 : littlewood_ratio(form, report.config.field).ratio});
  }
  return report;
}

json make_envelope(const std::string& command, json inputs, json result) {
  return {{"command", command}, {"inputs", std::move(inputs)}, {"result", std::move(result)},
          {"version", kVersion}};
}

}  // namespace littlewood
