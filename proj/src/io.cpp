#include "lpb/io.hpp"

#include <stdexcept>

namespace lpb {

using nlohmann::json;

std::string mode_name(Mode mode) {
  return mode == Mode::MinDistance ? "min" : "balanced";
}

Mode mode_from_name(const std::string& name) {
  if (name == "min") return Mode::MinDistance;
  if (name == "balanced") return Mode::AlmostBalanced;
  throw std::invalid_argument("unknown mode '" + name + "' (expected min|balanced)");
}

std::string cert_status_name(CertStatus status) {
  switch (status) {
    case CertStatus::Verified: return "verified";
    case CertStatus::NotApplicable: return "not_applicable";
    case CertStatus::Failed: return "failed";
  }
  return "failed";
}

namespace {

json rationals_to_json(const std::vector<Rational>& values) {
  json arr = json::array();
  for (const Rational& v : values) arr.push_back(rational_to_string(v));
  return arr;
}

std::vector<Rational> rationals_from_json(const json& arr) {
  if (!arr.is_array()) throw std::invalid_argument("expected an array of rationals");
  std::vector<Rational> out;
  out.reserve(arr.size());
  for (const auto& v : arr) {
    if (!v.is_string()) throw std::invalid_argument("expected rational strings");
    out.push_back(rational_from_string(v.get<std::string>()));
  }
  return out;
}

}  // namespace

json bound_report_to_json(const BoundReport& rep) {
  json j;
  j["n"] = rep.n;
  j["d"] = rep.d;
  j["mode"] = mode_name(rep.mode);
  j["lp_value"] = rational_to_string(rep.lp_value);
  j["closed_form"] = rep.closed_form ? json(rational_to_string(*rep.closed_form)) : json(nullptr);
  j["certificate_status"] = cert_status_name(rep.certificate_status);
  j["lower_bound_witness"] =
      rep.lower_bound_witness ? json(rational_to_string(*rep.lower_bound_witness)) : json(nullptr);
  j["balanced_range_empty"] = rep.balanced_range_empty;
  return j;
}

json certificate_to_json(const Certificate& cert) {
  json j;
  j["n"] = cert.n;
  j["d"] = cert.d;
  j["beta"] = rationals_to_json(cert.beta.coeffs);
  j["alpha"] = rationals_to_json(cert.alpha.a);
  j["value"] = rational_to_string(cert.value);
  return j;
}

json witness_to_json(const LowerBoundWitness& w) {
  json j;
  j["n"] = w.n;
  j["d"] = w.d;
  j["epsilon_lower"] = rational_to_string(w.epsilon_lower);
  j["x_floor"] = w.x_floor;
  j["x_d_bracket"] = {{"low", rational_to_string(w.x_d_bracket.low)},
                      {"high", rational_to_string(w.x_d_bracket.high)}};
  j["a"] = rationals_to_json(w.a.a);
  j["objective"] = rational_to_string(w.objective);
  j["feasible"] = true;  // construction verifies feasibility and throws otherwise
  return j;
}

Certificate certificate_from_json(const json& input) {
  const json* j = &input;
  if (j->contains("result")) {
    const json& result = (*j)["result"];
    if (!result.contains("certificate"))
      throw std::invalid_argument("certificate_from_json: envelope lacks result.certificate");
    j = &result["certificate"];
  }
  if (!j->is_object() || !j->contains("n") || !j->contains("d") || !j->contains("beta") ||
      !j->contains("alpha") || !j->contains("value"))
    throw std::invalid_argument("certificate_from_json: missing fields");
  if (!(*j)["n"].is_number_unsigned() || !(*j)["d"].is_number_unsigned())
    throw std::invalid_argument("certificate_from_json: n and d must be nonnegative integers");

  Certificate cert;
  cert.n = (*j)["n"].get<unsigned long>();
  cert.d = (*j)["d"].get<unsigned long>();
  cert.beta.n = cert.n;
  cert.beta.coeffs = rationals_from_json((*j)["beta"]);
  cert.alpha.n = cert.n;
  cert.alpha.a = rationals_from_json((*j)["alpha"]);
  cert.value = rational_from_string((*j)["value"].get<std::string>());
  if (cert.beta.coeffs.size() != cert.n + 1 || cert.alpha.a.size() != cert.n + 1)
    throw std::invalid_argument("certificate_from_json: coefficient arrays must have n+1 entries");
  if (cert.d < 1 || cert.d > cert.n)
    throw std::invalid_argument("certificate_from_json: d out of range");
  return cert;
}

json make_envelope(const std::string& command, json parameters, json result, json exact_values) {
  json j;
  j["command"] = command;
  j["parameters"] = std::move(parameters);
  j["result"] = std::move(result);
  j["exact_values"] = std::move(exact_values);
  return j;
}

const char* const kBoundCsvHeader =
    "n,d,mode,lp_value,closed_form,certificate_status,lower_bound_witness";

std::string bound_report_csv_row(const BoundReport& rep) {
  std::string row = std::to_string(rep.n) + "," + std::to_string(rep.d) + "," +
                    mode_name(rep.mode) + "," + rational_to_string(rep.lp_value) + ",";
  if (rep.closed_form) row += rational_to_string(*rep.closed_form);
  row += "," + cert_status_name(rep.certificate_status) + ",";
  if (rep.lower_bound_witness) row += rational_to_string(*rep.lower_bound_witness);
  return row;
}

}  // namespace lpb
