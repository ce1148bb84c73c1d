#pragma once

#include <string>

#include <json.hpp>

#include "lpb/certificate.hpp"
#include "lpb/delsarte.hpp"
#include "lpb/witness.hpp"

namespace lpb {

// All exact values cross the serialization boundary as "numerator/denominator"
// strings; floats never carry rationals.

std::string mode_name(Mode mode);
Mode mode_from_name(const std::string& name);  // throws std::invalid_argument
std::string cert_status_name(CertStatus status);

nlohmann::json bound_report_to_json(const BoundReport& rep);
nlohmann::json certificate_to_json(const Certificate& cert);
nlohmann::json witness_to_json(const LowerBoundWitness& w);

/// Accepts either a bare certificate object or a full envelope written by the
/// verify command (certificate nested under result). Throws
/// std::invalid_argument on malformed input.
Certificate certificate_from_json(const nlohmann::json& j);

/// "command" / "parameters" / "result" / "exact_values" wrapper; exact_values
/// collects the headline rationals of the command for quick machine checks.
nlohmann::json make_envelope(const std::string& command, nlohmann::json parameters,
                             nlohmann::json result, nlohmann::json exact_values);

/// CSV row for a bound report: n,d,mode,lp_value,closed_form,
/// certificate_status,lower_bound_witness (absent optionals left empty).
std::string bound_report_csv_row(const BoundReport& rep);
extern const char* const kBoundCsvHeader;

}  // namespace lpb
