// lpbounds: exact Delsarte LP bounds for binary min-distance and
// almost-balanced codes, with machine-checkable optimality certificates.
//
// Exit codes: 0 success, 1 verification failure, 2 flag/domain/parse errors.

#include <cmath>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lpb/certificate.hpp"
#include "lpb/delsarte.hpp"
#include "lpb/io.hpp"
#include "lpb/rates.hpp"
#include "lpb/witness.hpp"

using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// --- bound ------------------------------------------------------------

int cmd_bound(unsigned long n, unsigned long d, const std::string& mode_str,
              const std::string& method) {
  lpb::Mode mode = lpb::mode_from_name(mode_str);
  json params = {{"n", n}, {"d", d}, {"mode", mode_str}, {"method", method}};
  json exact = json::object();
  json result;

  if (method == "closed-form") {
    if (mode != lpb::Mode::AlmostBalanced || !lpb::in_grey_rankin_domain(n, d))
      throw UsageError("closed-form method requires balanced mode inside the Grey-Rankin domain");
    lpb::Rational value = lpb::grey_rankin_value(n, d);
    lpb::Certificate cert = lpb::build_certificate(n, d);
    lpb::KrawtchoukTable table = lpb::build_table(n);
    bool ok = lpb::verify_dual_feasible(cert, table).all_pass() &&
              lpb::verify_primal_feasible(cert, table).all_pass() &&
              lpb::verify_complementary_slackness(cert, table).all_pass();
    result["n"] = n;
    result["d"] = d;
    result["mode"] = mode_str;
    result["lp_value"] = nullptr;
    result["closed_form"] = lpb::rational_to_string(value);
    result["certificate_status"] = ok ? "verified" : "failed";
    result["lower_bound_witness"] = nullptr;
    exact["closed_form"] = lpb::rational_to_string(value);
  } else if (method == "lp" || method == "both") {
    lpb::BoundReport rep = lpb::bound_report(n, d, mode);
    if (method == "lp") {
      rep.closed_form.reset();
      rep.certificate_status = lpb::CertStatus::NotApplicable;
    }
    result = lpb::bound_report_to_json(rep);
    exact["lp_value"] = lpb::rational_to_string(rep.lp_value);
    if (rep.closed_form) exact["closed_form"] = lpb::rational_to_string(*rep.closed_form);
    if (rep.lower_bound_witness)
      exact["lower_bound_witness"] = lpb::rational_to_string(*rep.lower_bound_witness);
  } else {
    throw UsageError("unknown method '" + method + "' (expected lp|closed-form|both)");
  }

  emit(lpb::make_envelope("bound", std::move(params), std::move(result), std::move(exact)));
  return 0;
}

// --- table ------------------------------------------------------------

struct Range {
  unsigned long start = 0, end = 0, step = 1;
};

Range parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("range must look like start..end[:step]");
  Range r;
  try {
    r.start = std::stoul(text.substr(0, dots));
    std::string rest = text.substr(dots + 2);
    auto colon = rest.find(':');
    if (colon == std::string::npos) {
      r.end = std::stoul(rest);
    } else {
      r.end = std::stoul(rest.substr(0, colon));
      r.step = std::stoul(rest.substr(colon + 1));
    }
  } catch (const std::exception&) {
    throw UsageError("range must look like start..end[:step]");
  }
  if (r.step == 0 || r.end < r.start) throw UsageError("empty range '" + text + "'");
  return r;
}

int cmd_table(const std::string& n_range, const std::string& d_range, const std::string& mode_str,
              const std::string& format) {
  lpb::Mode mode = lpb::mode_from_name(mode_str);
  Range nr = parse_range(n_range), dr = parse_range(d_range);
  std::vector<lpb::BoundQuery> queries;
  for (unsigned long n = nr.start; n <= nr.end; n += nr.step)
    for (unsigned long d = dr.start; d <= dr.end; d += dr.step)
      if (d >= 1 && d <= n) queries.push_back({n, d, mode});
  if (queries.empty()) throw UsageError("ranges produce no valid (n, d) pairs");
  // already sorted: n outer, d inner, both ascending
  std::vector<lpb::BoundReport> reports = lpb::bound_table(queries);

  if (format == "csv") {
    std::cout << lpb::kBoundCsvHeader << "\n";
    for (const lpb::BoundReport& rep : reports) std::cout << lpb::bound_report_csv_row(rep) << "\n";
    return 0;
  }
  if (format != "json") throw UsageError("unknown format '" + format + "' (expected csv|json)");
  json rows = json::array();
  for (const lpb::BoundReport& rep : reports) rows.push_back(lpb::bound_report_to_json(rep));
  json params = {{"n_range", n_range}, {"d_range", d_range}, {"mode", mode_str}, {"format", format}};
  emit(lpb::make_envelope("table", std::move(params), {{"rows", std::move(rows)}}, json::object()));
  return 0;
}

// --- verify -----------------------------------------------------------

int cmd_verify(const std::string& cert_file, unsigned long n, unsigned long d, bool have_nd) {
  lpb::Certificate cert;
  json params = json::object();
  if (!cert_file.empty()) {
    params["certificate_file"] = cert_file;
    std::ifstream in(cert_file);
    if (!in) throw UsageError("cannot open '" + cert_file + "'");
    json parsed;
    try {
      parsed = json::parse(in);
    } catch (const json::exception& e) {
      throw UsageError(std::string("malformed certificate file: ") + e.what());
    }
    cert = lpb::certificate_from_json(parsed);
  } else if (have_nd) {
    params["n"] = n;
    params["d"] = d;
    if (!lpb::in_grey_rankin_domain(n, d))
      throw UsageError("(n, d) outside the Grey-Rankin domain");
    cert = lpb::build_certificate(n, d);
  } else {
    throw UsageError("verify needs either --certificate-file or both -n and -d");
  }

  lpb::KrawtchoukTable table = lpb::build_table(cert.n);
  struct Named {
    const char* name;
    lpb::SlackReport report;
  };
  std::vector<Named> reports;
  reports.push_back({"dual_feasible", lpb::verify_dual_feasible(cert, table)});
  reports.push_back({"primal_feasible", lpb::verify_primal_feasible(cert, table)});
  reports.push_back({"complementary_slackness", lpb::verify_complementary_slackness(cert, table)});

  // The three verifiers never read cert.value; pin it against both objectives.
  lpb::Rational alpha_total(0);
  for (const lpb::Rational& v : cert.alpha.a) alpha_total += v;
  lpb::SlackReport objective_match;
  objective_match.checks.push_back(
      {"beta(0) = value", cert.beta.objective() == cert.value,
       lpb::Rational(cert.beta.objective() - cert.value)});
  objective_match.checks.push_back(
      {"sum alpha = value", alpha_total == cert.value, lpb::Rational(alpha_total - cert.value)});
  reports.push_back({"objective_match", std::move(objective_match)});

  bool all_pass = true;
  json checks = json::array();
  for (const Named& nr : reports) {
    bool pass = nr.report.all_pass();
    all_pass = all_pass && pass;
    checks.push_back({{"name", nr.name},
                      {"pass", pass},
                      {"tightest_slack", lpb::rational_to_string(nr.report.tightest_slack())}});
  }

  json result;
  result["certificate"] = lpb::certificate_to_json(cert);
  result["checks"] = std::move(checks);
  result["all_pass"] = all_pass;
  json exact = {{"value", lpb::rational_to_string(cert.value)}};
  emit(lpb::make_envelope("verify", std::move(params), std::move(result), std::move(exact)));
  return all_pass ? 0 : 1;
}

// --- rates ------------------------------------------------------------

double round6(double v) { return std::round(v * 1e6) / 1e6; }

int cmd_rates(double start, double end, unsigned long steps, const std::string& format) {
  if (!(start > 0.0 && start < 0.5)) throw UsageError("delta-start must lie in (0, 1/2)");
  if (steps < 1) throw UsageError("steps must be at least 1");
  if (steps > 1 && !(end > start && end < 0.5))
    throw UsageError("delta-end must lie in (delta-start, 1/2)");
  std::vector<double> grid;
  if (steps == 1) {
    grid.push_back(start);
  } else {
    for (unsigned long i = 0; i < steps; ++i)
      grid.push_back(start + (end - start) * static_cast<double>(i) / static_cast<double>(steps - 1));
  }
  std::vector<lpb::RatePoint> points = lpb::rate_table(grid);

  if (format == "csv") {
    std::cout << "delta,r_gv,r_mrrw,r_avg\n";
    for (const lpb::RatePoint& p : points) std::cout << lpb::rate_csv_row(p) << "\n";
    return 0;
  }
  if (format != "json") throw UsageError("unknown format '" + format + "' (expected csv|json)");
  json rows = json::array();
  for (const lpb::RatePoint& p : points)
    rows.push_back({{"delta", round6(p.delta)},
                    {"r_gv", round6(p.r_gv)},
                    {"r_mrrw", round6(p.r_mrrw)},
                    {"r_avg", round6(p.r_avg)}});
  json params = {{"delta_start", start}, {"delta_end", end}, {"steps", steps}, {"format", format}};
  emit(lpb::make_envelope("rates", std::move(params), {{"rows", std::move(rows)}}, json::object()));
  return 0;
}

// --- witness ----------------------------------------------------------

int cmd_witness(unsigned long n, unsigned long d, const std::string& format) {
  lpb::LowerBoundWitness w = lpb::build_witness(n, d);
  if (format == "csv") {
    std::cout << "n,d,epsilon_lower,x_floor,objective,feasible\n";
    std::cout << n << "," << d << "," << lpb::rational_to_string(w.epsilon_lower) << ","
              << w.x_floor << "," << lpb::rational_to_string(w.objective) << ",true\n";
    return 0;
  }
  if (format != "json") throw UsageError("unknown format '" + format + "' (expected csv|json)");
  json params = {{"n", n}, {"d", d}};
  json exact = {{"epsilon_lower", lpb::rational_to_string(w.epsilon_lower)},
                {"objective", lpb::rational_to_string(w.objective)}};
  emit(lpb::make_envelope("witness", std::move(params), {{"witness", lpb::witness_to_json(w)}},
                          std::move(exact)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Delsarte LP bounds for binary min-distance and almost-balanced codes"};
  app.require_subcommand(1);

  unsigned long n = 0, d = 0;
  std::string mode = "balanced", method = "both", format = "json";
  std::string n_range, d_range, cert_file;
  double delta_start = 0, delta_end = 0;
  unsigned long steps = 1;

  CLI::App* bound = app.add_subcommand("bound", "LP and closed-form bounds for one (n, d)");
  bound->add_option("-n,--n", n, "block length")->required();
  bound->add_option("-d,--d", d, "distance")->required();
  bound->add_option("--mode", mode, "min|balanced")->capture_default_str();
  bound->add_option("--method", method, "lp|closed-form|both")->capture_default_str();

  CLI::App* table = app.add_subcommand("table", "bound reports over (n, d) ranges");
  table->add_option("--n-range", n_range, "start..end[:step]")->required();
  table->add_option("--d-range", d_range, "start..end[:step]")->required();
  table->add_option("--mode", mode, "min|balanced")->capture_default_str();
  table->add_option("--format", format, "csv|json")->capture_default_str();

  CLI::App* verify = app.add_subcommand("verify", "check an optimality certificate");
  verify->add_option("--certificate-file", cert_file, "JSON certificate or verify envelope");
  CLI::Option* vn = verify->add_option("-n,--n", n, "block length");
  verify->add_option("-d,--d", d, "distance")->needs(vn);

  CLI::App* rates = app.add_subcommand("rates", "asymptotic rate curves");
  rates->add_option("--delta-start", delta_start, "first relative distance")->required();
  rates->add_option("--delta-end", delta_end, "last relative distance");
  rates->add_option("--steps", steps, "number of grid points")->capture_default_str();
  rates->add_option("--format", format, "csv|json")->capture_default_str();

  CLI::App* witness = app.add_subcommand("witness", "feasible lower-bound witness for one (n, d)");
  witness->add_option("-n,--n", n, "block length")->required();
  witness->add_option("-d,--d", d, "distance")->required();
  witness->add_option("--format", format, "csv|json")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (bound->parsed()) return cmd_bound(n, d, mode, method);
    if (table->parsed()) return cmd_table(n_range, d_range, mode, format);
    if (verify->parsed()) return cmd_verify(cert_file, n, d, verify->count("-n") > 0);
    if (rates->parsed()) return cmd_rates(delta_start, delta_end, steps, format);
    if (witness->parsed()) return cmd_witness(n, d, format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
