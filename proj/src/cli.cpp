#include "padic/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "padic/io.hpp"

namespace padic::cli {

namespace {

using io::json;

const std::vector<std::string> kSubcommands = {
    "gen",        "check-integrality", "check-lucas",      "check-dwork",
    "antecedent", "certify-ratio",     "certify-logderiv", "scan"};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Input {
  std::string name;
  TruncSeries series;
  std::optional<DiffOp> op;
  int period = 1;
  std::vector<std::string> warnings;
};

bool needs_dwork(const std::string& spec) {
  return spec == "bessel" || spec == "exp" || spec == "exponential";
}

Ramification resolve_ramification(const CommandRequest& req) {
  if (req.ramification == "auto") {
    for (const auto& s : req.series)
      if (needs_dwork(s)) return Ramification::DworkEisenstein;
    return Ramification::Unramified;
  }
  return parse_ramification(req.ramification);
}

void validate(const CommandRequest& req) {
  if (std::find(kSubcommands.begin(), kSubcommands.end(), req.subcommand) == kSubcommands.end())
    throw UsageError("unknown subcommand '" + req.subcommand + "'");
  if (req.prime < 2 || !is_prime(req.prime)) throw UsageError("--prime must be a prime");
  if (req.ramification != "auto" && req.ramification != "unramified" && req.ramification != "dwork")
    throw UsageError("--ramification must be auto, unramified or dwork");
  if (req.order < 1) throw UsageError("--order must be >= 1");
  if (req.level < 0) throw UsageError("--level must be >= 0");
  if (req.s < 1) throw UsageError("--s must be >= 1");
  if (req.levels < 1) throw UsageError("--levels must be >= 1");
  if (req.deg_bound < 0) throw UsageError("--deg-bound must be >= 0");
  if (req.exp_bound < 1) throw UsageError("--exp-bound must be >= 1");
  if (req.period < 0) throw UsageError("--period must be >= 0");
  if (req.k < 0) throw UsageError("--k must be >= 0");
  if (req.kind != "ratio" && req.kind != "period" && req.kind != "frobenius")
    throw UsageError("--kind must be ratio, period or frobenius");
  for (int d : req.derivs)
    if (d < 0) throw UsageError("--derivs entries must be >= 0");
  const std::size_t inputs = req.series.size() + (req.operator_file ? 1 : 0);
  if (inputs == 0) throw UsageError("--series or --operator is required");
  if (req.subcommand != "scan" && req.subcommand != "gen" && inputs != 1)
    throw UsageError(req.subcommand + " takes exactly one series");
  if (req.subcommand == "scan" && !req.derivs.empty() && req.derivs.size() != inputs)
    throw UsageError("--derivs needs one entry per series");
}

std::vector<Input> load_inputs(const CommandRequest& req) {
  const PadicContext ctx(PadicField(req.prime, resolve_ramification(req)), req.order);
  std::vector<Input> out;
  for (const auto& text : req.series) {
    SeriesSpec spec;
    try {
      spec = parse_series_spec(text, ctx);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    CatalogEntry entry = build(spec);
    out.push_back(Input{entry.name, entry.series, entry.op, entry.period, entry.warnings});
  }
  if (req.operator_file) {
    std::ifstream in(*req.operator_file);
    if (!in) throw UsageError("cannot read operator file '" + *req.operator_file + "'");
    json j;
    try {
      j = json::parse(in);
    } catch (const json::exception& e) {
      throw UsageError(std::string("operator file: ") + e.what());
    }
    auto [raw, order] = io::operator_from_json(j);
    if (raw.field.p != req.prime)
      throw UsageError("operator file prime differs from --prime");
    DiffOp op = monicize(raw, order);
    TruncSeries f = unit_solution(op, order);
    out.push_back(Input{"operator:" + *req.operator_file, f, op, 1, {}});
  }
  return out;
}

json request_json(const CommandRequest& req) {
  json j{{"subcommand", req.subcommand},
         {"series", req.series},
         {"prime", req.prime},
         {"ramification", std::string(to_string(resolve_ramification(req)))},
         {"order", req.order}};
  if (req.operator_file) j["operator_file"] = *req.operator_file;
  const std::string& c = req.subcommand;
  if (c == "check-integrality" || c == "certify-logderiv" || c == "scan") j["level"] = req.level;
  if (c == "certify-ratio") {
    j["kind"] = req.kind;
    if (req.kind == "ratio") j["level"] = req.level;
    else j["k"] = req.k;
  }
  if (c == "check-dwork") j["s"] = req.s;
  if (c == "antecedent") j["levels"] = req.levels;
  if (c == "certify-ratio" || c == "certify-logderiv" || c == "scan") j["deg_bound"] = req.deg_bound;
  if (c == "certify-ratio" || c == "certify-logderiv") j["period"] = req.period;
  if (c == "scan") {
    j["exp_bound"] = req.exp_bound;
    j["derivs"] = req.derivs;
  }
  return j;
}

int effective_period(const CommandRequest& req, const Input& in) {
  return req.period > 0 ? req.period : in.period;
}

// Returns the result object and whether every requested check passed.
std::pair<json, bool> dispatch(const CommandRequest& req, const std::vector<Input>& inputs) {
  const std::string& c = req.subcommand;
  if (c == "gen") {
    json arr = json::array();
    for (const auto& in : inputs) {
      json e{{"name", in.name}, {"period", in.period}, {"warnings", in.warnings},
             {"series", io::series_to_json(in.series)}};
      if (in.op) {
        json coeffs = json::array();
        for (const auto& a : in.op->coeffs) coeffs.push_back(io::series_to_json(a)["coeffs"]);
        e["monic_operator_coeffs"] = coeffs;
      }
      arr.push_back(e);
    }
    return {json{{"entries", arr}}, true};
  }
  const Input& in = inputs.front();
  if (c == "check-integrality") {
    auto r = integrality_check(in.series, req.level);
    return {io::integrality_to_json(r), r.pass};
  }
  if (c == "check-lucas") {
    auto r = p_lucas_check(in.series);
    return {io::lucas_to_json(r), r.pass};
  }
  if (c == "check-dwork") {
    auto r = dwork_congruence_check(in.series, req.s);
    return {io::dwork_to_json(r), r.pass};
  }
  if (c == "antecedent") {
    if (!in.op) throw Error(ErrorCode::BadParameters, in.name + " has no operator");
    auto levels = antecedent_chain(*in.op, req.levels, req.order);
    json arr = json::array();
    for (const auto& lv : levels) arr.push_back(io::level_to_json(lv));
    return {json{{"levels", arr}, {"pass", true}}, true};
  }
  if (c == "certify-ratio") {
    Certificate cert;
    if (req.kind == "ratio")
      cert = ratio_certificate(in.series, req.level, req.deg_bound);
    else if (req.kind == "period")
      cert = period_ratio_certificate(in.series, effective_period(req, in), req.k, req.deg_bound);
    else
      cert = frobenius_ratio_certificate(in.series, effective_period(req, in), req.k, req.deg_bound);
    return {json{{"certificate", io::certificate_to_json(cert)}, {"pass", true}}, true};
  }
  if (c == "certify-logderiv") {
    auto cert = logderiv_certificate(in.series, effective_period(req, in), req.level, req.deg_bound);
    return {json{{"certificate", io::certificate_to_json(cert)}, {"pass", true}}, true};
  }
  // scan
  std::vector<ScanInput> scan_inputs;
  for (const auto& i : inputs) scan_inputs.push_back(ScanInput{i.name, i.series});
  std::optional<std::vector<int>> derivs;
  if (!req.derivs.empty()) derivs = req.derivs;
  auto report = dependence_scan(scan_inputs, req.exp_bound, req.level, req.deg_bound, derivs);
  return {io::dependence_to_json(report), true};
}

void flatten(const json& j, const std::string& path, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), rows);
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const json& x) { return x.is_structured(); })) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", rows);
  } else if (j.is_string()) {
    rows.emplace_back(path, j.get<std::string>());
  } else {
    rows.emplace_back(path, j.dump());
  }
}

std::string render(const json& doc, OutputFormat format) {
  if (format == OutputFormat::Json) return doc.dump(2) + "\n";
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(doc, "", rows);
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  std::ostringstream out;
  for (const auto& [k, v] : rows) out << k << std::string(width - k.size() + 2, ' ') << v << "\n";
  return out.str();
}

}  // namespace

CommandResult execute(const CommandRequest& req) {
  CommandResult result;
  json doc;
  try {
    validate(req);
    doc["request"] = request_json(req);
    const auto inputs = load_inputs(req);
    json warnings = json::array();
    for (const auto& in : inputs)
      for (const auto& w : in.warnings) warnings.push_back(in.name + ": " + w);
    if (!warnings.empty()) doc["warnings"] = warnings;
    auto [body, pass] = dispatch(req, inputs);
    doc["result"] = body;
    result.exit_code = pass ? kExitOk : kExitFailed;
  } catch (const UsageError& e) {
    result.exit_code = kExitUsage;
    result.error = std::string("usage error: ") + e.what() + "\n";
    return result;
  } catch (const VerificationError& e) {
    doc["error"] = {{"code", std::string(to_string(e.code()))},
                    {"message", e.what()},
                    {"first_order", e.first_order()}};
    result.exit_code = kExitFailed;
  } catch (const Error& e) {
    doc["error"] = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
    result.exit_code = kExitFailed;
  }
  if (doc.contains("error")) result.error = std::string("error: ") + doc["error"]["message"].get<std::string>() + "\n";
  result.output = render(doc, req.format);
  return result;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CommandRequest req;
  bool as_json = false;
  std::string format = "json";
  CLI::App app{"Exact p-adic power series, Frobenius antecedents and congruence certificates"};
  app.require_subcommand(1);
  for (const auto& name : kSubcommands) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--series", req.series, "catalog series: apery, bessel, exp, ffrak, hyp:a,b,...");
    sub->add_option("--operator", req.operator_file, "raw operator JSON file");
    sub->add_option("--prime", req.prime, "prime p");
    sub->add_option("--ramification", req.ramification, "auto | unramified | dwork");
    sub->add_option("--order", req.order, "truncation order N");
    sub->add_option("--level", req.level, "congruence level M (pi-units)");
    sub->add_option("--s", req.s, "Dwork congruence level");
    sub->add_option("--levels", req.levels, "antecedent chain length");
    sub->add_option("--deg-bound", req.deg_bound, "certificate degree bound");
    sub->add_option("--exp-bound", req.exp_bound, "scan exponent bound");
    sub->add_option("--period", req.period, "Frobenius period h (0: catalog value)");
    sub->add_option("--k", req.k, "period multiple");
    sub->add_option("--kind", req.kind, "ratio | period | frobenius");
    sub->add_option("--derivs", req.derivs, "derivative order per series")->delimiter(',');
    sub->add_option("--format", format, "json | table");
    sub->add_flag("--json", as_json, "JSON output");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }
  for (auto* sub : app.get_subcommands()) req.subcommand = sub->get_name();
  if (format != "json" && format != "table") {
    err << "usage error: --format must be json or table\n";
    return kExitUsage;
  }
  req.format = (format == "table" && !as_json) ? OutputFormat::Table : OutputFormat::Json;
  const CommandResult r = execute(req);
  out << r.output;
  err << r.error;
  return r.exit_code;
}

}  // namespace padic::cli
