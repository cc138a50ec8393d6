#include "padic/io.hpp"

namespace padic::io {

namespace {

Coefficient coefficient_from_json(const PadicField& field, const json& j) {
  if (j.is_string()) return Coefficient::parse(field, j.get<std::string>());
  if (j.is_number_integer()) return Coefficient(field, j.get<long>());
  throw Error(ErrorCode::ParseError, "coefficient must be a string or integer: " + j.dump());
}

json coefficient_list(const std::vector<Coefficient>& cs) {
  json arr = json::array();
  for (const auto& c : cs) arr.push_back(c.to_string());
  return arr;
}

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw Error(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

PadicField field_from_json(const json& j) {
  const int p = require(j, "p").get<int>();
  Ramification r = Ramification::Unramified;
  if (j.contains("ramification")) r = parse_ramification(j.at("ramification").get<std::string>());
  return PadicField(p, r);
}

json series_to_json(const TruncSeries& s) {
  return json{{"p", s.field().p},
              {"ramification", std::string(to_string(s.field().ramification))},
              {"N", s.order()},
              {"coeffs", coefficient_list(s.coeffs())}};
}

TruncSeries series_from_json(const json& j) {
  const PadicField field = field_from_json(j);
  std::vector<Coefficient> cs;
  for (const auto& c : require(j, "coeffs")) cs.push_back(coefficient_from_json(field, c));
  if (j.contains("N") && j.at("N").get<int>() != static_cast<int>(cs.size()))
    throw Error(ErrorCode::ParseError, "N does not match the number of coefficients");
  return TruncSeries(field, std::move(cs));
}

json polynomial_to_json(const Polynomial& p) { return coefficient_list(p.coeffs()); }

Polynomial polynomial_from_json(const PadicField& field, const json& j) {
  std::vector<Coefficient> cs;
  for (const auto& c : j) cs.push_back(coefficient_from_json(field, c));
  return Polynomial(field, std::move(cs));
}

json rational_to_json(const RationalFunction& r) {
  return json{{"num", polynomial_to_json(r.num())}, {"den", polynomial_to_json(r.den())}};
}

RationalFunction rational_from_json(const PadicField& field, const json& j) {
  return RationalFunction(polynomial_from_json(field, require(j, "num")),
                          polynomial_from_json(field, require(j, "den")));
}

json operator_to_json(const RawOperator& op, int order) {
  json terms = json::array();
  for (const auto& t : op.terms)
    terms.push_back(json{{"zdeg", t.zdeg}, {"deltapoly", coefficient_list(t.deltapoly)}});
  return json{{"p", op.field.p},
              {"ramification", std::string(to_string(op.field.ramification))},
              {"N", order},
              {"terms", terms}};
}

std::pair<RawOperator, int> operator_from_json(const json& j) {
  RawOperator op;
  op.field = field_from_json(j);
  for (const auto& t : require(j, "terms")) {
    RawTerm term;
    term.zdeg = require(t, "zdeg").get<int>();
    if (term.zdeg < 0) throw Error(ErrorCode::ParseError, "zdeg must be >= 0");
    for (const auto& c : require(t, "deltapoly")) term.deltapoly.push_back(coefficient_from_json(op.field, c));
    op.terms.push_back(std::move(term));
  }
  const int order = j.contains("N") ? j.at("N").get<int>() : 64;
  return {std::move(op), order};
}

json spec_to_json(const SeriesSpec& spec) {
  json params = json::array();
  for (const auto& a : spec.alpha) params.push_back(a.get_str());
  return json{{"kind", std::string(to_string(spec.kind))},
              {"params", params},
              {"p", spec.context.field.p},
              {"ramification", std::string(to_string(spec.context.field.ramification))},
              {"N", spec.context.trunc_order}};
}

SeriesSpec spec_from_json(const json& j) {
  const PadicContext ctx(field_from_json(j), require(j, "N").get<int>());
  const std::string kind = require(j, "kind").get<std::string>();
  if (kind == "hypergeometric") {
    std::string text = "hyp:";
    bool first = true;
    for (const auto& a : require(j, "params")) {
      text += (first ? "" : ",") + (a.is_string() ? a.get<std::string>() : a.dump());
      first = false;
    }
    return parse_series_spec(text, ctx);
  }
  return parse_series_spec(kind, ctx);
}

json valuation_to_json(Valuation v) {
  if (is_infinite(v)) return "inf";
  return v;
}

json certificate_to_json(const Certificate& c) {
  return json{{"kind", c.kind},
              {"level", c.level},
              {"rational", rational_to_json(c.rational)},
              {"verified_order", c.verified_order},
              {"min_residual_valuation", valuation_to_json(c.min_residual_valuation)}};
}

json level_to_json(const AntecedentLevel& lv) {
  json coeffs = json::array();
  for (const auto& a : lv.op.coeffs) coeffs.push_back(coefficient_list(a.coeffs()));
  json diag = json::array();
  const ConstMatrix h0 = lv.passage.coefficient(0);
  for (int i = 0; i < h0.size(); ++i) diag.push_back(h0(i, i).to_string());
  return json{{"level", lv.level},
              {"checked_order", lv.checked_order},
              {"operator_order", lv.operator_order},
              {"operator_coeffs", coeffs},
              {"passage_constant_diagonal", diag},
              {"passage_min_valuation", valuation_to_json(lv.passage_min_valuation)},
              {"residual_min_valuation", valuation_to_json(lv.residual_min_valuation)},
              {"solution_residual_min_valuation",
               valuation_to_json(lv.solution_residual_min_valuation)}};
}

json integrality_to_json(const IntegralityReport& r) {
  return json{{"pass", r.pass},
              {"level", r.level},
              {"checked_upto", r.checked_upto},
              {"min_valuation", valuation_to_json(r.min_valuation)},
              {"first_failure", r.first_failure}};
}

json lucas_to_json(const LucasReport& r) {
  return json{{"pass", r.pass},
              {"first_failure", r.first_failure},
              {"checked_order", r.checked_order},
              {"note", r.note}};
}

json dwork_to_json(const DworkReport& r) {
  return json{{"pass", r.pass},
              {"s", r.s},
              {"first_failure", r.first_failure},
              {"checked_order", r.checked_order}};
}

json dependence_to_json(const DependenceReport& r) {
  json cands = json::array();
  for (const auto& c : r.candidates)
    cands.push_back(json{{"exponents", c.exponents},
                         {"product_certificate", certificate_to_json(c.product)},
                         {"logderiv_certificate", certificate_to_json(c.logderiv)}});
  return json{{"series", r.series},
              {"derivative_orders", r.derivative_orders},
              {"exp_bound", r.exp_bound},
              {"level", r.level},
              {"deg_bound", r.deg_bound},
              {"order", r.order},
              {"candidates", cands},
              {"stats",
               {{"rays", r.stats.rays},
                {"tuples_tested", r.stats.tuples_tested},
                {"screened_out", r.stats.screened_out},
                {"product_failed", r.stats.product_failed}}},
              {"scope_note", r.scope_note}};
}

}  // namespace padic::io
