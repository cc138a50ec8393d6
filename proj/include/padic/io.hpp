#pragma once

#include <json.hpp>

#include "padic/catalog.hpp"
#include "padic/dependence.hpp"
#include "padic/frobenius.hpp"

namespace padic::io {

using nlohmann::json;

/// {p, ramification, N, coeffs: ["a/b" | "c0 + c1*pi", ...]}
json series_to_json(const TruncSeries& s);
TruncSeries series_from_json(const json& j);

json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const PadicField& field, const json& j);

/// {num: [...], den: [...]} with coefficient strings, lowest degree first.
json rational_to_json(const RationalFunction& r);
RationalFunction rational_from_json(const PadicField& field, const json& j);

/// {p, ramification, N, terms: [{zdeg, deltapoly: [c0, c1, ...]}]}
json operator_to_json(const RawOperator& op, int order);
/// Returns the raw operator and the truncation order N.
std::pair<RawOperator, int> operator_from_json(const json& j);

/// {kind, params, p, ramification, N}
json spec_to_json(const SeriesSpec& spec);
SeriesSpec spec_from_json(const json& j);

/// {kind, level, rational: {num, den}, verified_order, min_residual_valuation}
json certificate_to_json(const Certificate& c);
json valuation_to_json(Valuation v);

json level_to_json(const AntecedentLevel& level);
json integrality_to_json(const IntegralityReport& r);
json lucas_to_json(const LucasReport& r);
json dwork_to_json(const DworkReport& r);
json dependence_to_json(const DependenceReport& r);

PadicField field_from_json(const json& j);

}  // namespace padic::io
