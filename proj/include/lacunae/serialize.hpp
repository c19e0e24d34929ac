#pragma once

#include "lacunae/bivar_poly.hpp"
#include "lacunae/closed_form.hpp"
#include "lacunae/hypergeom.hpp"
#include "lacunae/lambda_series.hpp"
#include "lacunae/normal_order.hpp"

#include <json.hpp>

#include <string>

namespace lacunae {

using nlohmann::json;

// Terms are {"xp": a, "yp": b, "num": "...", "den": "..."}; integers travel as
// strings so consumers never overflow.
json term_to_json(const Term& t);
Term term_from_json(const json& j);

json poly_to_json(const BivarPoly& p);
BivarPoly poly_from_json(const json& j);

/// {"order": N, "coeffs": [[term, ...], ...]} indexed by λ-power.
json series_to_json(const LambdaSeries& s);
LambdaSeries series_from_json(const json& j);

json spec_to_json(const HypergeomSpec& spec);
HypergeomSpec spec_from_json(const json& j);

json plan_to_json(const ClosedFormPlan& plan);
/// One line per branch, written with s left symbolic.
std::string plan_to_text(const ClosedFormPlan& plan);

json normal_order_to_json(const NormalOrderResult& r);

}  // namespace lacunae
