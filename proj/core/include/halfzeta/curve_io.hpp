#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "halfzeta/curve.hpp"

namespace halfzeta {

/// Curve file schema:
///   {"p": 3, "f": 1, "kind": "hyperelliptic", "genus": 1,
///    "f_coeffs": [c_0, c_1, ...], "h_coeffs": [...]}
///   {"p": 2, "f": 1, "kind": "plane", "genus": 1,
///    "F_coeffs": {"3,0,0": c, "0,2,1": c, ...}}
/// A coefficient c is a base-p coordinate list relative to the canonical
/// modulus of F_{p^{2f}} ([c_0, c_1] means c_0 + c_1 x), or a plain integer
/// for prime-field elements. Plane keys are exponent triples of X, Y, Z.
/// "q" may replace "f" and must then be p^{2f}.
/// Throws input_error on any schema or validation problem.
CurveModel curve_from_json(const nlohmann::json& j);
CurveModel load_curve(const std::string& path);

nlohmann::ordered_json curve_to_json(const CurveModel& c);

}  // namespace halfzeta
