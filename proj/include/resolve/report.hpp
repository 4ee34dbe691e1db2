#pragma once

#include <json.hpp>

#include <string>

#include "resolve/betti.hpp"
#include "resolve/resolution.hpp"

namespace resolve {

using ordered_json = nlohmann::ordered_json;

/// {"modules":[[{"face":[..],"mdeg":[..]},..],..],"diffs":[[{"row","col","coef","mono"},..],..]}
/// Integral coefficients are JSON integers, fractions are "p/q" strings,
/// formal symbols have "face": null.
ordered_json free_complex_to_json(const FreeComplex& complex);

/// Inverse of free_complex_to_json. The augmentation ideal is recovered from
/// the multidegrees of F_1 symbols hit by d_0. Throws ParseError on schema
/// violations.
FreeComplex free_complex_from_json(const ordered_json& json, const FieldSpec& field = FieldSpec::rationals());

std::string format_free_complex(const FreeComplex& complex, const VarTable& vars);

/// {"field":..,"entries":[{"index":i,"mdeg":[..],"value":b},..],"totals":[..]}
ordered_json betti_to_json(const BettiTable& table);

/// Rows are homological indices, columns total degrees.
std::string format_betti_table(const BettiTable& table);

}  // namespace resolve
