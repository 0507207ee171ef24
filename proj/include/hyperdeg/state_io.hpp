#pragma once

#include <string>

#include "json.hpp"

#include "hyperdeg/base_case.hpp"
#include "hyperdeg/report.hpp"

namespace hyperdeg {

using Json = nlohmann::ordered_json;

inline constexpr int kStateSchemaVersion = 1;

/// Polynomials are stored in canonical string form; the a coefficients are
/// keyed "i,j" in row-major order; params are integers or "symbolic".
Json state_to_json(const HypersurfaceState& state);
/// Throws MalformedInput (missing or ill-typed fields) or ParseError (polynomials).
HypersurfaceState state_from_json(const Json& doc);

Json report_to_json(const Report& report);
Report report_from_json(const Json& doc);

}  // namespace hyperdeg
