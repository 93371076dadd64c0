#pragma once

#include <string>

#include <json.hpp>

#include "ricalc/euclid.hpp"
#include "ricalc/lz.hpp"
#include "ricalc/optimal.hpp"
#include "ricalc/piecewise_expr.hpp"
#include "ricalc/step_function.hpp"

namespace ricalc {

/// JSON wire formats. Infinity serializes as the string "inf" everywhere.

nlohmann::json step_to_json(const StepFunction& f);
StepFunction step_from_json(const nlohmann::json& j);

/// Real-line functions reuse the half-line format plus an "offset" giving the
/// left edge of the support.
nlohmann::json line_step_to_json(const LineStepFunction& f);
LineStepFunction line_step_from_json(const nlohmann::json& j);

nlohmann::json expr_to_json(const PiecewiseExpr& g);

nlohmann::json lz_params_to_json(const LZParams& x);
LZParams lz_params_from_json(const nlohmann::json& j);

nlohmann::json partner_to_json(const OptimalPartnerResult& r);

/// Finite doubles pass through; infinities become the string "inf".
nlohmann::json number_to_json(double v);

/// Formats a double for reports: "inf" for infinity, %.12g otherwise.
std::string format_number(double v);

} // namespace ricalc
