#pragma once

#include "huslab/stability.hpp"

#include <json.hpp>

#include <string>
#include <variant>

namespace huslab {

using Json = nlohmann::ordered_json;

/// Deterministic pretty-printer: floats use fixed 17-significant-digit
/// formatting so identical configs produce byte-identical reports.
std::string dump_json(const Json& j, int indent = 2);

std::string float_string(double v); // the same %.17g formatting

Json scalar_to_json(const Scalar& s);

Json polynomial_to_json(const MonomialPoly& p);
Json polynomial_to_json(const BernsteinPoly& p);

using AnyPolynomial = std::variant<MonomialPoly, BernsteinPoly>;
AnyPolynomial polynomial_from_json(const Json& j);

Json function_input_to_json(const FunctionInput& f);
FunctionInput function_input_from_json(const Json& j);

Json operator_spec_to_json(const OperatorSpec& spec);

Json report_to_json(const StabilityReport& report);
Json empirical_to_json(const EmpiricalResult& result);
Json instability_to_json(const LorentzInstabilityReport& report);

/// Complex literal "a+bi" with rational or decimal parts, e.g. "1+0i",
/// "0.3+0.4i", "1/2-2/3i", "2i". Parses to exact rational parts.
Scalar parse_complex(const std::string& text);

} // namespace huslab
