#pragma once

#include "nslab/types.hpp"

#include <stdexcept>

namespace nslab {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Builds a PressureLaw from a rational-function spec string in v with
/// real coefficients: +, -, *, /, ^ with integer exponent, parentheses,
/// literal reals, and the symbol v.  Examples: "1/v", "v^-2 + 3*v".
/// The derivative is produced symbolically from the parsed expression.
/// Throws ParseError on malformed input.
PressureLaw parse_pressure_law(const std::string& spec);

/// The named built-ins plus the spec-string fallback: "inv_v" maps to
/// the exact p = 1/v law, anything else goes through the parser.
PressureLaw resolve_pressure_law(const std::string& name_or_spec);

}  // namespace nslab
