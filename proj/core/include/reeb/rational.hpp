#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace reeb {

/// Exact rational number. All heights and coordinates in the library use it so
/// that crossing predicates never depend on floating-point rounding.
using Rational = mpq_class;

/// Parses integers ("7", "-3"), plain decimals ("0.25", "-1.5") and "p/q"
/// with q != 0. Exponent notation is rejected.
/// Throws reeb::Error(ErrorCode::BadNumber) on malformed input.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" in lowest terms with q > 0.
std::string to_string(const Rational& value);

/// Lossy conversion for rendering only.
double to_double(const Rational& value);

inline int sign(const Rational& value) { return sgn(value); }

}  // namespace reeb
