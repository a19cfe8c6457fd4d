#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace idnf {

/// Exact rational coefficients (GMP). Values are kept canonical.
using Rational = mpq_class;

/// Formats as "p" or "p/q" in lowest terms.
std::string to_string(const Rational& q);

/// Parses "p", "-p" or "p/q". Throws ParseError on malformed input or q = 0.
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace idnf
