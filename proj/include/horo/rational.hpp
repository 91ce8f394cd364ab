#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace horo {

/// Exact rational scalar used by the combinatorial geometry kernel.
using rational = boost::multiprecision::mpq_rational;

inline double to_double(const rational& q) { return q.convert_to<double>(); }

/// Nearest rational with a fixed power-of-two denominator. Used to bring
/// transcendental inputs (circle discretizations, sampled directions) into
/// the exact kernel at a known resolution (~1.5e-8).
inline rational rational_from_double(double x, int64_t denom = (int64_t{1} << 26)) {
    if (!std::isfinite(x)) throw std::invalid_argument("non-finite scalar");
    const double scaled = x * static_cast<double>(denom);
    if (std::abs(scaled) > 9.0e18) throw std::invalid_argument("scalar too large to rationalize");
    return rational(static_cast<int64_t>(std::llround(scaled)), denom);
}

/// Parses "p/q", plain integers, and decimal strings ("-1.25") exactly.
rational parse_rational(const std::string& text);

/// Prints as "p" or "p/q", matching what parse_rational accepts.
std::string format_rational(const rational& q);

}  // namespace horo
