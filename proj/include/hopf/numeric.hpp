#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <optional>
#include <string>

namespace hopf {

namespace mp = boost::multiprecision;

using Integer = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;

/// 50 significant decimal digits; radii and curvatures live here.
using Real = mp::number<mp::mpfr_float_backend<50>, mp::et_off>;

inline constexpr int kRealDigits = 50;

Real pi();

Real to_real(const Rational& q);

/// Exact conversion: every finite double is a dyadic rational.
Rational to_rational(double value);

/// Parses "1e-20", "0.125", "-3/7" or "42" into an exact rational.
Rational parse_rational(const std::string& text);

/// Exact square root when both numerator and denominator are perfect squares.
std::optional<Rational> exact_sqrt(const Rational& q);

int sign(const Rational& q);
int sign(const Real& x);

/// Fixed scientific rendering with `digits` significant digits, used by every
/// report so that identical inputs give byte-identical output.
std::string format_real(const Real& x, int digits = 17);
std::string format_rational(const Rational& q);

}  // namespace hopf
