#include "hopf/numeric.hpp"

#include <boost/math/constants/constants.hpp>

#include <cctype>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "hopf/errors.hpp"

namespace hopf {

namespace mp = boost::multiprecision;

Real pi() { return boost::math::constants::pi<Real>(); }

Real to_real(const Rational& q) {
  return Real(mp::numerator(q)) / Real(mp::denominator(q));
}

Rational to_rational(double value) {
  if (!std::isfinite(value)) {
    throw HopfError(ErrorKind::invalid_argument, "non-finite value cannot be made rational");
  }
  return Rational(value);
}

namespace {

Integer pow10(unsigned exponent) {
  Integer out = 1;
  for (unsigned i = 0; i < exponent; ++i) out *= 10;
  return out;
}

Rational parse_decimal(const std::string& text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  Integer digits = 0;
  int scale = 0;
  bool seen_digit = false;
  bool seen_point = false;
  for (; pos < text.size(); ++pos) {
    const char ch = text[pos];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits = digits * 10 + (ch - '0');
      if (seen_point) --scale;
      seen_digit = true;
    } else if (ch == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) throw HopfError(ErrorKind::invalid_argument, "not a number: '" + text + "'");
  if (pos < text.size()) {
    if (text[pos] != 'e' && text[pos] != 'E') {
      throw HopfError(ErrorKind::invalid_argument, "not a number: '" + text + "'");
    }
    const std::string exponent = text.substr(pos + 1);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(exponent, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (exponent.empty() || used != exponent.size()) {
      throw HopfError(ErrorKind::invalid_argument, "bad exponent in '" + text + "'");
    }
    scale += value;
  }
  Rational out = scale >= 0 ? Rational(digits * pow10(static_cast<unsigned>(scale)))
                            : Rational(digits, pow10(static_cast<unsigned>(-scale)));
  return negative ? Rational(-out) : out;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return parse_decimal(text);
  const Rational num = parse_decimal(text.substr(0, slash));
  const Rational den = parse_decimal(text.substr(slash + 1));
  if (den == 0) throw HopfError(ErrorKind::invalid_argument, "zero denominator in '" + text + "'");
  return num / den;
}

std::optional<Rational> exact_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  const Integer num = mp::numerator(q);
  const Integer den = mp::denominator(q);
  const Integer num_root = mp::sqrt(num);
  const Integer den_root = mp::sqrt(den);
  if (num_root * num_root != num || den_root * den_root != den) return std::nullopt;
  return Rational(num_root, den_root);
}

int sign(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }
int sign(const Real& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

std::string format_real(const Real& x, int digits) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(digits - 1) << x;
  return os.str();
}

std::string format_rational(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

}  // namespace hopf
