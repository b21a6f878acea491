#pragma once

// Dense univariate polynomials over exact rationals, with the Sturm-sequence
// root counting used by the certificate code.

#include <utility>
#include <vector>

#include "hopf/numeric.hpp"

namespace hopf {

class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  /// coefficients[i] multiplies x^i; trailing zeros are stripped.
  explicit RationalPolynomial(std::vector<Rational> coefficients);

  static RationalPolynomial constant(const Rational& value);
  static RationalPolynomial monomial(const Rational& value, int power);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  Rational coeff(int power) const;
  const Rational& leading() const;

  Rational operator()(const Rational& x) const;
  Real operator()(const Real& x) const;

  RationalPolynomial derivative() const;
  RationalPolynomial monic() const;

  friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(const Rational& s, const RationalPolynomial& p);
  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

  /// Quotient and remainder; throws on division by zero.
  static std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a,
                                                                 const RationalPolynomial& b);

 private:
  void normalize();

  std::vector<Rational> coeffs_;
};

/// Monic greatest common divisor (zero if both inputs are zero).
RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b);

/// p / gcd(p, p'): same distinct roots, all simple.
RationalPolynomial square_free_part(const RationalPolynomial& p);

/// Signed remainder sequence p, p', -rem(p, p'), ...
std::vector<RationalPolynomial> sturm_sequence(const RationalPolynomial& p);

int sign_variations(const std::vector<RationalPolynomial>& sequence, const Rational& x);

/// Distinct real roots in the open interval (lo, hi) of the square-free p whose
/// Sturm sequence is given. Requires p(lo) != 0 and p(hi) != 0.
int sturm_count(const std::vector<RationalPolynomial>& sequence, const Rational& lo,
                const Rational& hi);

}  // namespace hopf
