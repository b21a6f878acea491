#pragma once

// Quartics whose roots in (0, 1) are exactly the proper r-harmonic radii of a
// CP^n family, and certified isolation of those roots.

#include <array>
#include <optional>
#include <vector>

#include "hopf/curvature_models.hpp"
#include "hopf/polynomial.hpp"

namespace hopf {

struct QuarticPoly {
  std::array<Rational, 5> a;  // a[i] multiplies x^i
  std::optional<Substitution> substitution;
  std::optional<HypersurfaceFamily> family;
  int r = 0;

  /// A bare quartic with no family attached, coefficients high to low.
  static QuarticPoly from_coefficients(const Rational& a4, const Rational& a3, const Rational& a2,
                                       const Rational& a1, const Rational& a0);

  const Rational& a4() const { return a[4]; }
  const Rational& a3() const { return a[3]; }
  const Rational& a2() const { return a[2]; }
  const Rational& a1() const { return a[1]; }
  const Rational& a0() const { return a[0]; }

  RationalPolynomial polynomial() const;
  Rational operator()(const Rational& x) const;
  Real operator()(const Real& x) const;
};

/// Exact quartic for a CP family at order r.
QuarticPoly build_quartic(const HypersurfaceFamily& family, int r);

/// The same coefficients (low to high) as integer polynomials in (n, k, r),
/// without checking that (n, k) is admissible. Used for identities in n.
std::array<Rational, 5> table_coefficients(FamilyType type, long n, long k, long r);

/// y^4 + p2 y^2 + p1 y + p0 after dividing by a4 and substituting x = y - shift.
struct DepressedQuartic {
  Rational p2;
  Rational p1;
  Rational p0;
  Rational shift;  // a3 / (4 a4)

  /// The monic quartic in x obtained by expanding (x + shift)^4 + ...
  RationalPolynomial expand_in_x() const;
};

DepressedQuartic depress(const QuarticPoly& poly);

/// a3^3 - 4 a4 a3 a2 + 8 a4^2 a1, the numerator of p1.
Rational biquadratic_relation(const QuarticPoly& poly);

/// Real solutions of y^4 + p2 y^2 + p0 = 0, ascending, without duplicates.
std::vector<Real> biquadratic_roots(const Rational& p2, const Rational& p0);

/// 1 + max |a_i / a4|.
Rational cauchy_bound(const QuarticPoly& poly);

/// Endpoint nudge applied when the quartic vanishes at a probe endpoint.
Rational endpoint_epsilon();

/// Distinct real roots in (lo, hi), counted with a Sturm sequence of the
/// square-free part.
int count_real_roots(const QuarticPoly& poly, const Rational& lo, const Rational& hi);

struct RootCertificate {
  Rational lo;  // isolating interval, exactly one root inside
  Rational hi;
  Real refined_root;
  std::optional<Rational> exact_root;  // set when bisection hits the root
  std::optional<Real> radius;
  std::optional<Real> residual_at_radius;
};

/// One certificate per distinct real root in (lo, hi), ordered by position.
/// Each interval is narrower than `tol` and |P(refined_root)| <= tol.
std::vector<RootCertificate> isolate_and_refine(const QuarticPoly& poly, const Rational& lo,
                                                const Rational& hi, const Rational& tol);

/// Inverts the family's substitution; x must lie in (0, 1).
Real root_to_radius(const HypersurfaceFamily& family, const Real& x);

}  // namespace hopf
