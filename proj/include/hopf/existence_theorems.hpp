#pragma once

// Existence and exact-count statements for proper r-harmonic tubes in CP^n:
// the rational probe points used to pin signs of the quartic, the guaranteed
// order thresholds, certified solution counts and the closed-form A2 branch.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hopf/quartic_certificates.hpp"

namespace hopf {

struct ProbePoint {
  std::string label;  // "0", "x0", "x1", "x2", "1" (or "x*")
  Rational x;
  Rational value;
  int sign = 0;
};

struct ProbeReport {
  std::vector<ProbePoint> points;  // strictly increasing in x
  std::string expected_pattern;    // the sign pattern the existence argument needs

  std::string pattern() const;
  bool matches_expected() const { return pattern() == expected_pattern; }
};

/// Per-family probe points evaluated exactly. Throws ProbesCollide when r is
/// too small for the points to be strictly increasing inside [0, 1].
ProbeReport probe_values(const HypersurfaceFamily& family, int r);

struct ThresholdPair {
  long r_two = 2;                 // r >= r_two: at least two solutions
  std::optional<long> r_four;     // r >= r_four: exactly four (none for 2k = n-1)
};

ThresholdPair guaranteed_thresholds(const HypersurfaceFamily& family);

/// Proper r-harmonic radii: certified roots of the quartic in the family's
/// x-range, excluding the minimal radius. For the CP^1 curve (A1, n = 1) the
/// radii t and pi/2 - t give the same circle and are counted once.
int count_solutions(const HypersurfaceFamily& family, int r);

/// Open x-interval whose roots are reported as distinct solutions.
std::pair<Rational, Rational> solution_x_range(const HypersurfaceFamily& family);

struct A2ClosedForm {
  Real omega;
  Real x_plus;
  Real x_minus;
  Real cos_4t;
  // Filled when every radical involved is rational.
  std::optional<Rational> x_plus_exact;
  std::optional<Rational> x_minus_exact;
  std::optional<Rational> cos_4t_exact;
};

/// Explicit roots for A2 tubes over CP^{(n-1)/2}; n odd >= 3.
A2ClosedForm a2_closed_form(int n, int r);

struct KThresholds {
  Real k1;
  Real k2;
};

KThresholds a2_k_thresholds(int n);

Integer eta1(int n, int k);
Integer eta2(int n, int k);

/// Exact comparisons k < k1 and k > k2 without evaluating the square root.
bool below_k1(int n, int k);
bool above_k2(int n, int k);

/// Q(r) = 2 n^4 r^4 P_A1(1/(2n) + 1/(n r)) as a polynomial in r, coefficients
/// low to high. Its r^5 term cancels because P_A1(1/(2n)) does not depend on r.
RationalPolynomial a1_auxiliary_quartic(int n);

}  // namespace hopf
