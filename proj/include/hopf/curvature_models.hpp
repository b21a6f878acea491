#pragma once

// Principal-curvature data of the homogeneous Hopf hypersurfaces of CH^n(-4)
// and CP^n(4), as tubes of radius t over their focal submanifolds.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hopf/numeric.hpp"

namespace hopf {

enum class FamilyType {
  ch_a0,
  ch_a1_geodesic,  // tube over a totally geodesic CH^{n-1}: lambda = tanh t
  ch_a1_point,     // geodesic sphere, tube over CH^0: lambda = coth t
  ch_a2,
  ch_b,
  cp_a1,
  cp_a2,
  cp_b,
  cp_c,
  cp_d,
  cp_e,
};

std::string_view to_string(FamilyType type);

/// Accepts both the canonical tags ("CP_A1", "CH_A1_geodesic") and the short
/// CP forms used on the command line ("A1", "D").
std::optional<FamilyType> parse_family_type(std::string_view text);

/// Which power of which trigonometric function turns the radius into the
/// polynomial variable x in (0, 1).
enum class Substitution { sin2_t, cos2_t, cos2_2t };

std::string_view to_string(Substitution substitution);

struct RadiusDomain {
  Real lo;
  std::optional<Real> hi;  // nullopt: unbounded above (all CH tubes)
};

class HypersurfaceFamily {
 public:
  /// Validates the (type, n, k) combination; throws InvalidFamily otherwise.
  /// CP_A1 with n = 1 is the tube around a point of CP^1, a curve.
  static HypersurfaceFamily make(FamilyType type, int n, std::optional<int> k = std::nullopt);

  FamilyType type() const noexcept { return type_; }
  int n() const noexcept { return n_; }
  std::optional<int> k() const noexcept { return k_; }

  bool is_projective() const noexcept;
  int space_form_sign() const noexcept { return is_projective() ? 1 : -1; }
  /// Holomorphic sectional curvature used internally: +4 or -4.
  int holomorphic_curvature() const noexcept { return 4 * space_form_sign(); }
  int hypersurface_dimension() const noexcept { return 2 * n_ - 1; }

  bool has_radius() const noexcept { return type_ != FamilyType::ch_a0; }
  RadiusDomain radius_domain() const;
  bool admits_radius(const Real& t) const;

  /// Polynomial variable for the CP families; throws UnsupportedFamily for CH.
  Substitution substitution() const;

  std::string name() const;

  friend bool operator==(const HypersurfaceFamily&, const HypersurfaceFamily&) = default;

 private:
  HypersurfaceFamily(FamilyType type, int n, std::optional<int> k) : type_(type), n_(n), k_(k) {}

  FamilyType type_;
  int n_;
  std::optional<int> k_;
};

/// CH_B tubes of radius (1/2) ln(2 + sqrt 3) are not admissible.
Real ch_b_excluded_radius();

struct CurvatureBranch {
  Real lambda;
  int multiplicity;
};

struct CurvatureSpectrum {
  Real alpha;  // Hopf principal curvature, multiplicity 1
  std::vector<CurvatureBranch> branches;

  int total_multiplicity() const;  // 1 + sum of branch multiplicities
};

CurvatureSpectrum curvature_spectrum(const HypersurfaceFamily& family, const Real& t);

Real trace_shape(const CurvatureSpectrum& spectrum);
Real trace_shape_squared(const CurvatureSpectrum& spectrum);

/// Exact x-images of the radii where tr S = 0 and where tr S + 3 alpha = 0.
/// Both are rational for every CP family.
Rational minimal_x(const HypersurfaceFamily& family);
Rational r_independent_x(const HypersurfaceFamily& family);

struct SpecialRadii {
  std::optional<Real> t_minimal;
  std::optional<Real> t_r_independent;
};

SpecialRadii special_radii(const HypersurfaceFamily& family);

Real radius_from_x(Substitution substitution, const Real& x);
Real x_from_radius(Substitution substitution, const Real& t);

/// Curvatures of the same tube in the space form of holomorphic curvature c:
/// lambda -> (sqrt|c| / 2) lambda. The matching radius is (2 / sqrt|c|) t.
CurvatureSpectrum rescale_spectrum(const CurvatureSpectrum& spectrum, const Real& c);
Real rescale_radius(const Real& t, const Real& c);

/// Every admissible CP family with n <= n_max (A1 from n = 2; D and E whenever
/// their fixed dimension fits), ordered by (type, n, k).
std::vector<HypersurfaceFamily> cp_families(int n_max);
/// Every CH family with 2 <= n <= n_max.
std::vector<HypersurfaceFamily> ch_families(int n_max);

}  // namespace hopf
