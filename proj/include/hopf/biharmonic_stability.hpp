#pragma once

// Proper biharmonic tubes over totally geodesic CP^{n-p} in CP^n, and the
// sufficient condition for their normal index to be exactly one.

#include <optional>
#include <vector>

#include "hopf/curvature_models.hpp"

namespace hopf {

enum class Branch { plus, minus };

std::string_view to_string(Branch branch);

struct BiharmonicTube {
  int n = 0;
  int p = 0;
  Branch branch = Branch::plus;
  Real cos_sq_t;
  Real t;

  /// p = 1 is the A1 family, p >= 2 the A2 family with k = n - p.
  HypersurfaceFamily family() const;
};

/// A branch whose cos^2 t falls outside (0, 1): the tube collapses.
struct DegenerateBranch {
  Branch branch;
  Real cos_sq_t;
};

struct BiharmonicRadii {
  std::vector<BiharmonicTube> tubes;
  std::vector<DegenerateBranch> degenerate;
};

/// (3(n+1) - 2p +- sqrt(disc)) / (4(n+1)).
Real biharmonic_cos_sq(int n, int p, Branch branch);
Integer biharmonic_discriminant(int n, int p);

BiharmonicRadii biharmonic_radii(int n, int p);

struct LambdaMin {
  Real value;
  bool attained_by_alpha = false;
  std::size_t branch_index = 0;  // meaningful when !attained_by_alpha
};

LambdaMin lambda_min_squared(const CurvatureSpectrum& spectrum);

enum class IndexClaim { unstable_index_ge_1, index_exactly_1 };

std::string_view to_string(IndexClaim claim);

struct StabilityReport {
  int n = 0;
  int p = 0;
  Branch branch = Branch::plus;
  Real cos_sq_t;
  Real t;
  Real alpha;
  Real trace;
  Real trace_sq;
  Real lambda_min_sq;
  bool lambda_min_from_alpha = false;
  Real lhs;
  Real rhs;
  Real mu1_lower_bound;
  /// tr S (tr S + 3 alpha); positive means a constant normal variation
  /// decreases the bienergy.
  Real constant_witness;
  bool condition_holds = false;
  IndexClaim index_claim = IndexClaim::unstable_index_ge_1;
};

StabilityReport stability_condition(int n, int p, Branch branch);

/// Lower bound (n+1) - |tr S| / 2 for the first non-zero Laplace eigenvalue,
/// valid in CP^n where Ric = 2(n+1) g.
Real first_eigenvalue_bound(int n, const CurvatureSpectrum& spectrum);
Real first_eigenvalue_bound(int n, const Real& trace);

/// mu^2 + 4 lambda_min^2 mu - 4 tr S (tr S + 3 alpha).
Real eigen_quadratic(const Real& mu, const StabilityReport& report);

struct ThresholdScan {
  int p = 0;
  int n_max = 0;
  std::optional<int> first_hold;  // smallest n with the condition at t_+
  std::optional<int> threshold;   // smallest n with the condition for all n..n_max
  std::vector<int> failures_after_first_hold;

  bool monotone() const { return failures_after_first_hold.empty(); }
  /// Empirical C(p): n - p > C  <=>  n >= threshold.
  std::optional<int> empirical_c() const;
};

ThresholdScan index_threshold_scan(int p, int n_max);

struct AsymptoticErrors {
  Real four_cot_sq_2t;  // |4 cot^2 2t+ - 2n/(2p-1)| / n
  Real cot_sq_t;        // |cot^2 t+ - 2n/(2p-1)| / n
  Real tan_sq_t;        // |tan^2 t+ - (2p-1)/(2n)| * n
  Real trace;           // |tr S - 2 sqrt(4p-2) / sqrt n| * sqrt n
  Real trace_value;
};

AsymptoticErrors asymptotic_check(int p, int n);

}  // namespace hopf
