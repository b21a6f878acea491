#pragma once

// Named invariant suites behind `hopf verify`. Each check records the
// statement it exercises so that failures are self-describing.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hopf/quartic_certificates.hpp"

namespace hopf {

struct Check {
  std::string name;
  std::string tag;  // which statement this exercises, e.g. "A1 existence argument"
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  int n_max_exact = 200;
  int n_max_cross = 20;
  int r_max_cross = 30;
  std::size_t cross_grid = 1000;
  int n_max_ch = 10;
  int r_max_ch = 20;
  std::size_t ch_grid = 10000;
  std::size_t trig_points = 1000;
  int n_max_biharmonic = 60;
  std::uint64_t seed = 20240601;
  Real residual_tol{"1e-9"};
  Rational isolation_tol{Rational(1, Integer(10) * Integer("1000000000000000000000000000000"))};
};

std::span<const std::string_view> suite_names();

/// Runs one suite ("exact", "cross", "ch-nonexistence", "trig", "biharmonic",
/// "counts") or all of them ("all"). Throws InvalidArgument on unknown names.
std::vector<Check> run_suite(std::string_view suite, const VerifyOptions& options = {});

struct CrossCheck {
  int r = 2;
  std::vector<RootCertificate> certificates;
  Real worst_residual;            // max |residual| over certified radii
  std::size_t sign_changes = 0;   // residual sign flips along the grid
  std::size_t uncovered = 0;      // flips not bracketing any certified radius

  bool passed(const Real& tol) const { return worst_residual <= tol && uncovered == 0; }
};

/// Certificates for every order in [r_lo, r_hi], each checked against the
/// residual at the recovered radius and against a residual sign scan on
/// `grid_points` interior radii.
std::vector<CrossCheck> cross_check_orders(const HypersurfaceFamily& family, int r_lo, int r_hi,
                                           std::size_t grid_points, const Rational& isolation_tol);

/// Deterministic radii in (0, pi/4) from a seeded 64-bit Mersenne twister.
std::vector<Real> random_quarter_radii(std::size_t count, std::uint64_t seed);

}  // namespace hopf
