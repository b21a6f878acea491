#pragma once

// Left-hand side of the r-harmonicity equation for homogeneous Hopf
// hypersurfaces of a complex space form N^n(c):
//
//   (4/c)(tr S^2)^2 - 2(n+1) tr S^2 - (r-2)(tr S)^2 - 3 alpha (r-2) tr S.
//
// A non-minimal tube is proper r-harmonic exactly when this vanishes.

#include <span>
#include <vector>

#include "hopf/curvature_models.hpp"

namespace hopf {

/// Default threshold for zero tests on the residual and on tr S.
Real default_tolerance();

struct ResidualReport {
  Real residual;
  Real trace;
  Real trace_sq;
  Real alpha;
  int r = 2;
  bool is_minimal = false;
};

Real residual_value(const Real& trace, const Real& trace_sq, const Real& alpha, int n, int r,
                    int c);

/// Residual of an already evaluated spectrum; lets scans reuse one spectrum
/// across many orders r.
ResidualReport residual_from_spectrum(const CurvatureSpectrum& spectrum, int n, int c, int r,
                                      const Real& tol = default_tolerance());

ResidualReport residual(const HypersurfaceFamily& family, const Real& t, int r,
                        const Real& tol = default_tolerance());

bool is_proper_r_harmonic(const HypersurfaceFamily& family, const Real& t, int r,
                          const Real& tol = default_tolerance());

struct ScanResult {
  int r = 2;
  Real max_residual;
  Real argmax_t;
  std::size_t points = 0;
  /// Residual of the limiting spectrum as t -> infinity (the horosphere data).
  Real tail_limit;

  bool passed() const { return max_residual < 0 && tail_limit < 0; }
};

/// Maximum residual over `grid` for a CH family. Grid radii must lie in the
/// domain; CH_A0 ignores the radius.
ScanResult chn_scan(const HypersurfaceFamily& family, int r, std::span<const Real> grid);

/// One scan per order in [r_lo, r_hi]; each radius is evaluated once.
std::vector<ScanResult> chn_scan_orders(const HypersurfaceFamily& family, int r_lo, int r_hi,
                                        std::span<const Real> grid);

/// `count` evenly spaced points on [lo, hi], nudging any point that lands on
/// the CH_B excluded radius.
std::vector<Real> radius_grid(const HypersurfaceFamily& family, const Real& lo, const Real& hi,
                              std::size_t count);

}  // namespace hopf
