#include "hopf/polyharmonic_residual.hpp"

#include "hopf/errors.hpp"

namespace hopf {

namespace {

void require_order(int r) {
  if (r < 2) throw HopfError(ErrorKind::invalid_order, "r must be >= 2, got " + std::to_string(r));
}

void require_hyperbolic(const HypersurfaceFamily& family) {
  if (family.is_projective()) {
    throw HopfError(ErrorKind::unsupported_family, family.name() + " is not a CH^n family");
  }
}

}  // namespace

Real default_tolerance() { return Real("1e-10"); }

Real residual_value(const Real& trace, const Real& trace_sq, const Real& alpha, int n, int r,
                    int c) {
  const Real order = r - 2;
  return Real(4) / c * trace_sq * trace_sq - 2 * (n + 1) * trace_sq - order * trace * trace -
         3 * alpha * order * trace;
}

ResidualReport residual_from_spectrum(const CurvatureSpectrum& spectrum, int n, int c, int r,
                                      const Real& tol) {
  require_order(r);
  ResidualReport out;
  out.trace = trace_shape(spectrum);
  out.trace_sq = trace_shape_squared(spectrum);
  out.alpha = spectrum.alpha;
  out.r = r;
  out.residual = residual_value(out.trace, out.trace_sq, out.alpha, n, r, c);
  out.is_minimal = abs(out.trace) < tol;
  return out;
}

ResidualReport residual(const HypersurfaceFamily& family, const Real& t, int r, const Real& tol) {
  require_order(r);
  return residual_from_spectrum(curvature_spectrum(family, t), family.n(),
                                family.holomorphic_curvature(), r, tol);
}

bool is_proper_r_harmonic(const HypersurfaceFamily& family, const Real& t, int r,
                          const Real& tol) {
  if (!(tol > 0)) throw HopfError(ErrorKind::invalid_argument, "tolerance must be positive");
  const auto report = residual(family, t, r, tol);
  return abs(report.residual) <= tol && abs(report.trace) > tol;
}

ScanResult chn_scan(const HypersurfaceFamily& family, int r, std::span<const Real> grid) {
  return chn_scan_orders(family, r, r, grid).front();
}

std::vector<ScanResult> chn_scan_orders(const HypersurfaceFamily& family, int r_lo, int r_hi,
                                        std::span<const Real> grid) {
  require_hyperbolic(family);
  require_order(r_lo);
  if (r_hi < r_lo) throw HopfError(ErrorKind::invalid_argument, "empty order range");
  if (grid.empty()) throw HopfError(ErrorKind::invalid_argument, "empty radius grid");

  const int n = family.n();
  const int c = family.holomorphic_curvature();
  // Every CH tube flattens to the horosphere spectrum as t grows.
  const auto horosphere = curvature_spectrum(HypersurfaceFamily::make(FamilyType::ch_a0, n), Real(1));

  std::vector<ScanResult> out;
  for (int r = r_lo; r <= r_hi; ++r) {
    ScanResult scan;
    scan.r = r;
    scan.tail_limit = residual_from_spectrum(horosphere, n, c, r).residual;
    out.push_back(std::move(scan));
  }
  // The residual is affine in r: base + (r - 2) * slope.
  for (const auto& t : grid) {
    const auto spectrum = curvature_spectrum(family, t);
    const Real trace = trace_shape(spectrum);
    const Real base = residual_value(trace, trace_shape_squared(spectrum), spectrum.alpha, n, 2, c);
    const Real slope = -trace * (trace + 3 * spectrum.alpha);
    for (auto& scan : out) {
      Real value = base + (scan.r - 2) * slope;
      if (scan.points == 0 || value > scan.max_residual) {
        scan.max_residual = std::move(value);
        scan.argmax_t = t;
      }
      ++scan.points;
    }
  }
  return out;
}

std::vector<Real> radius_grid(const HypersurfaceFamily& family, const Real& lo, const Real& hi,
                              std::size_t count) {
  if (count == 0 || !(hi > lo)) throw HopfError(ErrorKind::invalid_argument, "bad grid bounds");
  std::vector<Real> out;
  out.reserve(count);
  const Real step = count == 1 ? Real(0) : (hi - lo) / (count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    Real t = lo + step * i;
    if (family.has_radius() && !family.admits_radius(t) && t > 0) t += step / 2;
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace hopf
