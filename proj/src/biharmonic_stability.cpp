#include "hopf/biharmonic_stability.hpp"

#include "hopf/errors.hpp"

namespace hopf {

namespace {

void require_np(int n, int p) {
  if (n < 2 || p < 1 || p > n - 1) {
    throw HopfError(ErrorKind::invalid_argument,
                    "need n >= 2 and 1 <= p <= n-1, got n=" + std::to_string(n) +
                        ", p=" + std::to_string(p));
  }
}

Real cot(const Real& x) { return 1 / tan(x); }

}  // namespace

std::string_view to_string(Branch branch) { return branch == Branch::plus ? "plus" : "minus"; }

std::string_view to_string(IndexClaim claim) {
  return claim == IndexClaim::index_exactly_1 ? "index_exactly_1" : "unstable_index_ge_1";
}

HypersurfaceFamily BiharmonicTube::family() const {
  if (p == 1) return HypersurfaceFamily::make(FamilyType::cp_a1, n);
  return HypersurfaceFamily::make(FamilyType::cp_a2, n, n - p);
}

Integer biharmonic_discriminant(int n, int p) {
  const Integer N = n;
  const Integer P = p;
  return N * N + 6 * N - 4 * (N + 1) * P + 4 * P * P + 5;
}

Real biharmonic_cos_sq(int n, int p, Branch branch) {
  require_np(n, p);
  const Integer disc = biharmonic_discriminant(n, p);
  if (disc < 0) throw HopfError(ErrorKind::no_biharmonic_tube, "negative discriminant");
  const Real root = sqrt(Real(disc));
  const Real base = 3 * (n + 1) - 2 * p;
  return (branch == Branch::plus ? base + root : base - root) / (4 * (n + 1));
}

BiharmonicRadii biharmonic_radii(int n, int p) {
  BiharmonicRadii out;
  for (Branch branch : {Branch::plus, Branch::minus}) {
    Real c2 = biharmonic_cos_sq(n, p, branch);
    if (c2 > 0 && c2 < 1) {
      Real t = acos(sqrt(c2));
      out.tubes.push_back({n, p, branch, std::move(c2), std::move(t)});
    } else {
      out.degenerate.push_back({branch, std::move(c2)});
    }
  }
  return out;
}

LambdaMin lambda_min_squared(const CurvatureSpectrum& spectrum) {
  LambdaMin out{spectrum.alpha * spectrum.alpha, true, 0};
  for (std::size_t i = 0; i < spectrum.branches.size(); ++i) {
    Real sq = spectrum.branches[i].lambda * spectrum.branches[i].lambda;
    if (sq < out.value) out = {std::move(sq), false, i};
  }
  return out;
}

StabilityReport stability_condition(int n, int p, Branch branch) {
  const auto radii = biharmonic_radii(n, p);
  const BiharmonicTube* tube = nullptr;
  for (const auto& candidate : radii.tubes) {
    if (candidate.branch == branch) tube = &candidate;
  }
  if (tube == nullptr) {
    throw HopfError(ErrorKind::degenerate_tube, "branch " + std::string(to_string(branch)) +
                                                    " collapses for n=" + std::to_string(n) +
                                                    ", p=" + std::to_string(p));
  }
  const auto spectrum = curvature_spectrum(tube->family(), tube->t);
  const auto lmin = lambda_min_squared(spectrum);

  StabilityReport out;
  out.n = n;
  out.p = p;
  out.branch = branch;
  out.cos_sq_t = tube->cos_sq_t;
  out.t = tube->t;
  out.alpha = spectrum.alpha;
  out.trace = trace_shape(spectrum);
  out.trace_sq = trace_shape_squared(spectrum);
  out.lambda_min_sq = lmin.value;
  out.lambda_min_from_alpha = lmin.attained_by_alpha;
  const Real abs_trace = abs(out.trace);
  out.lhs = (n + 1) * (4 * lmin.value + n + 1);
  out.rhs = Real(15) / 4 * out.trace * out.trace + (2 * lmin.value + n + 1) * abs_trace +
            12 * out.alpha * out.trace;
  out.mu1_lower_bound = first_eigenvalue_bound(n, out.trace);
  out.constant_witness = out.trace * (out.trace + 3 * out.alpha);
  out.condition_holds = out.lhs > out.rhs;
  out.index_claim = out.condition_holds ? IndexClaim::index_exactly_1 : IndexClaim::unstable_index_ge_1;
  return out;
}

Real first_eigenvalue_bound(int n, const Real& trace) { return (n + 1) - abs(trace) / 2; }

Real first_eigenvalue_bound(int n, const CurvatureSpectrum& spectrum) {
  return first_eigenvalue_bound(n, trace_shape(spectrum));
}

Real eigen_quadratic(const Real& mu, const StabilityReport& report) {
  return mu * mu + 4 * report.lambda_min_sq * mu - 4 * report.constant_witness;
}

std::optional<int> ThresholdScan::empirical_c() const {
  if (!threshold) return std::nullopt;
  return *threshold - p - 1;
}

ThresholdScan index_threshold_scan(int p, int n_max) {
  if (p < 1 || n_max <= p + 1) {
    throw HopfError(ErrorKind::invalid_argument, "need p >= 1 and n_max > p + 1");
  }
  ThresholdScan out;
  out.p = p;
  out.n_max = n_max;
  std::optional<int> last_failure;
  for (int n = p + 2; n <= n_max; ++n) {
    const bool holds = stability_condition(n, p, Branch::plus).condition_holds;
    if (holds && !out.first_hold) out.first_hold = n;
    if (!holds) {
      last_failure = n;
      if (out.first_hold) out.failures_after_first_hold.push_back(n);
    }
  }
  if (out.first_hold) {
    const int start = last_failure ? *last_failure + 1 : p + 2;
    if (start <= n_max) out.threshold = start;
  }
  return out;
}

AsymptoticErrors asymptotic_check(int p, int n) {
  const auto report = stability_condition(n, p, Branch::plus);
  const Real& t = report.t;
  const Real lead = Real(2 * n) / (2 * p - 1);
  const Real c2t = cot(2 * t);
  const Real ct = cot(t);
  const Real tt = tan(t);
  const Real root_n = sqrt(Real(n));
  AsymptoticErrors out;
  out.four_cot_sq_2t = abs(4 * c2t * c2t - lead) / n;
  out.cot_sq_t = abs(ct * ct - lead) / n;
  out.tan_sq_t = abs(tt * tt - Real(2 * p - 1) / (2 * n)) * n;
  out.trace = abs(report.trace - 2 * sqrt(Real(4 * p - 2)) / root_n) * root_n;
  out.trace_value = report.trace;
  return out;
}

}  // namespace hopf
