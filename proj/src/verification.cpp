#include "hopf/verification.hpp"

#include <array>
#include <random>
#include <sstream>

#include "hopf/biharmonic_stability.hpp"
#include "hopf/errors.hpp"
#include "hopf/existence_theorems.hpp"
#include "hopf/polyharmonic_residual.hpp"

namespace hopf {

namespace {

constexpr std::array<std::string_view, 6> kSuites{"exact",      "cross", "ch-nonexistence",
                                                  "trig",       "biharmonic", "counts"};

Rational eval_table(FamilyType type, long n, long k, long r, const Rational& x) {
  const auto a = table_coefficients(type, n, k, r);
  return (((a[4] * x + a[3]) * x + a[2]) * x + a[1]) * x + a[0];
}

// Accumulates a pass/fail count for one named statement.
class Tally {
 public:
  Tally(std::string name, std::string tag) : name_(std::move(name)), tag_(std::move(tag)) {}

  void expect(bool ok, const std::string& what) {
    ++total_;
    if (!ok && failures_++ == 0) first_failure_ = what;
  }

  Check finish() const {
    std::ostringstream detail;
    detail << (total_ - failures_) << "/" << total_ << " cases";
    if (failures_ > 0) detail << "; first failure: " << first_failure_;
    return {name_, tag_, failures_ == 0 && total_ > 0, detail.str()};
  }

 private:
  std::string name_;
  std::string tag_;
  long total_ = 0;
  long failures_ = 0;
  std::string first_failure_;
};

std::string case_label(long n, long k = -1, long r = -1) {
  std::string out = "n=" + std::to_string(n);
  if (k >= 0) out += " k=" + std::to_string(k);
  if (r >= 0) out += " r=" + std::to_string(r);
  return out;
}

std::vector<Check> exact_suite(const VerifyOptions& options) {
  const int n_max = options.n_max_exact;
  constexpr std::array<long, 4> orders{2, 3, 17, 1000};
  Tally a1_x0("A1 probe 2n^4 P(1/(2n))", "A1 existence argument");
  Tally a1_x2("A1 probe (n+3)^4 P(2/(n+3))", "A1 existence argument");
  Tally b_x1("B probe n^4 P(1/n)", "B existence argument");
  Tally c_x1("C probe n^4 P(2/n)", "C existence argument");
  Tally a2_star("A2 probe 2n^4 P((2k+1)/(2n))", "A2 existence argument");
  Tally boundary("boundary values P(0), P(1)", "CP existence arguments");
  Tally aux("A1 auxiliary quartic Q(r) coefficients", "A1 existence argument");
  Tally relation("A2 biquadratic relation for 2k = n-1", "A2 existence argument");
  Tally depressed("depressed quartic expansion", "quartic reduction");

  for (long n = 2; n <= n_max; ++n) {
    const Integer N = n;
    for (long r : orders) {
      const auto label = case_label(n, -1, r);
      a1_x0.expect(2 * N * N * N * N * eval_table(FamilyType::cp_a1, n, 0, r, Rational(1, 2 * n)) ==
                       -(N - 1) * (2 * N - 1) * (2 * N - 1),
                   label);
      a1_x2.expect((N + 3) * (N + 3) * (N + 3) * (N + 3) *
                           eval_table(FamilyType::cp_a1, n, 0, r, Rational(2, n + 3)) ==
                       -(3 * N * N + 2 * N + 11) * (N + 7) * (N - 1),
                   label);
      b_x1.expect(N * N * N * N * eval_table(FamilyType::cp_b, n, 0, r, Rational(1, n)) ==
                      2 * (3 * N - 1) * (N - 1) * (N - 1) * (N - 1),
                  label);
      c_x1.expect(N * N * N * N * eval_table(FamilyType::cp_c, n, 0, r, Rational(2, n)) ==
                      8 * (3 * N - 1) * (N - 1) * (N - 2) * (N - 2),
                  label);
      boundary.expect(eval_table(FamilyType::cp_a1, n, 0, r, 0) == 1 &&
                          eval_table(FamilyType::cp_a1, n, 0, r, 1) == (2 * N - 1) * (2 * N - 1) &&
                          eval_table(FamilyType::cp_b, n, 0, r, 0) == 4 &&
                          eval_table(FamilyType::cp_b, n, 0, r, 1) == 4 * (N - 1) * (N - 1) &&
                          eval_table(FamilyType::cp_c, n, 0, r, 0) == 16 &&
                          eval_table(FamilyType::cp_c, n, 0, r, 1) == 4 * (N - 2) * (N - 2),
                      label);
      for (long k = 1; k <= n - 2; ++k) {
        const Integer K = k;
        a2_star.expect(2 * N * N * N * N *
                               eval_table(FamilyType::cp_a2, n, k, r, Rational(2 * k + 1, 2 * n)) ==
                           -(N - 1) * (2 * N - 2 * K - 1) * (2 * N - 2 * K - 1) * (2 * K + 1) *
                               (2 * K + 1),
                       case_label(n, k, r));
        boundary.expect(eval_table(FamilyType::cp_a2, n, k, r, 0) == (2 * K + 1) * (2 * K + 1) &&
                            eval_table(FamilyType::cp_a2, n, k, r, 1) ==
                                (2 * K - 2 * N + 1) * (2 * K - 2 * N + 1),
                        case_label(n, k, r));
      }
    }
    const auto q = a1_auxiliary_quartic(static_cast<int>(n));
    aux.expect(q.degree() == 4 && q.coeff(4) == (2 * N - 1) * (N * N - 1) &&
                   q.coeff(3) == -2 * (2 * N * N * N * N + N * N * N - 2 * N * N + 7 * N - 4) &&
                   q.coeff(2) == -4 * (2 * N * N * N - 7 * N * N + 9 * N - 6) &&
                   q.coeff(1) == 8 * (N * N * N + 4 * N * N - 5 * N + 4) &&
                   q.coeff(0) == -16 * (N - 1),
               case_label(n));
  }
  for (long r = 2; r <= 200; ++r) {
    boundary.expect(eval_table(FamilyType::cp_d, 9, 0, r, 0) == 16 &&
                        eval_table(FamilyType::cp_d, 9, 0, r, 1) == 25,
                    "D " + case_label(9, -1, r));
  }
  for (int n = 3; n <= 9; n += 2) {
    const auto family = HypersurfaceFamily::make(FamilyType::cp_a2, n, (n - 1) / 2);
    for (int r = 2; r <= 40; ++r) {
      relation.expect(biquadratic_relation(build_quartic(family, r)) == 0, case_label(n, (n - 1) / 2, r));
    }
  }
  for (const auto& family : cp_families(12)) {
    for (int r : {2, 7, 31}) {
      const auto poly = build_quartic(family, r);
      const auto d = depress(poly);
      depressed.expect(d.expand_in_x() == poly.polynomial().monic(), family.name());
    }
  }
  return {a1_x0.finish(),    a1_x2.finish(),    b_x1.finish(),     c_x1.finish(),     a2_star.finish(),
          boundary.finish(), aux.finish(),      relation.finish(), depressed.finish()};
}

std::vector<Check> cross_suite(const VerifyOptions& options) {
  Tally roots("certified roots have vanishing residual", "quartic <-> r-harmonic equation");
  Tally coverage("residual sign changes lie in certified intervals", "quartic <-> r-harmonic equation");
  Tally bound("refined roots below the Cauchy bound", "Cauchy bound");
  for (const auto& family : cp_families(options.n_max_cross)) {
    const auto checks =
        cross_check_orders(family, 2, options.r_max_cross, options.cross_grid, options.isolation_tol);
    for (const auto& check : checks) {
      const auto label = family.name() + " r=" + std::to_string(check.r);
      roots.expect(check.worst_residual <= options.residual_tol,
                   label + " |residual|=" + format_real(check.worst_residual, 6));
      coverage.expect(check.uncovered == 0, label);
      const Real limit = to_real(cauchy_bound(build_quartic(family, check.r)));
      for (const auto& cert : check.certificates) bound.expect(abs(cert.refined_root) < limit, label);
    }
  }
  return {roots.finish(), coverage.finish(), bound.finish()};
}

std::vector<Check> ch_suite(const VerifyOptions& options) {
  Tally negative("CH residual strictly negative", "CH non-existence");
  for (const auto& family : ch_families(options.n_max_ch)) {
    const auto grid = radius_grid(family, Real("1e-3"), Real(10), options.ch_grid);
    for (const auto& scan : chn_scan_orders(family, 2, options.r_max_ch, grid)) {
      negative.expect(scan.passed() && scan.max_residual < Real("-1e-6"),
                      family.name() + " r=" + std::to_string(scan.r) +
                          " max=" + format_real(scan.max_residual, 6));
    }
  }
  return {negative.finish()};
}

std::vector<Check> trig_suite(const VerifyOptions& options) {
  Tally first("sum cot(t - j pi/4) = 4 cot 4t", "cotangent sums for C, D, E");
  Tally second("sum cot^2(t - j pi/4) = 12 + 16 cot^2 4t", "cotangent sums for C, D, E");
  const Real quarter = pi() / 4;
  for (const auto& t : random_quarter_radii(options.trig_points, options.seed)) {
    Real sum = 0;
    Real sum_sq = 0;
    Real scale = 0;
    for (int j = 0; j < 4; ++j) {
      const Real c = 1 / tan(t - j * quarter);
      sum += c;
      sum_sq += c * c;
      scale += abs(c);
    }
    const Real c4 = 1 / tan(4 * t);
    const Real rhs_sq = 12 + 16 * c4 * c4;
    first.expect(abs(sum - 4 * c4) <= Real("1e-10") * scale, "t=" + format_real(t));
    second.expect(abs(sum_sq - rhs_sq) <= Real("1e-10") * rhs_sq, "t=" + format_real(t));
  }
  return {first.finish(), second.finish()};
}

std::vector<Check> biharmonic_suite(const VerifyOptions& options) {
  Tally identity("tr S^2 = 2(n+1) at every biharmonic tube", "biharmonic classification");
  Tally quartic_root("biharmonic radii are roots of the r = 2 quartic", "biharmonic classification");
  Tally witness("constant variation witness tr S (tr S + 3 alpha) > 0", "instability");
  for (int n = 2; n <= options.n_max_biharmonic; ++n) {
    for (int p = 1; p <= n - 1; ++p) {
      for (const auto& tube : biharmonic_radii(n, p).tubes) {
        const auto family = tube.family();
        const auto spectrum = curvature_spectrum(family, tube.t);
        const auto label = case_label(n) + " p=" + std::to_string(p) + " " +
                           std::string(to_string(tube.branch));
        identity.expect(abs(trace_shape_squared(spectrum) - 2 * (n + 1)) <= Real("1e-10"), label);
        const auto poly = build_quartic(family, 2);
        const Real x = x_from_radius(family.substitution(), tube.t);
        bool certified = false;
        for (const auto& cert : isolate_and_refine(poly, 0, 1, options.isolation_tol)) {
          certified = certified || abs(cert.refined_root - x) <= Real("1e-20");
        }
        quartic_root.expect(certified, label);
        const Real tr = trace_shape(spectrum);
        witness.expect(tr * (tr + 3 * spectrum.alpha) > 0, label);
      }
    }
  }
  return {identity.finish(), quartic_root.finish(), witness.finish()};
}

std::vector<Check> counts_suite(const VerifyOptions&) {
  Tally four("exactly four solutions above r_four", "exact-count thresholds");
  Tally two("at least two solutions above r_two", "two-solution thresholds");
  Tally probes("probe sign patterns above r_four", "CP existence arguments");
  std::vector<HypersurfaceFamily> families = cp_families(10);
  families.push_back(HypersurfaceFamily::make(FamilyType::cp_e, 15));
  for (const auto& family : families) {
    ThresholdPair pair;
    try {
      pair = guaranteed_thresholds(family);
    } catch (const HopfError& e) {
      if (e.kind() != ErrorKind::no_exact_count_guarantee) throw;
      pair = {2, std::nullopt};
    }
    for (long r : {pair.r_two, pair.r_two + 1, pair.r_two + 13}) {
      two.expect(count_solutions(family, static_cast<int>(r)) >= 2, family.name() + " r=" + std::to_string(r));
    }
    if (pair.r_four) {
      for (long r : {*pair.r_four, *pair.r_four + 1, *pair.r_four + 50}) {
        const auto label = family.name() + " r=" + std::to_string(r);
        four.expect(count_solutions(family, static_cast<int>(r)) == 4, label);
        probes.expect(probe_values(family, static_cast<int>(r)).matches_expected(), label);
      }
    }
  }
  return {two.finish(), four.finish(), probes.finish()};
}

}  // namespace

std::span<const std::string_view> suite_names() { return kSuites; }

std::vector<Check> run_suite(std::string_view suite, const VerifyOptions& options) {
  if (suite == "all") {
    std::vector<Check> out;
    for (auto name : kSuites) {
      auto part = run_suite(name, options);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  if (suite == "exact") return exact_suite(options);
  if (suite == "cross") return cross_suite(options);
  if (suite == "ch-nonexistence") return ch_suite(options);
  if (suite == "trig") return trig_suite(options);
  if (suite == "biharmonic") return biharmonic_suite(options);
  if (suite == "counts") return counts_suite(options);
  throw HopfError(ErrorKind::invalid_argument, "unknown suite '" + std::string(suite) + "'");
}

std::vector<CrossCheck> cross_check_orders(const HypersurfaceFamily& family, int r_lo, int r_hi,
                                           std::size_t grid_points, const Rational& isolation_tol) {
  if (grid_points < 2) throw HopfError(ErrorKind::invalid_argument, "need at least two grid points");
  const auto domain = family.radius_domain();
  const Real width = *domain.hi - domain.lo;
  std::vector<Real> grid;
  std::vector<CurvatureSpectrum> spectra;
  grid.reserve(grid_points);
  spectra.reserve(grid_points);
  for (std::size_t i = 0; i < grid_points; ++i) {
    grid.push_back(domain.lo + width * (Real(i) + Real(1) / 2) / grid_points);
    spectra.push_back(curvature_spectrum(family, grid.back()));
  }
  const auto substitution = family.substitution();

  std::vector<CrossCheck> out;
  for (int r = r_lo; r <= r_hi; ++r) {
    CrossCheck check;
    check.r = r;
    check.certificates = isolate_and_refine(build_quartic(family, r), 0, 1, isolation_tol);
    check.worst_residual = 0;
    std::vector<std::pair<Real, Real>> radius_intervals;
    for (const auto& cert : check.certificates) {
      if (cert.residual_at_radius) {
        check.worst_residual = std::max<Real>(check.worst_residual, abs(*cert.residual_at_radius));
      }
      const Real lo = to_real(cert.lo);
      const Real hi = to_real(cert.hi);
      Real a = radius_from_x(substitution, std::max<Real>(lo, Real(0)));
      Real b = radius_from_x(substitution, std::min<Real>(hi, Real(1)));
      if (a > b) std::swap(a, b);
      radius_intervals.emplace_back(std::move(a), std::move(b));
    }
    int previous = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const int s = sign(residual_from_spectrum(spectra[i], family.n(), 4, r).residual);
      if (i > 0 && s != previous) {
        ++check.sign_changes;
        bool covered = false;
        for (const auto& [a, b] : radius_intervals) {
          covered = covered || (a <= grid[i] && b >= grid[i - 1]);
        }
        if (!covered) ++check.uncovered;
      }
      previous = s;
    }
    out.push_back(std::move(check));
  }
  return out;
}

std::vector<Real> random_quarter_radii(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  const Real quarter = pi() / 4;
  const Real scale = Real(1) / Real(Integer(1) << 53);
  std::vector<Real> out;
  out.reserve(count);
  while (out.size() < count) {
    const auto bits = engine() >> 11;
    if (bits == 0) continue;
    out.push_back(quarter * Real(bits) * scale);
  }
  return out;
}

}  // namespace hopf
