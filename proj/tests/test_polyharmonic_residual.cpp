#include "test_support.hpp"

#include "hopf/errors.hpp"
#include "hopf/polyharmonic_residual.hpp"

using namespace hopf;

namespace {

const auto kA2 = HypersurfaceFamily::make(FamilyType::cp_a2, 3, 1);
const auto kA1 = HypersurfaceFamily::make(FamilyType::cp_a1, 2);

}  // namespace

TEST_CASE("residual_value formula") {
  // (4/c) T2^2 - 2(n+1) T2 - (r-2) T^2 - 3 alpha (r-2) T
  CHECK(residual_value(Real(4), Real(6), Real(2), 2, 2, -4) == -72);
  CHECK(residual_value(Real(1), Real(2), Real(3), 5, 4, 4) == 4 - 24 - 2 - 18);
  CHECK(abs(default_tolerance() - Real("1e-10")) < Real("1e-60"));
}

TEST_CASE("residual examples") {
  SUBCASE("CP^1 curve at sin^2 2t = 1/r") {
    const auto curve = HypersurfaceFamily::make(FamilyType::cp_a1, 1);
    for (int r = 2; r <= 30; ++r) {
      const Real t = asin(1 / sqrt(Real(r))) / 2;
      CHECK(abs(residual(curve, t, r).residual) < Real("1e-40"));
    }
  }
  SUBCASE("A2 n=3 k=1 at pi/6 is proper biharmonic") {
    const auto rep = residual(kA2, pi() / 6, 2);
    CHECK(abs(rep.residual) < Real("1e-40"));
    CHECK_FALSE(rep.is_minimal);
    CHECK(rep.r == 2);
  }
  SUBCASE("horosphere") {
    const auto h = HypersurfaceFamily::make(FamilyType::ch_a0, 2);
    const auto rep = residual(h, Real(0), 2);
    CHECK(rep.residual == -72);
    CHECK(rep.trace == 4);
    CHECK(rep.trace_sq == 6);
    CHECK(rep.alpha == 2);
  }
}

TEST_CASE("residual errors") {
  try {
    residual(kA1, Real("0.3"), 1);
    FAIL("expected InvalidOrder");
  } catch (const HopfError& e) {
    CHECK(e.kind() == ErrorKind::invalid_order);
  }
  CHECK_THROWS_AS(residual(kA1, Real(2), 3), HopfError);
  CHECK_THROWS_AS(chn_scan(kA1, 2, std::vector<Real>{Real(1)}), HopfError);
}

TEST_CASE("is_proper_r_harmonic examples") {
  const Real tol("1e-10");
  CHECK(is_proper_r_harmonic(kA2, pi() / 6, 2, tol));
  CHECK_FALSE(is_proper_r_harmonic(kA1, pi() / 6, 5, tol));  // minimal radius
  CHECK(residual(kA1, pi() / 6, 5).is_minimal);
  CHECK_FALSE(is_proper_r_harmonic(kA1, pi() / 5, 2, tol));
  CHECK(abs(residual(kA1, pi() / 5, 2).residual) > Real("1e-3"));
}

TEST_CASE("oracle: residual against a long double evaluation") {
  // CP_A1 n=2: alpha = 2 cot 2t, lambda = -tan t (x2), c = 4.
  for (long double t : {0.2L, 0.5L, 1.1L}) {
    const long double a = 2 / std::tan(2 * t);
    const long double l = -std::tan(t);
    const long double tr = a + 2 * l;
    const long double t2 = a * a + 2 * l * l;
    for (int r : {2, 3, 9}) {
      const long double expected = t2 * t2 - 6 * t2 - (r - 2) * tr * tr - 3 * a * (r - 2) * tr;
      char text[64];
      std::snprintf(text, sizeof text, "%.21Lg", t);
      const auto got = residual(kA1, Real(text), r).residual;
      CHECK(test::as_ld(got) == doctest::Approx(expected).epsilon(1e-14));
    }
  }
}

TEST_CASE("CH scans") {
  SUBCASE("horosphere is constant") {
    const auto h = HypersurfaceFamily::make(FamilyType::ch_a0, 2);
    const std::vector<Real> grid{Real("0.1"), Real(1), Real(7)};
    const auto scan = chn_scan(h, 2, grid);
    CHECK(scan.max_residual == -72);
    CHECK(scan.points == 3);
    CHECK(scan.passed());
  }
  SUBCASE("geodesic tube, 1000 points on (0.01, 5)") {
    const auto f = HypersurfaceFamily::make(FamilyType::ch_a1_geodesic, 3);
    const auto grid = radius_grid(f, Real("0.01"), Real(5), 1000);
    CHECK(grid.size() == 1000);
    const auto scan = chn_scan(f, 4, grid);
    CHECK(scan.max_residual < 0);
    CHECK(scan.tail_limit < 0);
    CHECK(scan.passed());
  }
  SUBCASE("type B avoids the excluded radius") {
    const auto f = HypersurfaceFamily::make(FamilyType::ch_b, 2);
    const Real excluded = ch_b_excluded_radius();
    // A grid whose step lands exactly on the excluded radius.
    const auto grid = radius_grid(f, excluded / 2, excluded * 2, 4);
    for (const auto& t : grid) CHECK(f.admits_radius(t));
    CHECK(chn_scan(f, 3, grid).passed());
  }
  SUBCASE("orders are scanned together") {
    const auto f = HypersurfaceFamily::make(FamilyType::ch_a2, 5, 2);
    const auto grid = radius_grid(f, Real("0.05"), Real(6), 300);
    const auto scans = chn_scan_orders(f, 2, 6, grid);
    REQUIRE(scans.size() == 5);
    for (const auto& s : scans) {
      CHECK(s.passed());
      CHECK(abs(s.max_residual - chn_scan(f, s.r, grid).max_residual) < Real("1e-40"));
    }
  }
}

TEST_CASE("property: residual is affine in r") {
  for (const auto& family : cp_families(8)) {
    const auto domain = family.radius_domain();
    for (const char* f : {"0.13", "0.61"}) {
      const Real t = *domain.hi * Real(f);
      const Real r2 = residual(family, t, 2).residual;
      const Real r5 = residual(family, t, 5).residual;
      const Real r11 = residual(family, t, 11).residual;
      // Collinear in r.
      CHECK(abs((r5 - r2) / 3 - (r11 - r5) / 6) <= Real("1e-35") * (1 + abs(r11)));
      const auto rep = residual(family, t, 2);
      const Real slope = -(rep.trace * rep.trace + 3 * rep.alpha * rep.trace);
      CHECK(abs((r5 - r2) / 3 - slope) <= Real("1e-35") * (1 + abs(slope)));
    }
  }
}

TEST_CASE("property: the r-independent radius gives the same residual for every r") {
  for (const auto& family : cp_families(12)) {
    const auto special = special_radii(family);
    if (!special.t_r_independent) continue;
    const Real base = residual(family, *special.t_r_independent, 2).residual;
    for (int r : {7, 23}) {
      CHECK(abs(residual(family, *special.t_r_independent, r).residual - base) < Real("1e-30"));
    }
  }
}

TEST_CASE("property: CH residuals are negative on every family") {
  for (const auto& family : ch_families(6)) {
    CAPTURE(family.name());
    const auto grid = radius_grid(family, Real("1e-3"), Real(10), 500);
    for (const auto& s : chn_scan_orders(family, 2, 20, grid)) CHECK(s.passed());
  }
}
