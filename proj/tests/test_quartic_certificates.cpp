#include "test_support.hpp"

#include <random>

#include "hopf/errors.hpp"
#include "hopf/polyharmonic_residual.hpp"
#include "hopf/quartic_certificates.hpp"

using namespace hopf;

namespace {

QuarticPoly q(long a4, long a3, long a2, long a1, long a0) {
  return QuarticPoly::from_coefficients(a4, a3, a2, a1, a0);
}

void check_coefficients(const QuarticPoly& p, std::array<long, 5> high_to_low) {
  CHECK(p.a4() == high_to_low[0]);
  CHECK(p.a3() == high_to_low[1]);
  CHECK(p.a2() == high_to_low[2]);
  CHECK(p.a1() == high_to_low[3]);
  CHECK(p.a0() == high_to_low[4]);
}

Rational pow10_inverse(int digits) {
  Integer scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  return Rational(1) / Rational(scale);
}

}  // namespace

TEST_CASE("build_quartic examples") {
  // Type D has a1 = -4r - 44: the sign that keeps P proportional to the
  // residual and gives P(1) = 25.
  const auto d = build_quartic(HypersurfaceFamily::make(FamilyType::cp_d, 9), 32);
  check_coefficients(d, {860, -1525, 846, -172, 16});
  CHECK(d.substitution == Substitution::cos2_2t);
  CHECK(d.r == 32);
  check_coefficients(build_quartic(HypersurfaceFamily::make(FamilyType::cp_a2, 3, 1), 2), {128, -256, 200, -72, 9});
  const auto a1 = build_quartic(HypersurfaceFamily::make(FamilyType::cp_a1, 2), 2);
  check_coefficients(a1, {72, -108, 58, -14, 1});
  CHECK(a1.substitution == Substitution::sin2_t);
}

TEST_CASE("build_quartic errors") {
  CHECK_THROWS_AS(build_quartic(HypersurfaceFamily::make(FamilyType::ch_a1_point, 3), 2), HopfError);
  try {
    build_quartic(HypersurfaceFamily::make(FamilyType::cp_b, 3), 1);
    FAIL("expected InvalidOrder");
  } catch (const HopfError& e) {
    CHECK(e.kind() == ErrorKind::invalid_order);
  }
}

TEST_CASE("oracle: every quartic is proportional to the residual in its variable") {
  // Clearing denominators multiplies the residual by (x(1-x))^2, so
  // P(x(t)) / ((x(1-x))^2 residual(t)) must not depend on t.
  for (const auto& family : cp_families(9)) {
    CAPTURE(family.name());
    for (int r : {2, 5, 40}) {
      const auto poly = build_quartic(family, r);
      std::vector<Real> ratios;
      for (const char* f : {"0.17", "0.41", "0.73"}) {
        const Real t = *family.radius_domain().hi * Real(f);
        const Real x = x_from_radius(family.substitution(), t);
        const Real w = x * (1 - x);
        ratios.push_back(poly(x) / (w * w * residual(family, t, r).residual));
      }
      CHECK(abs(ratios[0] - ratios[1]) <= Real("1e-30") * abs(ratios[0]));
      CHECK(abs(ratios[0] - ratios[2]) <= Real("1e-30") * abs(ratios[0]));
      CHECK(ratios[0] != 0);
    }
  }
}

TEST_CASE("property: leading coefficients are positive") {
  for (const auto& family : cp_families(25)) {
    for (int r : {2, 3, 10, 1000}) CHECK(build_quartic(family, r).a4() > 0);
  }
}

TEST_CASE("depress examples") {
  SUBCASE("monic without cubic term") {
    const auto d = depress(q(1, 0, 3, -2, 5));
    CHECK(d.p2 == 3);
    CHECK(d.p1 == -2);
    CHECK(d.p0 == 5);
    CHECK(d.shift == 0);
  }
  SUBCASE("A2 n=3 r=2") {
    const auto d = depress(q(128, -256, 200, -72, 9));
    CHECK(d.p1 == 0);
    CHECK(d.p2 == Rational(1, 16));
    CHECK(d.p0 == Rational(-1, 128));
    CHECK(d.shift == Rational(-1, 2));
  }
  SUBCASE("(x-1)^4") {
    const auto d = depress(q(1, -4, 6, -4, 1));
    CHECK(d.p2 == 0);
    CHECK(d.p1 == 0);
    CHECK(d.p0 == 0);
  }
  try {
    depress(q(0, 1, 2, 3, 4));
    FAIL("expected DegenerateLeadingCoefficient");
  } catch (const HopfError& e) {
    CHECK(e.kind() == ErrorKind::degenerate_leading_coefficient);
  }
}

TEST_CASE("property: depressed form expands back to the monic quartic") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> coef(-50, 50);
  for (int i = 0; i < 300; ++i) {
    long a4 = coef(rng);
    if (a4 == 0) a4 = 7;
    const auto p = q(a4, coef(rng), coef(rng), coef(rng), coef(rng));
    CHECK(depress(p).expand_in_x() == p.polynomial().monic());
  }
}

TEST_CASE("biquadratic examples") {
  const auto roots = biquadratic_roots(Rational(1, 16), Rational(-1, 128));
  REQUIRE(roots.size() == 2);
  CHECK(abs(roots[0] + Real(1) / 4) < Real("1e-45"));
  CHECK(abs(roots[1] - Real(1) / 4) < Real("1e-45"));
  const auto zero = biquadratic_roots(0, 0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0] == 0);
  CHECK(biquadratic_roots(1, 1).empty());
  CHECK(biquadratic_roots(3, 2).empty());  // y^2 in {-1, -2}
  CHECK(biquadratic_roots(-5, 4).size() == 4);  // y in {+-1, +-2}
}

TEST_CASE("biquadratic relation") {
  CHECK(biquadratic_relation(q(128, -256, 200, -72, 9)) == 0);
  CHECK(biquadratic_relation(q(72, -108, 58, -14, 1)) != 0);
  CHECK(biquadratic_relation(q(1, 0, 5, 0, 1)) == 0);
}

TEST_CASE("property: biquadratic roots agree with certified roots when p1 = 0") {
  for (int n : {3, 5, 7, 9, 11}) {
    const auto family = HypersurfaceFamily::make(FamilyType::cp_a2, n, (n - 1) / 2);
    for (int r = 2; r <= 25; ++r) {
      const auto poly = build_quartic(family, r);
      const auto d = depress(poly);
      REQUIRE(d.p1 == 0);
      std::vector<Real> from_closed_form;
      for (const auto& y : biquadratic_roots(d.p2, d.p0)) {
        const Real x = y - to_real(d.shift);
        if (x > 0 && x < 1) from_closed_form.push_back(x);
      }
      const auto certs = isolate_and_refine(poly, 0, 1, pow10_inverse(30));
      REQUIRE(certs.size() == from_closed_form.size());
      for (std::size_t i = 0; i < certs.size(); ++i) {
        CHECK(abs(certs[i].refined_root - from_closed_form[i]) < Real("1e-29"));
      }
    }
  }
}

TEST_CASE("cauchy bound examples") {
  CHECK(cauchy_bound(q(72, -108, 58, -14, 1)) == Rational(5, 2));
  CHECK(cauchy_bound(q(1, 0, 0, 0, 0)) == 1);
  CHECK(cauchy_bound(q(860, -1525, 846, -84, 16)) == Rational(477, 172));
  CHECK_THROWS_AS(cauchy_bound(q(0, 0, 1, 0, 1)), HopfError);
}

TEST_CASE("property: refined roots lie inside the Cauchy bound") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> coef(-1000, 1000);
  int roots_seen = 0;
  for (int i = 0; i < 1000; ++i) {
    long a4 = coef(rng);
    if (a4 == 0) a4 = 1;
    const auto p = q(a4, coef(rng), coef(rng), coef(rng), coef(rng));
    const Rational bound = cauchy_bound(p);
    for (const auto& c : isolate_and_refine(p, -bound, bound, pow10_inverse(20))) {
      CHECK(abs(c.refined_root) < to_real(bound));
      ++roots_seen;
    }
    // Nothing beyond the bound.
    CHECK(count_real_roots(p, bound, bound * 1000) == 0);
    CHECK(count_real_roots(p, -bound * 1000, -bound) == 0);
  }
  CHECK(roots_seen > 500);
}

TEST_CASE("count_real_roots examples") {
  CHECK(count_real_roots(q(128, -256, 200, -72, 9), 0, 1) == 2);
  CHECK(count_real_roots(q(72, -108, 58, -14, 1), 0, 1) == 2);
  CHECK(count_real_roots(q(1, 0, -1, 0, 0), -2, 2) == 3);
  // Root at an endpoint is nudged inward and then not counted.
  CHECK(count_real_roots(q(1, 0, -1, 0, 0), 0, 2) == 1);
  // x (x - eps) (x^2 + 1): the nudged endpoint is again a root.
  const Rational eps = endpoint_epsilon();
  CHECK(eps == Rational(1, Integer(1) << 32));
  const auto bad = QuarticPoly::from_coefficients(1, -eps, 1, -eps, 0);
  try {
    count_real_roots(bad, 0, 1);
    FAIL("expected EndpointRoot");
  } catch (const HopfError& e) {
    CHECK(e.kind() == ErrorKind::endpoint_root);
  }
}

TEST_CASE("property: Sturm count matches a 10^4-point sign-change oracle") {
  for (const auto& family : cp_families(10)) {
    for (int r : {2, 3, 8, 20, 60}) {
      const auto poly = build_quartic(family, r);
      std::array<long double, 5> a;
      for (int i = 0; i < 5; ++i) a[i] = poly.a[i].convert_to<long double>();
      auto eval = [&](long double x) { return (((a[4] * x + a[3]) * x + a[2]) * x + a[1]) * x + a[0]; };
      const int oracle = test::grid_sign_changes(eval, 0.0L, 1.0L, 10000);
      const int sturm = count_real_roots(poly, 0, 1);
      // Double roots do not change sign; the certified count can only be larger.
      CHECK(sturm >= oracle);
      if (sturm != oracle) {
        CHECK(square_free_part(poly.polynomial()).degree() < 4);
      }
    }
  }
}

TEST_CASE("isolate_and_refine examples") {
  SUBCASE("exact roots are bracketed") {
    const auto certs = isolate_and_refine(q(128, -256, 200, -72, 9), 0, 1, pow10_inverse(20));
    REQUIRE(certs.size() == 2);
    CHECK(certs[0].lo < Rational(1, 4));
    CHECK(certs[0].hi > Rational(1, 4));
    CHECK(certs[1].lo < Rational(3, 4));
    CHECK(certs[1].hi > Rational(3, 4));
    CHECK(certs[0].exact_root == Rational(1, 4));
    CHECK(certs[1].exact_root == Rational(3, 4));
    for (const auto& c : certs) CHECK(c.hi - c.lo < pow10_inverse(20));
  }
  SUBCASE("multiple root") {
    const auto certs = isolate_and_refine(q(1, -4, 6, -4, 1), 0, 2, pow10_inverse(10));
    REQUIRE(certs.size() == 1);
    CHECK(certs[0].exact_root == 1);
  }
  SUBCASE("A1 n=2 r=2") {
    const auto poly = q(72, -108, 58, -14, 1);
    const auto certs = isolate_and_refine(poly, 0, 1, pow10_inverse(15));
    REQUIRE(certs.size() == 2);
    CHECK(certs[0].refined_root > Real("0.1"));
    CHECK(certs[0].refined_root < Real("0.15"));
    CHECK(certs[1].refined_root > Real("0.7"));
    CHECK(certs[1].refined_root < Real("0.75"));
    for (const auto& c : certs) {
      CHECK(c.hi - c.lo < pow10_inverse(15));
      CHECK(abs(poly(c.refined_root)) <= to_real(pow10_inverse(15)));
      CHECK(count_real_roots(poly, c.lo, c.hi) == 1);
      CHECK(sign(poly(c.lo)) * sign(poly(c.hi)) < 0);
    }
  }
  SUBCASE("certificates carry the radius when a family is attached") {
    const auto family = HypersurfaceFamily::make(FamilyType::cp_a2, 3, 1);
    const auto certs = isolate_and_refine(build_quartic(family, 2), 0, 1, pow10_inverse(30));
    REQUIRE(certs.size() == 2);
    REQUIRE(certs[1].radius);
    CHECK(abs(*certs[1].radius - pi() / 6) < Real("1e-29"));
    REQUIRE(certs[1].residual_at_radius);
    CHECK(abs(*certs[1].residual_at_radius) < Real("1e-25"));
  }
}

TEST_CASE("root_to_radius examples") {
  CHECK(abs(root_to_radius(HypersurfaceFamily::make(FamilyType::cp_a1, 3), Real(1) / 2) - pi() / 4) <
        Real("1e-45"));
  CHECK(abs(root_to_radius(HypersurfaceFamily::make(FamilyType::cp_a2, 3, 1), Real(3) / 4) - pi() / 6) <
        Real("1e-45"));
  CHECK(abs(root_to_radius(HypersurfaceFamily::make(FamilyType::cp_b, 3), Real(1) / 4) - pi() / 6) <
        Real("1e-45"));
  for (const Real x : {Real(0), Real(1), Real("1.5"), Real(-1)}) {
    try {
      root_to_radius(HypersurfaceFamily::make(FamilyType::cp_b, 3), x);
      FAIL("expected RootOutOfRange");
    } catch (const HopfError& e) {
      CHECK(e.kind() == ErrorKind::root_out_of_range);
    }
  }
}

TEST_CASE("property: certificate round trip through the residual") {
  for (const auto& family : cp_families(8)) {
    for (int r : {2, 4, 13, 30}) {
      for (const auto& c : isolate_and_refine(build_quartic(family, r), 0, 1, pow10_inverse(30))) {
        const Real t = root_to_radius(family, c.refined_root);
        CHECK(family.admits_radius(t));
        CHECK(abs(residual(family, t, r).residual) <= Real("1e-9"));
      }
    }
  }
}
