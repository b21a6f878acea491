#include "hopf/quartic_certificates.hpp"

#include <algorithm>

#include "hopf/errors.hpp"
#include "hopf/polyharmonic_residual.hpp"

namespace hopf {

namespace {

void require_leading(const QuarticPoly& poly) {
  if (poly.a4() == 0) {
    throw HopfError(ErrorKind::degenerate_leading_coefficient, "a4 = 0, not a quartic");
  }
}

struct PreparedInterval {
  Rational lo;
  Rational hi;
};

PreparedInterval prepare_endpoints(const RationalPolynomial& p, Rational lo, Rational hi) {
  if (!(lo < hi)) throw HopfError(ErrorKind::invalid_argument, "need lo < hi");
  if (p(lo) == 0) lo += endpoint_epsilon();
  if (p(hi) == 0) hi -= endpoint_epsilon();
  if (!(lo < hi) || p(lo) == 0 || p(hi) == 0) {
    throw HopfError(ErrorKind::endpoint_root, "interval endpoint is a root after perturbation");
  }
  return {std::move(lo), std::move(hi)};
}

struct Isolator {
  RationalPolynomial original;
  RationalPolynomial square_free;
  std::vector<RationalPolynomial> sturm;

  int count(const Rational& lo, const Rational& hi) const { return sturm_count(sturm, lo, hi); }

  // Shrinks around an exact root until the interval is narrower than `width`
  // and still isolates it.
  RootCertificate around_exact(const Rational& root, const Rational& lo, const Rational& hi,
                               const Rational& width) const {
    Rational delta = std::min<Rational>(root - lo, hi - root);
    while (!(2 * delta < width) || square_free(Rational(root - delta)) == 0 ||
           square_free(Rational(root + delta)) == 0 || count(Rational(root - delta), Rational(root + delta)) != 1) {
      delta /= 2;
    }
    return {root - delta, root + delta, to_real(root), root, std::nullopt, std::nullopt};
  }

  RootCertificate refine(Rational lo, Rational hi, const Rational& tol) const {
    const int sign_lo = sign(square_free(lo));
    for (;;) {
      const Rational mid = (lo + hi) / 2;
      const Rational value = square_free(mid);
      if (value == 0) return around_exact(mid, lo, hi, tol);
      if (hi - lo < tol) {
        const Rational residual = original(mid);
        if (abs(residual) <= tol) return {lo, hi, to_real(mid), std::nullopt, std::nullopt, std::nullopt};
      }
      if (sign(value) == sign_lo) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
  }
};

}  // namespace

QuarticPoly QuarticPoly::from_coefficients(const Rational& a4, const Rational& a3,
                                           const Rational& a2, const Rational& a1,
                                           const Rational& a0) {
  QuarticPoly out;
  out.a = {a0, a1, a2, a3, a4};
  return out;
}

RationalPolynomial QuarticPoly::polynomial() const {
  return RationalPolynomial(std::vector<Rational>(a.begin(), a.end()));
}

Rational QuarticPoly::operator()(const Rational& x) const {
  return (((a[4] * x + a[3]) * x + a[2]) * x + a[1]) * x + a[0];
}

Real QuarticPoly::operator()(const Real& x) const { return polynomial()(x); }

std::array<Rational, 5> table_coefficients(FamilyType type, long n_value, long k_value,
                                           long r_value) {
  const Integer n = n_value;
  const Integer k = k_value;
  const Integer r = r_value;
  std::array<Integer, 5> c;  // high to low: a4, a3, a2, a1, a0
  switch (type) {
    case FamilyType::cp_a1:
      c = {4 * (n * n + 3 * n) * r - 8 * (n - 1),
           -2 * (2 * n * n + 11 * n + 3) * r + 4 * (n * n + 3 * n - 4),
           10 * (n + 1) * r - 2 * (3 * n - 5),
           -4 * r - 2 * (n + 1),
           1};
      break;
    case FamilyType::cp_a2:
      c = {4 * (n * n + 3 * n) * r - 8 * (n - 1),
           -2 * (2 * n * n + (4 * k + 11) * n + 6 * k + 3) * r + 4 * (n * n - (2 * k - 3) * n - 4),
           2 * ((4 * k + 5) * n + 2 * k * k + 11 * k + 5) * r +
               2 * ((2 * k - 3) * n + 4 * k * k + 4 * k + 5),
           -2 * (2 * k * k + 5 * k + 2) * r - 2 * ((2 * k + 1) * n + (2 * k + 1) * (2 * k + 1)),
           (2 * k + 1) * (2 * k + 1)};
      break;
    case FamilyType::cp_b:
      c = {n * (n + 3) * r - 2 * (n - 1),
           -(n * n + 8 * n + 3) * r + 4 * n * n + 2 * n - 10,
           (5 * n + 7) * r - 2 * (5 * n - 11),
           -4 * r + 2 * (n - 7),
           4};
      break;
    case FamilyType::cp_c:
      c = {n * (n + 3) * r - 2 * (n - 1),
           -(n * n + 7 * n + 6) * r + 4 * (n * n - 3 * n - 4),
           2 * (2 * n + 5) * r - 2 * (3 * n - 41),
           -4 * r + 4 * (n - 17),
           16};
      break;
    case FamilyType::cp_d:
      // The linear coefficient carries -44: this is the sign that makes the
      // quartic a positive multiple of the residual and gives P(1) = 25.
      c = {27 * r - 4, -48 * r + 11, 25 * r + 46, -4 * r - 44, 16};
      break;
    case FamilyType::cp_e:
      c = {135 * r - 14, -234 * r + 100, 117 * r + 184, -18 * r - 180, 72};
      break;
    default:
      throw HopfError(ErrorKind::unsupported_family, std::string(to_string(type)) + " has no quartic");
  }
  return {Rational(c[4]), Rational(c[3]), Rational(c[2]), Rational(c[1]), Rational(c[0])};
}

QuarticPoly build_quartic(const HypersurfaceFamily& family, int r_order) {
  if (!family.is_projective()) {
    throw HopfError(ErrorKind::unsupported_family, family.name() + " has no quartic");
  }
  if (r_order < 2) throw HopfError(ErrorKind::invalid_order, "r must be >= 2");
  QuarticPoly out;
  out.a = table_coefficients(family.type(), family.n(), family.k().value_or(0), r_order);
  out.substitution = family.substitution();
  out.family = family;
  out.r = r_order;
  return out;
}

RationalPolynomial DepressedQuartic::expand_in_x() const {
  // y = x + shift
  const RationalPolynomial y({shift, Rational(1)});
  const auto y2 = y * y;
  return y2 * y2 + p2 * y2 + p1 * y + RationalPolynomial::constant(p0);
}

DepressedQuartic depress(const QuarticPoly& poly) {
  require_leading(poly);
  // Monic coefficients b3..b0, then the standard shift x = y - b3/4.
  const Rational b3 = poly.a3() / poly.a4();
  const Rational b2 = poly.a2() / poly.a4();
  const Rational b1 = poly.a1() / poly.a4();
  const Rational b0 = poly.a0() / poly.a4();
  DepressedQuartic out;
  out.shift = b3 / 4;
  out.p2 = b2 - 3 * b3 * b3 / 8;
  out.p1 = b1 - b3 * b2 / 2 + b3 * b3 * b3 / 8;
  out.p0 = b0 - b3 * b1 / 4 + b3 * b3 * b2 / 16 - 3 * b3 * b3 * b3 * b3 / 256;
  return out;
}

Rational biquadratic_relation(const QuarticPoly& poly) {
  const auto& a4 = poly.a4();
  const auto& a3 = poly.a3();
  return a3 * a3 * a3 - 4 * a4 * a3 * poly.a2() + 8 * a4 * a4 * poly.a1();
}

std::vector<Real> biquadratic_roots(const Rational& p2, const Rational& p0) {
  const Rational discriminant = p2 * p2 - 4 * p0;
  if (discriminant < 0) return {};
  const Real root_disc = sqrt(to_real(discriminant));
  std::vector<Real> out;
  for (const Real& square : {(-to_real(p2) + root_disc) / 2, (-to_real(p2) - root_disc) / 2}) {
    if (square < 0) continue;
    const Real y = sqrt(square);
    out.push_back(y);
    out.push_back(-y);
  }
  // Exact zero squares still come out as y = 0; dedupe on exact equality.
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Rational cauchy_bound(const QuarticPoly& poly) {
  require_leading(poly);
  Rational worst = 0;
  for (int i = 0; i < 4; ++i) worst = std::max(worst, Rational(abs(poly.a[i] / poly.a4())));
  return 1 + worst;
}

Rational endpoint_epsilon() { return Rational(1, Integer(1) << 32); }

int count_real_roots(const QuarticPoly& poly, const Rational& lo, const Rational& hi) {
  const auto p = poly.polynomial();
  if (p.is_zero()) throw HopfError(ErrorKind::invalid_argument, "zero polynomial");
  const auto [a, b] = prepare_endpoints(p, lo, hi);
  const auto q = square_free_part(p);
  return sturm_count(sturm_sequence(q), a, b);
}

std::vector<RootCertificate> isolate_and_refine(const QuarticPoly& poly, const Rational& lo,
                                                const Rational& hi, const Rational& tol) {
  if (!(tol > 0)) throw HopfError(ErrorKind::invalid_argument, "tolerance must be positive");
  const auto p = poly.polynomial();
  if (p.is_zero()) throw HopfError(ErrorKind::invalid_argument, "zero polynomial");
  const auto [a, b] = prepare_endpoints(p, lo, hi);

  Isolator iso{p, square_free_part(p), {}};
  iso.sturm = sturm_sequence(iso.square_free);

  std::vector<RootCertificate> out;
  std::vector<PreparedInterval> pending{{a, b}};
  while (!pending.empty()) {
    auto [l, h] = pending.back();
    pending.pop_back();
    const int roots = iso.count(l, h);
    if (roots == 0) continue;
    if (roots == 1) {
      out.push_back(iso.refine(l, h, tol));
      continue;
    }
    const Rational mid = (l + h) / 2;
    if (iso.square_free(mid) == 0) {
      auto cert = iso.around_exact(mid, l, h, tol);
      pending.push_back({l, cert.lo});
      pending.push_back({cert.hi, h});
      out.push_back(std::move(cert));
    } else {
      pending.push_back({l, mid});
      pending.push_back({mid, h});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.lo < y.lo; });

  if (poly.family) {
    for (auto& cert : out) {
      if (cert.refined_root > 0 && cert.refined_root < 1) {
        cert.radius = root_to_radius(*poly.family, cert.refined_root);
        cert.residual_at_radius = residual(*poly.family, *cert.radius, poly.r).residual;
      }
    }
  }
  return out;
}

Real root_to_radius(const HypersurfaceFamily& family, const Real& x) {
  if (!(x > 0 && x < 1)) {
    throw HopfError(ErrorKind::root_out_of_range, "x=" + format_real(x) + " outside (0, 1)");
  }
  return radius_from_x(family.substitution(), x);
}

}  // namespace hopf
