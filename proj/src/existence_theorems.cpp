#include "hopf/existence_theorems.hpp"

#include <algorithm>

#include "hopf/errors.hpp"

namespace hopf {

namespace {

void require_projective(const HypersurfaceFamily& family) {
  if (!family.is_projective()) {
    throw HopfError(ErrorKind::unsupported_family, family.name() + " lives in CH^n");
  }
}

Integer ceil_div(const Integer& num, const Integer& den) {
  Integer q = num / den;
  if (q * den < num) ++q;
  return q;
}

}  // namespace

std::string ProbeReport::pattern() const {
  std::string out;
  for (const auto& point : points) out += point.sign > 0 ? '+' : (point.sign < 0 ? '-' : '0');
  return out;
}

ProbeReport probe_values(const HypersurfaceFamily& family, int r) {
  require_projective(family);
  if (r < 2) throw HopfError(ErrorKind::invalid_order, "r must be >= 2");
  const int n = family.n();
  const Rational inv_r(1, r);
  std::vector<std::pair<std::string, Rational>> xs;

  switch (family.type()) {
    case FamilyType::cp_a1: {
      const Rational x0(1, 2 * n);
      xs = {{"x0", x0}, {"x1", x0 + Rational(1, n * r)}, {"x2", Rational(2, n + 3)}};
      break;
    }
    case FamilyType::cp_b:
      xs = {{"x0", 2 * inv_r}, {"x1", Rational(1, n)}, {"x2", 1 - 5 * inv_r}};
      break;
    case FamilyType::cp_c:
      xs = {{"x0", 5 * inv_r}, {"x1", Rational(2, n)}, {"x2", 1 - 4 * inv_r}};
      break;
    case FamilyType::cp_d:
      xs = {{"x0", 5 * inv_r}, {"x1", Rational(4, 9)}, {"x2", 1 - 3 * inv_r}};
      break;
    case FamilyType::cp_e:
      xs = {{"x0", 5 * inv_r}, {"x1", Rational(2, 5)}, {"x2", 1 - 4 * inv_r}};
      break;
    case FamilyType::cp_a2: {
      const int k = *family.k();
      const Rational star(2 * k + 1, 2 * n);
      if (below_k1(n, k)) {
        xs = {{"x0", star}, {"x1", star + inv_r}, {"x2", 1 - inv_r}};
      } else if (above_k2(n, k)) {
        xs = {{"x0", inv_r}, {"x1", star - inv_r}, {"x2", star}};
      } else {
        xs = {{"x*", star}};
      }
      break;
    }
    default:
      throw HopfError(ErrorKind::unsupported_family, family.name());
  }

  xs.insert(xs.begin(), {"0", Rational(0)});
  xs.emplace_back("1", Rational(1));
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (!(xs[i - 1].second < xs[i].second)) {
      throw HopfError(ErrorKind::probes_collide,
                      family.name() + " at r=" + std::to_string(r) + ": probe " + xs[i].first +
                          " does not exceed " + xs[i - 1].first);
    }
  }

  const auto poly = build_quartic(family, r);
  ProbeReport out;
  for (auto& [label, x] : xs) {
    Rational value = poly(x);
    const int s = sign(value);
    out.points.push_back({label, x, std::move(value), s});
  }
  out.expected_pattern = xs.size() == 5 ? "+-+-+" : "+-+";
  return out;
}

ThresholdPair guaranteed_thresholds(const HypersurfaceFamily& family) {
  require_projective(family);
  const long n = family.n();
  switch (family.type()) {
    case FamilyType::cp_a1:
      if (n < 2) throw HopfError(ErrorKind::not_applicable, "the CP^1 curve has no thresholds");
      return {2, 2 * n + 13};
    case FamilyType::cp_b: {
      const long quadratic = 12 * n * n + 16 * n - 19;
      return {std::min(6001L, quadratic), std::max(6001L, quadratic)};
    }
    case FamilyType::cp_c: {
      const Integer four_r = Integer(1125) * n * n + 375 * n - 1996;
      return {300, ceil_div(four_r, 4).convert_to<long>()};
    }
    case FamilyType::cp_d: return {32, 89};
    case FamilyType::cp_e: return {27, 100};
    case FamilyType::cp_a2: {
      const long k = *family.k();
      if (2 * k == n - 1) return {2, std::nullopt};
      if (below_k1(static_cast<int>(n), static_cast<int>(k))) {
        return {2, 4 * (22 * k * k * k * k + 85 * k * k * k + 123 * k * k + 54 * k + 8) * k * k};
      }
      if (above_k2(static_cast<int>(n), static_cast<int>(k))) {
        return {2, 4 * (6 * k * k * k * k + 19 * k * k * k + 39 * k * k + 8 * k + 2) * (2 * k + 1) * k};
      }
      throw HopfError(ErrorKind::no_exact_count_guarantee,
                      family.name() + ": k lies in [k1, k2]");
    }
    default:
      throw HopfError(ErrorKind::unsupported_family, family.name());
  }
}

std::pair<Rational, Rational> solution_x_range(const HypersurfaceFamily& family) {
  require_projective(family);
  if (family.type() == FamilyType::cp_a1 && family.n() == 1) return {Rational(0), Rational(1, 2)};
  return {Rational(0), Rational(1)};
}

int count_solutions(const HypersurfaceFamily& family, int r) {
  const auto poly = build_quartic(family, r);
  const auto [lo, hi] = solution_x_range(family);
  const auto p = poly.polynomial();
  const auto q = square_free_part(p);
  const auto sturm = sturm_sequence(q);
  // Endpoints that are roots are not solutions; step inside them.
  Rational a = lo;
  Rational b = hi;
  if (q(a) == 0) a += endpoint_epsilon();
  if (q(b) == 0) b -= endpoint_epsilon();
  int count = sturm_count(sturm, a, b);
  const Rational x_min = minimal_x(family);
  if (x_min > a && x_min < b && p(x_min) == 0) --count;
  return count;
}

A2ClosedForm a2_closed_form(int n, int r) {
  if (n < 3 || n % 2 == 0) {
    throw HopfError(ErrorKind::not_applicable, "closed form needs odd n >= 3, got " + std::to_string(n));
  }
  if (r < 2) throw HopfError(ErrorKind::invalid_order, "r must be >= 2");
  const Integer N = n;
  const Integer R = r;
  const Integer omega = (N + 3) * (N + 3) * R * R - 8 * N * (N + 3) * R + 16 * (N * N + 2 * N - 2);
  const Integer outer = 2 * N * (N + 3) * R - 4 * (N - 1);
  const Integer inner_base = N * (N + 3) * R - 4 * (N * N + N - 1);
  const Integer cos_den = N * (N + 3) * R - 2 * (N - 1);
  const Integer cos_base = 2 * (2 * N - 1) * (N + 1);

  A2ClosedForm out;
  out.omega = Real(omega);
  const Real root_omega = sqrt(out.omega);
  const Real half_width = sqrt((Real(inner_base) + n * root_omega) / Real(outer)) / 2;
  out.x_plus = Real(1) / 2 + half_width;
  out.x_minus = Real(1) / 2 - half_width;
  out.cos_4t = (n * root_omega - Real(cos_base)) / Real(cos_den);

  if (const auto w = exact_sqrt(Rational(omega))) {
    const Rational ratio = (Rational(inner_base) + n * *w) / Rational(outer);
    if (const auto h = exact_sqrt(ratio)) {
      out.x_plus_exact = Rational(1, 2) + *h / 2;
      out.x_minus_exact = Rational(1, 2) - *h / 2;
    }
    out.cos_4t_exact = (n * *w - Rational(cos_base)) / Rational(cos_den);
  }
  return out;
}

KThresholds a2_k_thresholds(int n) {
  if (n < 3) throw HopfError(ErrorKind::invalid_argument, "need n >= 3");
  const Real root = sqrt(Real(13 * n * n - 8 * n + 4));
  const Real den = 4 * (n - 1);
  return {(Real(5 * n * n - 4 * n + 2) - n * root) / den,
          (n * root - Real(n * n + 4 * n - 2)) / den};
}

Integer eta1(int n, int k) {
  const Integer N = n;
  const Integer K = k;
  return 4 * (N - 1) * K * K - (10 * N * N - 8 * N + 4) * K + 3 * N * N * N - 5 * N * N + 3 * N - 1;
}

Integer eta2(int n, int k) {
  const Integer N = n;
  const Integer K = k;
  return 4 * (N - 1) * K * K + 2 * (N * N + 4 * N - 2) * K - 3 * N * N * N + N * N + 3 * N - 1;
}

// k < k1  <=>  n sqrt(D) < 5n^2 - 4n + 2 - 4(n-1)k,  D = 13n^2 - 8n + 4.
bool below_k1(int n, int k) {
  const Integer N = n;
  const Integer disc = 13 * N * N - 8 * N + 4;
  const Integer rhs = 5 * N * N - 4 * N + 2 - 4 * (N - 1) * k;
  return rhs > 0 && N * N * disc < rhs * rhs;
}

// k > k2  <=>  4(n-1)k + n^2 + 4n - 2 > n sqrt(D).
bool above_k2(int n, int k) {
  const Integer N = n;
  const Integer disc = 13 * N * N - 8 * N + 4;
  const Integer lhs = 4 * (N - 1) * k + N * N + 4 * N - 2;
  return lhs > 0 && lhs * lhs > N * N * disc;
}

RationalPolynomial a1_auxiliary_quartic(int n) {
  if (n < 2) throw HopfError(ErrorKind::invalid_argument, "need n >= 2");
  const Integer N = n;
  // Table coefficients of P_A1 as linear polynomials u_j r + v_j, low to high in x.
  const std::array<std::pair<Integer, Integer>, 5> lin{{
      {0, 1},
      {-4, -2 * (N + 1)},
      {10 * (N + 1), -2 * (3 * N - 5)},
      {-2 * (2 * N * N + 11 * N + 3), 4 * (N * N + 3 * N - 4)},
      {4 * (N * N + 3 * N), -8 * (N - 1)},
  }};
  // r^4 x1^j = (r + 2)^j r^(4-j) / (2n)^j with x1 = (r + 2) / (2 n r).
  const RationalPolynomial r_poly({Rational(0), Rational(1)});
  const RationalPolynomial r_plus_two({Rational(2), Rational(1)});
  RationalPolynomial total;
  for (int j = 0; j <= 4; ++j) {
    RationalPolynomial term({Rational(lin[j].second), Rational(lin[j].first)});
    for (int i = 0; i < j; ++i) term = term * r_plus_two;
    for (int i = j; i < 4; ++i) term = term * r_poly;
    Integer scale = 1;
    for (int i = 0; i < j; ++i) scale *= 2 * N;
    total = total + Rational(1, scale) * term;
  }
  return Rational(2 * N * N * N * N) * total;
}

}  // namespace hopf
