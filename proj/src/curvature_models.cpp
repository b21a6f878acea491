#include "hopf/curvature_models.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "hopf/errors.hpp"

namespace hopf {

namespace {

struct TypeName {
  FamilyType type;
  std::string_view name;
};

constexpr std::array<TypeName, 11> kTypeNames{{
    {FamilyType::ch_a0, "CH_A0"},
    {FamilyType::ch_a1_geodesic, "CH_A1_geodesic"},
    {FamilyType::ch_a1_point, "CH_A1_point"},
    {FamilyType::ch_a2, "CH_A2"},
    {FamilyType::ch_b, "CH_B"},
    {FamilyType::cp_a1, "CP_A1"},
    {FamilyType::cp_a2, "CP_A2"},
    {FamilyType::cp_b, "CP_B"},
    {FamilyType::cp_c, "CP_C"},
    {FamilyType::cp_d, "CP_D"},
    {FamilyType::cp_e, "CP_E"},
}};

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

[[noreturn]] void invalid(const std::string& what) { throw HopfError(ErrorKind::invalid_family, what); }

Real cot(const Real& x) { return 1 / tan(x); }
Real coth(const Real& x) { return 1 / tanh(x); }

// Multiplicities of cot(t - pi/4), cot(t - 3pi/4), cot(t - pi/2), cot(t) for
// the C, D and E families. The first two always agree, as do the last two.
std::array<int, 4> cde_multiplicities(const HypersurfaceFamily& family) {
  switch (family.type()) {
    case FamilyType::cp_c: return {2, 2, family.n() - 3, family.n() - 3};
    case FamilyType::cp_d: return {4, 4, 4, 4};
    case FamilyType::cp_e: return {6, 6, 8, 8};
    default: throw HopfError(ErrorKind::invalid_argument, "not a C/D/E family");
  }
}

void require_projective(const HypersurfaceFamily& family) {
  if (!family.is_projective()) {
    throw HopfError(ErrorKind::unsupported_family, family.name() + " lives in CH^n");
  }
}

}  // namespace

std::string_view to_string(FamilyType type) {
  for (const auto& entry : kTypeNames) {
    if (entry.type == type) return entry.name;
  }
  return "?";
}

std::optional<FamilyType> parse_family_type(std::string_view text) {
  for (const auto& entry : kTypeNames) {
    if (iequals(entry.name, text)) return entry.type;
    const auto short_name = entry.name.substr(3);
    if (entry.name.substr(0, 3) == "CP_" && iequals(short_name, text)) return entry.type;
  }
  return std::nullopt;
}

std::string_view to_string(Substitution substitution) {
  switch (substitution) {
    case Substitution::sin2_t: return "sin^2 t";
    case Substitution::cos2_t: return "cos^2 t";
    case Substitution::cos2_2t: return "cos^2 2t";
  }
  return "?";
}

HypersurfaceFamily HypersurfaceFamily::make(FamilyType type, int n, std::optional<int> k) {
  const auto label = std::string(to_string(type)) + " with n=" + std::to_string(n);
  const bool uses_k = type == FamilyType::cp_a2 || type == FamilyType::ch_a2;
  if (uses_k) {
    if (!k) invalid(label + " needs k");
    if (n < 3 || *k < 1 || *k > n - 2) {
      invalid(label + ", k=" + std::to_string(*k) + ": need n >= 3 and 1 <= k <= n-2");
    }
  } else {
    k.reset();
  }
  switch (type) {
    case FamilyType::cp_a1:
      if (n < 1) invalid(label + ": need n >= 1");
      break;
    case FamilyType::cp_c:
      if (n < 5 || n % 2 == 0) invalid(label + ": need n = 2k+1 with k >= 2");
      break;
    case FamilyType::cp_d:
      if (n != 9) invalid(label + ": type D lives in CP^9");
      break;
    case FamilyType::cp_e:
      if (n != 15) invalid(label + ": type E lives in CP^15");
      break;
    case FamilyType::cp_a2:
    case FamilyType::ch_a2:
      break;
    default:
      if (n < 2) invalid(label + ": need n >= 2");
      break;
  }
  return HypersurfaceFamily(type, n, k);
}

bool HypersurfaceFamily::is_projective() const noexcept {
  switch (type_) {
    case FamilyType::cp_a1:
    case FamilyType::cp_a2:
    case FamilyType::cp_b:
    case FamilyType::cp_c:
    case FamilyType::cp_d:
    case FamilyType::cp_e:
      return true;
    default:
      return false;
  }
}

RadiusDomain HypersurfaceFamily::radius_domain() const {
  switch (type_) {
    case FamilyType::cp_a1:
    case FamilyType::cp_a2:
      return {Real(0), pi() / 2};
    case FamilyType::cp_b:
    case FamilyType::cp_c:
    case FamilyType::cp_d:
    case FamilyType::cp_e:
      return {Real(0), pi() / 4};
    default:
      return {Real(0), std::nullopt};
  }
}

bool HypersurfaceFamily::admits_radius(const Real& t) const {
  if (!has_radius()) return true;
  const auto domain = radius_domain();
  if (!(t > domain.lo)) return false;
  if (domain.hi && !(t < *domain.hi)) return false;
  if (type_ == FamilyType::ch_b) {
    const Real excluded = ch_b_excluded_radius();
    if (abs(t - excluded) <= excluded * Real("1e-40")) return false;
  }
  return true;
}

Substitution HypersurfaceFamily::substitution() const {
  switch (type_) {
    case FamilyType::cp_a1: return Substitution::sin2_t;
    case FamilyType::cp_a2: return Substitution::cos2_t;
    case FamilyType::cp_b:
    case FamilyType::cp_c:
    case FamilyType::cp_d:
    case FamilyType::cp_e:
      return Substitution::cos2_2t;
    default:
      throw HopfError(ErrorKind::unsupported_family, name() + " has no polynomial variable");
  }
}

std::string HypersurfaceFamily::name() const {
  std::string out(to_string(type_));
  out += "(n=" + std::to_string(n_);
  if (k_) out += ", k=" + std::to_string(*k_);
  return out + ")";
}

Real ch_b_excluded_radius() { return log(2 + sqrt(Real(3))) / 2; }

int CurvatureSpectrum::total_multiplicity() const {
  int total = 1;
  for (const auto& branch : branches) total += branch.multiplicity;
  return total;
}

CurvatureSpectrum curvature_spectrum(const HypersurfaceFamily& family, const Real& t) {
  const int n = family.n();
  if (family.has_radius() && !family.admits_radius(t)) {
    if (family.type() == FamilyType::ch_b && t > 0) {
      throw HopfError(ErrorKind::excluded_radius, "CH_B radius (1/2) ln(2 + sqrt 3) is not allowed");
    }
    throw HopfError(ErrorKind::radius_out_of_domain,
                    "t=" + format_real(t) + " outside the radius domain of " + family.name());
  }

  CurvatureSpectrum out;
  auto add = [&out](Real lambda, int multiplicity) {
    if (multiplicity > 0) out.branches.push_back({std::move(lambda), multiplicity});
  };
  switch (family.type()) {
    case FamilyType::ch_a0:
      out.alpha = 2;
      add(Real(1), 2 * n - 2);
      break;
    case FamilyType::ch_a1_geodesic:
      out.alpha = 2 * coth(2 * t);
      add(tanh(t), 2 * n - 2);
      break;
    case FamilyType::ch_a1_point:
      out.alpha = 2 * coth(2 * t);
      add(coth(t), 2 * n - 2);
      break;
    case FamilyType::ch_a2: {
      const int k = *family.k();
      out.alpha = 2 * coth(2 * t);
      add(coth(t), 2 * (n - k - 1));
      add(tanh(t), 2 * k);
      break;
    }
    case FamilyType::ch_b:
      out.alpha = 2 * tanh(2 * t);
      add(coth(t), n - 1);
      add(tanh(t), n - 1);
      break;
    case FamilyType::cp_a1:
      out.alpha = 2 * cot(2 * t);
      add(-tan(t), 2 * n - 2);
      break;
    case FamilyType::cp_a2: {
      const int k = *family.k();
      out.alpha = 2 * cot(2 * t);
      add(cot(t), 2 * (n - k - 1));
      add(-tan(t), 2 * k);
      break;
    }
    case FamilyType::cp_b:
      out.alpha = 2 * tan(2 * t);
      add(-cot(t), n - 1);
      add(tan(t), n - 1);
      break;
    case FamilyType::cp_c:
    case FamilyType::cp_d:
    case FamilyType::cp_e: {
      const auto m = cde_multiplicities(family);
      const Real quarter = pi() / 4;
      out.alpha = 2 * cot(2 * t);
      add(cot(t - quarter), m[0]);
      add(cot(t - 3 * quarter), m[1]);
      add(cot(t - 2 * quarter), m[2]);
      add(cot(t), m[3]);
      break;
    }
  }
  return out;
}

Real trace_shape(const CurvatureSpectrum& spectrum) {
  Real sum = spectrum.alpha;
  for (const auto& branch : spectrum.branches) sum += branch.multiplicity * branch.lambda;
  return sum;
}

Real trace_shape_squared(const CurvatureSpectrum& spectrum) {
  Real sum = spectrum.alpha * spectrum.alpha;
  for (const auto& branch : spectrum.branches) {
    sum += branch.multiplicity * branch.lambda * branch.lambda;
  }
  return sum;
}

// With tan^2 of the relevant angle written as a ratio, every special radius has
// a rational x-image. For C/D/E, tr S = (2 + 2 m34) cot 2t - 2 m12 tan 2t.
Rational minimal_x(const HypersurfaceFamily& family) {
  require_projective(family);
  const int n = family.n();
  switch (family.type()) {
    case FamilyType::cp_a1: return Rational(1, 2 * n);
    case FamilyType::cp_a2: return Rational(2 * *family.k() + 1, 2 * n);
    case FamilyType::cp_b: return Rational(1, n);
    default: {
      const auto m = cde_multiplicities(family);
      return Rational(m[0], m[0] + 1 + m[2]);
    }
  }
}

Rational r_independent_x(const HypersurfaceFamily& family) {
  require_projective(family);
  const int n = family.n();
  switch (family.type()) {
    case FamilyType::cp_a1: return Rational(2, n + 3);
    case FamilyType::cp_a2: return Rational(*family.k() + 2, n + 3);
    case FamilyType::cp_b: return Rational(4, n + 3);
    default: {
      const auto m = cde_multiplicities(family);
      return Rational(m[0], m[0] + 4 + m[2]);
    }
  }
}

SpecialRadii special_radii(const HypersurfaceFamily& family) {
  require_projective(family);
  const auto substitution = family.substitution();
  SpecialRadii out;
  for (auto [x, slot] : {std::pair{minimal_x(family), &out.t_minimal},
                         std::pair{r_independent_x(family), &out.t_r_independent}}) {
    if (x > 0 && x < 1) {
      Real t = radius_from_x(substitution, to_real(x));
      if (family.admits_radius(t)) *slot = std::move(t);
    }
  }
  return out;
}

Real radius_from_x(Substitution substitution, const Real& x) {
  switch (substitution) {
    case Substitution::sin2_t: return asin(sqrt(x));
    case Substitution::cos2_t: return acos(sqrt(x));
    case Substitution::cos2_2t: return acos(sqrt(x)) / 2;
  }
  return Real(0);
}

Real x_from_radius(Substitution substitution, const Real& t) {
  switch (substitution) {
    case Substitution::sin2_t: {
      const Real s = sin(t);
      return s * s;
    }
    case Substitution::cos2_t: {
      const Real c = cos(t);
      return c * c;
    }
    case Substitution::cos2_2t: {
      const Real c = cos(2 * t);
      return c * c;
    }
  }
  return Real(0);
}

CurvatureSpectrum rescale_spectrum(const CurvatureSpectrum& spectrum, const Real& c) {
  const Real factor = sqrt(abs(c)) / 2;
  CurvatureSpectrum out{spectrum.alpha * factor, {}};
  out.branches.reserve(spectrum.branches.size());
  for (const auto& branch : spectrum.branches) {
    out.branches.push_back({branch.lambda * factor, branch.multiplicity});
  }
  return out;
}

Real rescale_radius(const Real& t, const Real& c) { return 2 * t / sqrt(abs(c)); }

std::vector<HypersurfaceFamily> cp_families(int n_max) {
  std::vector<HypersurfaceFamily> out;
  for (int n = 2; n <= n_max; ++n) out.push_back(HypersurfaceFamily::make(FamilyType::cp_a1, n));
  for (int n = 3; n <= n_max; ++n) {
    for (int k = 1; k <= n - 2; ++k) out.push_back(HypersurfaceFamily::make(FamilyType::cp_a2, n, k));
  }
  for (int n = 2; n <= n_max; ++n) out.push_back(HypersurfaceFamily::make(FamilyType::cp_b, n));
  for (int n = 5; n <= n_max; n += 2) out.push_back(HypersurfaceFamily::make(FamilyType::cp_c, n));
  if (n_max >= 9) out.push_back(HypersurfaceFamily::make(FamilyType::cp_d, 9));
  if (n_max >= 15) out.push_back(HypersurfaceFamily::make(FamilyType::cp_e, 15));
  return out;
}

std::vector<HypersurfaceFamily> ch_families(int n_max) {
  std::vector<HypersurfaceFamily> out;
  for (int n = 2; n <= n_max; ++n) {
    out.push_back(HypersurfaceFamily::make(FamilyType::ch_a0, n));
    out.push_back(HypersurfaceFamily::make(FamilyType::ch_a1_geodesic, n));
    out.push_back(HypersurfaceFamily::make(FamilyType::ch_a1_point, n));
    for (int k = 1; k <= n - 2; ++k) out.push_back(HypersurfaceFamily::make(FamilyType::ch_a2, n, k));
    out.push_back(HypersurfaceFamily::make(FamilyType::ch_b, n));
  }
  return out;
}

}  // namespace hopf
