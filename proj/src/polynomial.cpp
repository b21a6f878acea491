#include "hopf/polynomial.hpp"

#include "hopf/errors.hpp"

namespace hopf {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  normalize();
}

RationalPolynomial RationalPolynomial::constant(const Rational& value) {
  return RationalPolynomial({value});
}

RationalPolynomial RationalPolynomial::monomial(const Rational& value, int power) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(power) + 1);
  coeffs.back() = value;
  return RationalPolynomial(std::move(coeffs));
}

void RationalPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPolynomial::coeff(int power) const {
  if (power < 0 || power > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(power)];
}

const Rational& RationalPolynomial::leading() const {
  if (is_zero()) throw HopfError(ErrorKind::invalid_argument, "zero polynomial has no leading term");
  return coeffs_.back();
}

Rational RationalPolynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Real RationalPolynomial::operator()(const Real& x) const {
  Real acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + to_real(*it);
  return acc;
}

RationalPolynomial RationalPolynomial::derivative() const {
  if (degree() < 1) return {};
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<long>(i);
  return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::monic() const {
  if (is_zero()) return {};
  return Rational(1) / leading() * *this;
}

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return RationalPolynomial(std::move(out));
}

RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
  return a + Rational(-1) * b;
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RationalPolynomial(std::move(out));
}

RationalPolynomial operator*(const Rational& s, const RationalPolynomial& p) {
  std::vector<Rational> out(p.coeffs_);
  for (auto& c : out) c *= s;
  return RationalPolynomial(std::move(out));
}

std::pair<RationalPolynomial, RationalPolynomial> RationalPolynomial::divmod(
    const RationalPolynomial& a, const RationalPolynomial& b) {
  if (b.is_zero()) throw HopfError(ErrorKind::invalid_argument, "polynomial division by zero");
  std::vector<Rational> rem(a.coeffs_);
  const int db = b.degree();
  if (a.degree() < db) return {RationalPolynomial{}, a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db) + 1);
  for (int i = a.degree(); i >= db; --i) {
    const Rational factor = rem[static_cast<std::size_t>(i)] / b.leading();
    quot[static_cast<std::size_t>(i - db)] = factor;
    if (factor == 0) continue;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(i - db + j)] -= factor * b.coeffs_[static_cast<std::size_t>(j)];
    }
  }
  return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
}

RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b) {
  while (!b.is_zero()) {
    auto remainder = RationalPolynomial::divmod(a, b).second;
    a = std::move(b);
    b = std::move(remainder);
  }
  return a.monic();
}

RationalPolynomial square_free_part(const RationalPolynomial& p) {
  if (p.degree() < 1) return p;
  const auto g = gcd(p, p.derivative());
  return RationalPolynomial::divmod(p, g).first.monic();
}

std::vector<RationalPolynomial> sturm_sequence(const RationalPolynomial& p) {
  std::vector<RationalPolynomial> seq;
  if (p.is_zero()) return seq;
  seq.push_back(p);
  auto next = p.derivative();
  while (!next.is_zero()) {
    seq.push_back(next);
    const auto& prev = seq[seq.size() - 2];
    next = Rational(-1) * RationalPolynomial::divmod(prev, seq.back()).second;
  }
  return seq;
}

int sign_variations(const std::vector<RationalPolynomial>& sequence, const Rational& x) {
  int variations = 0;
  int last = 0;
  for (const auto& poly : sequence) {
    const int s = sign(poly(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

int sturm_count(const std::vector<RationalPolynomial>& sequence, const Rational& lo,
                const Rational& hi) {
  return sign_variations(sequence, lo) - sign_variations(sequence, hi);
}

}  // namespace hopf
