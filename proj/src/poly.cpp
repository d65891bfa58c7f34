#include "tenjoin/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace tenjoin {

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void RationalPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RationalPoly RationalPoly::constant(const Rational& c) { return RationalPoly({c}); }

RationalPoly RationalPoly::linear_root(const Rational& root) { return RationalPoly({-root, 1}); }

RationalPoly RationalPoly::monomial(int degree, const Rational& lead) {
  std::vector<Rational> c(degree + 1, Rational(0));
  c[degree] = lead;
  return RationalPoly(std::move(c));
}

bool RationalPoly::is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

Rational RationalPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[i];
}

RationalPoly RationalPoly::operator+(const RationalPoly& other) const {
  std::vector<Rational> c(std::max(coeffs_.size(), other.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) c[i] += other.coeffs_[i];
  return RationalPoly(std::move(c));
}

RationalPoly RationalPoly::operator-(const RationalPoly& other) const {
  std::vector<Rational> c(std::max(coeffs_.size(), other.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) c[i] -= other.coeffs_[i];
  return RationalPoly(std::move(c));
}

RationalPoly RationalPoly::operator*(const RationalPoly& other) const {
  if (is_zero() || other.is_zero()) return RationalPoly();
  std::vector<Rational> c(coeffs_.size() + other.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * other.coeffs_[j];
  return RationalPoly(std::move(c));
}

RationalPoly RationalPoly::operator*(const Rational& s) const {
  std::vector<Rational> c = coeffs_;
  for (auto& x : c) x *= s;
  return RationalPoly(std::move(c));
}

RationalPoly RationalPoly::pow(int e) const {
  if (e < 0) throw std::domain_error("negative polynomial power");
  RationalPoly out = constant(1);
  for (int i = 0; i < e; ++i) out = out * (*this);
  return out;
}

Rational RationalPoly::evaluate(const Rational& x) const {
  Rational out = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) out = out * x + *it;
  return out;
}

double RationalPoly::evaluate(double x) const {
  double out = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) out = out * x + it->get_d();
  return out;
}

RationalPoly RationalPoly::divide_exact(const RationalPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
  std::vector<Rational> rem = coeffs_;
  int dd = divisor.degree();
  int dq = degree() - dd;
  if (dq < 0) {
    if (is_zero()) return RationalPoly();
    throw std::domain_error("polynomial division leaves a remainder");
  }
  std::vector<Rational> quot(dq + 1, Rational(0));
  for (int i = dq; i >= 0; --i) {
    Rational q = rem[i + dd] / divisor.coeffs_[dd];
    quot[i] = q;
    for (int j = 0; j <= dd; ++j) rem[i + j] -= q * divisor.coeffs_[j];
  }
  for (const auto& r : rem)
    if (r != 0) throw std::domain_error("polynomial division leaves a remainder");
  return RationalPoly(std::move(quot));
}

RationalPoly RationalPoly::affine_image(const Rational& alpha, const Rational& beta) const {
  int d = degree();
  if (d < 0) return RationalPoly();
  if (alpha == 0) return linear_root(beta).pow(d);  // every root maps to beta
  // alpha^d * Q((x-beta)/alpha) = sum_j q_j alpha^(d-j) (x-beta)^j
  RationalPoly shifted = RationalPoly({-beta, 1});
  RationalPoly power = constant(1);
  Rational scale = 1;
  for (int j = 0; j < d; ++j) scale *= alpha;  // alpha^d
  RationalPoly out;
  for (int j = 0; j <= d; ++j) {
    out = out + power * (coeffs_[j] * scale);
    if (j < d) {
      scale /= alpha;
      power = power * shifted;
    }
  }
  return out;
}

RMatrix RationalPoly::companion() const {
  if (!is_monic()) throw std::domain_error("companion matrix requires a monic polynomial");
  int d = degree();
  RMatrix c = RMatrix::Zero(d, d);
  for (int i = 0; i + 1 < d; ++i) c(i + 1, i) = 1;
  for (int i = 0; i < d; ++i) c(i, d - 1) = -coeffs_[i];
  return c;
}

std::string RationalPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational a = c > 0 ? c : Rational(-c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (i == 0 || a != 1) os << to_string(a);
    if (i > 0) {
      if (a != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace tenjoin
