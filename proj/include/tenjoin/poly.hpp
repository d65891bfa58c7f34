#pragma once

#include <string>
#include <vector>

#include "tenjoin/rational.hpp"

namespace tenjoin {

// Dense univariate polynomial over exact rationals, coefficients ascending.
class RationalPoly {
 public:
  RationalPoly() = default;  // the zero polynomial
  explicit RationalPoly(std::vector<Rational> coeffs);

  static RationalPoly constant(const Rational& c);
  static RationalPoly linear_root(const Rational& root);  // x - root
  static RationalPoly monomial(int degree, const Rational& lead = 1);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const;
  Rational coeff(int i) const;  // 0 beyond the degree
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  RationalPoly operator+(const RationalPoly& other) const;
  RationalPoly operator-(const RationalPoly& other) const;
  RationalPoly operator*(const RationalPoly& other) const;
  RationalPoly operator*(const Rational& s) const;
  RationalPoly pow(int e) const;

  Rational evaluate(const Rational& x) const;
  double evaluate(double x) const;

  // Exact division; throws std::domain_error when the remainder is nonzero.
  RationalPoly divide_exact(const RationalPoly& divisor) const;

  // The monic polynomial whose roots are alpha * r + beta over the roots r
  // of this (for monic input); alpha = 0 degenerates to (x - beta)^degree.
  RationalPoly affine_image(const Rational& alpha, const Rational& beta) const;

  // Companion matrix; requires a monic polynomial of degree >= 0.
  RMatrix companion() const;

  bool operator==(const RationalPoly& other) const { return coeffs_ == other.coeffs_; }
  bool operator!=(const RationalPoly& other) const { return !(*this == other); }

  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace tenjoin
