#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <string>

namespace tenjoin {

using Rational = mpq_class;
using Integer = mpz_class;

using RMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using DMatrix = Eigen::MatrixXd;
using DVector = Eigen::VectorXd;
using Index = Eigen::Index;

// The two-argument mpq_class constructor does not reduce the fraction; these do.
Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den = 1);

double to_double(const Rational& q);
DMatrix to_double(const RMatrix& m);

// Accepts "3", "-3", "p/q" and plain decimals like "0.25".
// Throws std::invalid_argument on anything else.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

// C(n, k), with value 0 whenever k < 0, k > n or n < 0.
Integer binomial(long n, long k);

}  // namespace tenjoin

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;

  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen
