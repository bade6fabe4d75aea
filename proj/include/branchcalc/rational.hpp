#pragma once

#include <string>

#include <Eigen/Core>
#include <gmpxx.h>

#include "branchcalc/exponent.hpp"

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  using Literal = mpq_class;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace branchcalc {

/// Exact scalar for the Hecke side. Values are kept canonical (lowest terms).
using Rational = mpq_class;

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational to_rational(const Exponent& e) {
  return make_rational(static_cast<long>(e.numerator()), static_cast<long>(e.denominator()));
}

/// x^k for nonzero x when k < 0.
Rational power(const Rational& x, int k);

/// "3", "-1/2".
std::string to_string(const Rational& r);
Rational parse_rational(const std::string& text);

}  // namespace branchcalc
