#pragma once

#include <Eigen/Core>

#include "toricrep/prime_field.hpp"
#include "toricrep/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<toricrep::Rational> : GenericNumTraits<toricrep::Rational> {
  typedef toricrep::Rational Real;
  typedef toricrep::Rational NonInteger;
  typedef toricrep::Rational Nested;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
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

template <>
struct NumTraits<toricrep::Int> : GenericNumTraits<toricrep::Int> {
  typedef toricrep::Int Real;
  typedef toricrep::Rational NonInteger;
  typedef toricrep::Int Nested;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 100,
    MulCost = 80
  };
};

template <>
struct NumTraits<toricrep::PrimeScalar> : GenericNumTraits<toricrep::PrimeScalar> {
  typedef toricrep::PrimeScalar Real;
  typedef toricrep::PrimeScalar NonInteger;
  typedef toricrep::PrimeScalar Nested;
  static inline Real epsilon() { return Real(); }
  static inline Real dummy_precision() { return Real(); }
  static inline int digits10() { return 9; }
  enum {
    IsInteger = 0,
    IsSigned = 0,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 3
  };
};

}  // namespace Eigen

namespace toricrep {

using QMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using QVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using ZMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using PMatrix = Eigen::Matrix<PrimeScalar, Eigen::Dynamic, Eigen::Dynamic>;
using Index = Eigen::Index;

// Entry-wise reduction mod the session prime; throws ModularUnluckyError if
// any denominator vanishes mod p.
PMatrix reduce_mod_p(const QMatrix& m);

}  // namespace toricrep
