#pragma once

#include <Eigen/Dense>

#include "octorb/scalar.hpp"

namespace Eigen {

template <>
struct NumTraits<octorb::Scalar> {
  using Real = octorb::Scalar;
  using NonInteger = octorb::Scalar;
  using Nested = octorb::Scalar;
  using Literal = octorb::Scalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 120
  };
  static int digits10() { return 0; }
};

}  // namespace Eigen

namespace octorb {

/// An element of O as coordinates over the fixed basis
/// (e11, e12, e21, e22, ve11, ve12, ve21, ve22).
using Octo = Eigen::Matrix<Scalar, 8, 1>;

/// A linear endomorphism of O. Column j is the image of basis element j.
using LinMap = Eigen::Matrix<Scalar, 8, 8>;

using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

inline bool exactEq(const Octo& a, const Octo& b) {
  for (int i = 0; i < 8; ++i)
    if (a(i) != b(i)) return false;
  return true;
}

inline bool exactEq(const LinMap& a, const LinMap& b) {
  for (int j = 0; j < 8; ++j)
    for (int i = 0; i < 8; ++i)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

inline bool isZero(const Octo& a) {
  for (int i = 0; i < 8; ++i)
    if (!a(i).isZero()) return false;
  return true;
}

inline bool isZero(const LinMap& a) {
  for (int j = 0; j < 8; ++j)
    for (int i = 0; i < 8; ++i)
      if (!a(i, j).isZero()) return false;
  return true;
}

}  // namespace octorb
