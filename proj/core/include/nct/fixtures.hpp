/**
 * @file fixtures.hpp
 * @brief Named fixture matrices: the finite-order symplectic generators
 *        W_2, W_3, W_4, W_6 (and the companion hexic form W_6'), and the 3-d
 *        deformation matrix of the crossed-product case study.
 */
#pragma once

#include "nct/cocycle.hpp"

namespace nct {
namespace fixtures {

/// Golden-ratio conjugate, the usual irrational-deformation surrogate.
inline constexpr double golden_conjugate = 0.6180339887498949;

inline Mat W2() { return -Mat::Identity(2, 2); }

inline Mat W3() {
  Mat w(2, 2);
  w << -1, -1, 1, 0;
  return w;
}

inline Mat W4() {
  Mat w(2, 2);
  w << 0, -1, 1, 0;
  return w;
}

inline Mat W6() {
  Mat w(2, 2);
  w << 0, -1, 1, 1;
  return w;
}

/// Companion hexic form (the generating-function variant).
inline Mat W6p() {
  Mat w(2, 2);
  w << 1, -1, 1, 0;
  return w;
}

/// The 3-d fixture theta = [[0, theta12, 1],[-theta12, 0, 1],[-1, -1, 0]].
inline SkewMatrix theta3d(double theta12 = golden_conjugate) {
  Mat m(3, 3);
  m << 0, theta12, 1, -theta12, 0, 1, -1, -1, 0;
  return SkewMatrix(m);
}

}  // namespace fixtures
}  // namespace nct
