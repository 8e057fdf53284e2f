/**
 * @file common.hpp
 * @brief Shared scalar/vector/matrix aliases and phase helpers.
 *
 * Conventions used across the library:
 *  - e(t) := exp(2*pi*i*t) is the only way phases are produced; phases are
 *    always computed from a real argument, never by accumulating products of
 *    previously rounded unit scalars.
 *  - Lattice points are std::vector<int>; real/complex dense linear algebra
 *    uses Eigen.
 */
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

namespace nct {

using cplx = std::complex<double>;
using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;
using IVec = std::vector<int>;

inline constexpr double pi = std::numbers::pi;

/// e(t) = exp(2*pi*i*t).
inline cplx e(double t) { return std::polar(1.0, 2.0 * pi * t); }

/// exp(i*pi*z) for complex z (used by Gaussian closed forms).
inline cplx exp_i_pi(cplx z) { return std::exp(cplx(0.0, pi) * z); }

/// Principal power i^y = exp(i*pi*y/2) for real y (fixed global branch).
inline cplx i_pow(double y) { return std::polar(1.0, pi * y / 2.0); }

inline Vec to_vec(const IVec& l) {
  Vec v(static_cast<Eigen::Index>(l.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = l[static_cast<size_t>(i)];
  return v;
}

inline IVec add(const IVec& a, const IVec& b) {
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline IVec neg(const IVec& a) {
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline bool is_zero(const IVec& a) {
  for (int x : a)
    if (x != 0) return false;
  return true;
}

/// Deterministic RNG used by every randomized suite.
using Rng = std::mt19937_64;

inline double runif(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}
inline int rint(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace nct
