/**
 * @file cocycle.hpp
 * @brief Skew-symmetric deformation matrices and the 2-cocycles of twisted
 *        group algebras C*(Z^n, omega_theta).
 *
 * Two cocycle conventions are supported:
 *  - Presentation: omega(x,y) = e(-x^T theta y / 2).  The sign is calibrated
 *    (see tests) so that the generator relation U_k U_j = e(theta_jk) U_j U_k
 *    holds verbatim for the normal-ordered basis.
 *  - PaperFull: omega(x,y) = e(x^T theta y) — the bicharacter exactly as
 *    printed (e(<-theta x, y>) with <,> the Euclidean pairing).
 */
#pragma once

#include <stdexcept>

#include "nct/common.hpp"

namespace nct {

/// Real skew-symmetric n x n matrix of deformation parameters.
class SkewMatrix {
 public:
  SkewMatrix() = default;

  explicit SkewMatrix(Mat m, double tol = 1e-12) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw std::invalid_argument("SkewMatrix: not square");
    // Stored exactly skew: mirror the strict upper triangle.
    for (Eigen::Index j = 0; j < m_.rows(); ++j) {
      if (std::abs(m_(j, j)) > tol) throw std::invalid_argument("SkewMatrix: nonzero diagonal");
      m_(j, j) = 0.0;
      for (Eigen::Index k = j + 1; k < m_.cols(); ++k) {
        if (std::abs(m_(j, k) + m_(k, j)) > tol)
          throw std::invalid_argument("SkewMatrix: not skew-symmetric");
        m_(k, j) = -m_(j, k);
      }
    }
  }

  int n() const { return static_cast<int>(m_.rows()); }
  const Mat& mat() const { return m_; }
  double operator()(int j, int k) const { return m_(j, k); }

  bool operator==(const SkewMatrix& o) const { return m_ == o.m_; }

 private:
  Mat m_;
};

/// 2-d theta with a single parameter theta12.
inline SkewMatrix skew2(double theta12) {
  Mat m(2, 2);
  m << 0.0, theta12, -theta12, 0.0;
  return SkewMatrix(m);
}

enum class Convention {
  Presentation,  ///< omega(x,y) = e(-x^T theta y / 2)
  PaperFull      ///< omega(x,y) = e(x^T theta y)
};

/// Exponent multiplier c in omega(x,y) = e(c * x^T theta y).
inline double convention_constant(Convention c) {
  return c == Convention::Presentation ? -0.5 : 1.0;
}

/// omega_theta(x, y) for lattice points x, y.
inline cplx cocycle_value(const SkewMatrix& theta, Convention conv, const IVec& x,
                          const IVec& y) {
  if (static_cast<int>(x.size()) != theta.n() || static_cast<int>(y.size()) != theta.n())
    throw std::invalid_argument("cocycle_value: dimension mismatch");
  double s = 0.0;
  for (int j = 0; j < theta.n(); ++j)
    for (int k = 0; k < theta.n(); ++k) s += x[static_cast<size_t>(j)] * theta(j, k) * y[static_cast<size_t>(k)];
  return e(convention_constant(conv) * s);
}

}  // namespace nct
