/**
 * @file cyclic_action.hpp
 * @brief Finite cyclic groups of theta-symplectic integer matrices acting on
 *        twisted group algebras.
 *
 * The automorphism alpha_W is the canonical lattice automorphism
 * alpha_W(delta_l) = delta_{W l}.  It is a *-automorphism because W preserves
 * the cocycle (W^T theta W = theta), it has the same order as W, and its
 * inverse is alpha_{W^{-1}}.
 *
 * The monomial phase of Eq. (4.1) is exposed separately (eq41_phase); a
 * calibration test documents its relation to the normal-ordering conversion
 * phase (they agree exactly for the cocycle exponent constant c = -1, and
 * differ by the printed factor-of-2 character otherwise).
 */
#pragma once

#include <Eigen/Dense>
#include <stdexcept>

#include "nct/algebra.hpp"

namespace nct {

using IMat = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

inline IMat to_imat(const Mat& m, double tol = 1e-9) {
  IMat r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const double v = std::round(m(i, j));
      if (std::abs(m(i, j) - v) > tol)
        throw std::invalid_argument("to_imat: non-integer entry");
      r(i, j) = static_cast<long long>(v);
    }
  return r;
}

inline Mat to_mat(const IMat& m) { return m.cast<double>(); }

/// true iff ||W^T theta W - theta||_inf <= tol.
inline bool check_theta_symplectic(const Mat& W, const SkewMatrix& theta,
                                   double* residual = nullptr, double tol = 1e-12) {
  const Mat d = W.transpose() * theta.mat() * W - theta.mat();
  const double r = d.cwiseAbs().maxCoeff();
  if (residual) *residual = r;
  return r <= tol;
}

/// Order of an integer matrix of finite order (throws beyond max_order).
inline int matrix_order(const IMat& W, int max_order = 24) {
  const IMat id = IMat::Identity(W.rows(), W.cols());
  IMat p = W;
  for (int r = 1; r <= max_order; ++r) {
    if (p == id) return r;
    p = (p * W).eval();
  }
  throw std::invalid_argument("matrix_order: no finite order found");
}

/// A finite cyclic group <W> of theta-symplectic integer matrices.
struct FiniteCyclicAction {
  IMat W;
  int order = 1;
  SkewMatrix theta;

  FiniteCyclicAction() = default;
  FiniteCyclicAction(const Mat& w, SkewMatrix th) : W(to_imat(w)), theta(std::move(th)) {
    double res = 0.0;
    if (!check_theta_symplectic(w, theta, &res))
      throw std::invalid_argument("FiniteCyclicAction: W is not theta-symplectic");
    order = matrix_order(W);
  }

  IVec map(const IVec& l, int power = 1) const {
    const int n = static_cast<int>(W.rows());
    IMat p = IMat::Identity(n, n);
    int k = ((power % order) + order) % order;
    for (int i = 0; i < k; ++i) p = (p * W).eval();
    IVec r(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
      long long s = 0;
      for (int j = 0; j < n; ++j) s += p(i, j) * l[static_cast<size_t>(j)];
      r[static_cast<size_t>(i)] = static_cast<int>(s);
    }
    return r;
  }
};

/// Canonical automorphism: alpha_{W^power}(a)(Wl) = a(l), i.e. alpha(delta_l) = delta_{Wl}.
inline AlgebraElement apply_action(const FiniteCyclicAction& act, const AlgebraElement& a,
                                   int power = 1) {
  AlgebraElement r(a.theta(), a.convention());
  for (const auto& [l, v] : a.coeffs()) r.accumulate(act.map(l, power), v);
  return r;
}

/**
 * The Eq. (4.1) monomial phase for generator column i of W = (a_{jk}):
 * phi_i = e( sum_{k=2}^n sum_{j=1}^{k-1} a_{ki} a_{ji} theta_{jk} ).
 */
inline cplx eq41_phase(const IMat& W, const SkewMatrix& theta, int i) {
  double s = 0.0;
  const int n = static_cast<int>(W.rows());
  for (int k = 1; k < n; ++k)
    for (int j = 0; j < k; ++j)
      s += static_cast<double>(W(k, i)) * static_cast<double>(W(j, i)) * theta(j, k);
  return e(s);
}

/**
 * Normal-ordering conversion phase: U_1^{m1} ... U_n^{mn} = nu(m) * delta_m,
 * where the left side is the ordered product of generator powers.
 * nu(m) = e(c * sum_{j<k} m_j m_k theta_{jk}) with c the convention constant.
 */
inline cplx normal_ordering_phase(const SkewMatrix& theta, Convention conv, const IVec& m) {
  double s = 0.0;
  const int n = theta.n();
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k)
      s += m[static_cast<size_t>(j)] * m[static_cast<size_t>(k)] * theta(j, k);
  return e(convention_constant(conv) * s);
}

}  // namespace nct
