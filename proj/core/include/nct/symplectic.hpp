/**
 * @file symplectic.hpp
 * @brief Linear-algebra layer: the theta' cocycle matrix, the embedding
 *        matrices T and S, the block matrices J and J', free symplectic
 *        matrices and their generating functions.
 *
 * Conventions. J0 denotes the 2p x 2p standard symplectic form
 * [[0, I],[-I, 0]].  For a module context with parameters (p, q) and
 * n = 2p + q, the matrices T and S are (2p+2q) x n and satisfy the block
 * layout of the module construction:
 *   T = [ T11 0 ; 0 I_q ; T31 T32 ],  T11^T J0 T11 = theta11,
 *   T31 = theta21, T32 = strict upper triangle of theta22,
 *   S = [ S11, -S11 T31^T ; 0 I_q ; 0 T32^T ],  S11 = J0 T11^{-T}.
 * J is the (2p+2q) block matrix with J0 in the continuous corner and the
 * dual pairing +-I_q in the discrete corner; J' zeroes the negative entries.
 */
#pragma once

#include "nct/cocycle.hpp"

namespace nct {

/// Standard symplectic form [[0, I],[-I, 0]] of size 2p.
inline Mat J0m(int p) {
  Mat J = Mat::Zero(2 * p, 2 * p);
  J.block(0, p, p, p) = Mat::Identity(p, p);
  J.block(p, 0, p, p) = -Mat::Identity(p, p);
  return J;
}

/**
 * Factor an invertible real skew 2p x 2p matrix as th = T11^T J0 T11.
 *
 * Via the spectral decomposition of the Hermitian matrix i*th: eigenvalues
 * come in pairs +-d with conjugate eigenvectors.  For a unit eigenvector
 * v = a + ib at eigenvalue d > 0 one has th a = d b, th b = -d a, with
 * a^T a = b^T b = 1/2, a^T b = 0, and all cross-mode pairings zero; hence
 * M = [sqrt(2/d) b | sqrt(2/d) a] is a Darboux basis, M^T th M = J0, and
 * T = M^{-1} satisfies T^T J0 T = th.  (The construction is invariant under
 * the per-mode phase freedom of the eigensolver.)
 */
inline Mat skew_factor(const Mat& th, double tol = 1e-8) {
  const int p2 = static_cast<int>(th.rows()) / 2;
  CMat A = cplx(0.0, 1.0) * th.cast<cplx>();
  Eigen::SelfAdjointEigenSolver<CMat> es(A);
  if (es.info() != Eigen::Success) throw std::runtime_error("skew_factor: eigensolver failed");
  const Vec w = es.eigenvalues();
  const CMat V = es.eigenvectors();
  Mat M(th.rows(), th.cols());
  // Eigenvalues ascending: the top p2 are the positive ones.
  for (int i = 0; i < p2; ++i) {
    const int k = static_cast<int>(th.rows()) - 1 - i;
    const double d = w[k];
    if (d <= 0) throw std::runtime_error("skew_factor: singular skew matrix");
    const double s = std::sqrt(2.0 / d);
    M.col(i) = s * V.col(k).imag();
    M.col(p2 + i) = s * V.col(k).real();
  }
  const Mat T = M.inverse();
  if ((T.transpose() * J0m(p2) * T - th).cwiseAbs().maxCoeff() > tol)
    throw std::runtime_error("skew_factor: factorization failed");
  return T;
}

/**
 * theta' = [ theta11^{-1}, -theta11^{-1} theta12 ;
 *            theta21 theta11^{-1}, theta22 - theta21 theta11^{-1} theta12 ].
 */
inline SkewMatrix theta_prime(const SkewMatrix& theta, int p) {
  const int n = theta.n();
  const int q = n - 2 * p;
  const Mat& th = theta.mat();
  const Mat th11 = th.topLeftCorner(2 * p, 2 * p);
  const Mat th12 = th.topRightCorner(2 * p, q);
  const Mat th21 = th.bottomLeftCorner(q, 2 * p);
  const Mat th22 = th.bottomRightCorner(q, q);
  const Mat i11 = th11.inverse();
  Mat r(n, n);
  r.topLeftCorner(2 * p, 2 * p) = i11;
  r.topRightCorner(2 * p, q) = -i11 * th12;
  r.bottomLeftCorner(q, 2 * p) = th21 * i11;
  r.bottomRightCorner(q, q) = th22 - th21 * i11 * th12;
  return SkewMatrix((r - r.transpose()) / 2.0, 1e-8);
}

/// The embedding data of the module construction for parameters (p, q).
struct EmbeddingContext {
  int p = 0, q = 0;
  SkewMatrix theta;        ///< n x n with n = 2p + q
  Mat T, S;                ///< (2p+2q) x n
  Mat J, Jp;               ///< (2p+2q) x (2p+2q); Jp = max(J, 0)
  Mat T11;                 ///< 2p x 2p with T11^T J0 T11 = theta11
  double abs_det_T11 = 1;  ///< |det T11| (the inner_B normalization constant)
  SkewMatrix thetap;       ///< theta'

  int n() const { return 2 * p + q; }
};

/**
 * Build the embedding for (theta, p, q).  When a T11 override is supplied it
 * must satisfy T11^T J0 T11 = theta11 (residual <= 1e-8); otherwise T11 is
 * constructed by skew_factor.
 */
inline EmbeddingContext build_embedding(const SkewMatrix& theta, int p, int q,
                                        const Mat* T11_override = nullptr) {
  const int n = 2 * p + q;
  if (theta.n() != n) throw std::invalid_argument("build_embedding: dimension mismatch");
  const Mat& th = theta.mat();
  const Mat th11 = th.topLeftCorner(2 * p, 2 * p);
  const Mat th21 = th.bottomLeftCorner(q, 2 * p);
  const Mat th22 = th.bottomRightCorner(q, q);

  EmbeddingContext ctx;
  ctx.p = p;
  ctx.q = q;
  ctx.theta = theta;
  ctx.T11 = T11_override ? *T11_override : skew_factor(th11);
  if ((ctx.T11.transpose() * J0m(p) * ctx.T11 - th11).cwiseAbs().maxCoeff() > 1e-8)
    throw std::invalid_argument("build_embedding: T11 does not factor theta11");
  ctx.abs_det_T11 = std::abs(ctx.T11.determinant());

  Mat T32 = Mat::Zero(q, q);
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j) T32(i, j) = th22(i, j);

  ctx.T = Mat::Zero(2 * p + 2 * q, n);
  ctx.T.block(0, 0, 2 * p, 2 * p) = ctx.T11;
  ctx.T.block(2 * p, 2 * p, q, q) = Mat::Identity(q, q);
  ctx.T.block(2 * p + q, 0, q, 2 * p) = th21;
  ctx.T.block(2 * p + q, 2 * p, q, q) = T32;

  const Mat S11 = J0m(p) * ctx.T11.inverse().transpose();
  ctx.S = Mat::Zero(2 * p + 2 * q, n);
  ctx.S.block(0, 0, 2 * p, 2 * p) = S11;
  ctx.S.block(0, 2 * p, 2 * p, q) = -S11 * th21.transpose();
  ctx.S.block(2 * p, 2 * p, q, q) = Mat::Identity(q, q);
  ctx.S.block(2 * p + q, 2 * p, q, q) = T32.transpose();

  ctx.J = Mat::Zero(2 * p + 2 * q, 2 * p + 2 * q);
  ctx.J.block(0, 0, 2 * p, 2 * p) = J0m(p);
  ctx.J.block(2 * p, 2 * p + q, q, q) = Mat::Identity(q, q);
  ctx.J.block(2 * p + q, 2 * p, q, q) = -Mat::Identity(q, q);
  ctx.Jp = ctx.J.cwiseMax(0.0);

  ctx.thetap = theta_prime(theta, p);
  return ctx;
}

/// W := T W_theta T^{-1} (q = 0, so T is square); J-symplectic when W_theta is theta-symplectic.
inline Mat conjugate_to_standard(const Mat& W_theta, const EmbeddingContext& ctx) {
  if (ctx.q != 0) throw std::invalid_argument("conjugate_to_standard: requires q = 0");
  return ctx.T * W_theta * ctx.T.inverse();
}

/// Free symplectic matrix [[A, B],[C, D]] (det B != 0) with Maslov index s.
struct FreeSymplectic {
  Mat A, B, C, D;
  int s = 0;

  int m() const { return static_cast<int>(B.rows()); }

  Mat assemble() const {
    const int mm = m();
    Mat W(2 * mm, 2 * mm);
    W << A, B, C, D;
    return W;
  }

  double symplectic_residual() const {
    const Mat W = assemble();
    return (W.transpose() * J0m(m()) * W - J0m(m())).cwiseAbs().maxCoeff();
  }
};

/// 1-d convenience constructor.
inline FreeSymplectic free1(double a, double b, double c, double d, int s) {
  FreeSymplectic f;
  f.A = Mat::Constant(1, 1, a);
  f.B = Mat::Constant(1, 1, b);
  f.C = Mat::Constant(1, 1, c);
  f.D = Mat::Constant(1, 1, d);
  f.s = s;
  return f;
}

/// Generating function W(x, x') = 1/2<DB^{-1}x,x> - <B^{-1}x,x'> + 1/2<B^{-1}Ax',x'>.
inline double generating_function(const FreeSymplectic& fs, const Vec& x, const Vec& xp) {
  const Mat Bi = fs.B.inverse();
  return 0.5 * x.dot(fs.D * Bi * x) - (Bi * x).dot(xp) + 0.5 * xp.dot(Bi * fs.A * xp);
}

}  // namespace nct
