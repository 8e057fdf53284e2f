/**
 * @file gaussian.hpp
 * @brief Closed-form calculus of generalized Gaussian atoms on R^p x Z^q.
 *
 * An atom is f(x, t) = c * exp(pi*i <Mx, x> + 2*pi*i <b, x>) * delta_{t, t0}
 * with M complex symmetric, Im(M) positive definite.  The family is closed
 * under translation, modulation, chirping, invertible substitution, Fourier
 * transform, free-symplectic kernels, and complex conjugation, so every
 * module/metaplectic operation evaluates without quadrature error.
 *
 * Branch convention: every square root of a determinant is computed as the
 * product of principal square roots of eigenvalues (sqrt_det_prod).  This is
 * a fixed continuous choice on {Im M > 0}; the residual sign ambiguity is
 * exactly the metaplectic double cover measured by the order checks.
 */
#pragma once

#include <vector>

#include "nct/symplectic.hpp"

namespace nct {

/// Product of principal square roots of the eigenvalues of A.
inline cplx sqrt_det_prod(const CMat& A) {
  Eigen::ComplexEigenSolver<CMat> es(A, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success) throw std::runtime_error("sqrt_det_prod: eigensolver failed");
  cplx r = 1.0;
  for (Eigen::Index i = 0; i < A.rows(); ++i) r *= std::sqrt(es.eigenvalues()[i]);
  return r;
}

struct GaussianAtom {
  cplx c{1.0, 0.0};
  CMat M;   ///< p x p complex symmetric, Im(M) > 0
  CVec b;   ///< complex p-vector
  IVec t0;  ///< point of Z^q

  int p() const { return static_cast<int>(M.rows()); }
  int q() const { return static_cast<int>(t0.size()); }
};

inline GaussianAtom make_atom(cplx c, const CMat& M, const CVec& b, IVec t0 = {}) {
  GaussianAtom a;
  a.c = c;
  a.M = (M + M.transpose()) / 2.0;
  a.b = b;
  a.t0 = std::move(t0);
  return a;
}

/// Standard Gaussian exp(-pi |x|^2) in dimension p.
inline GaussianAtom gaussian0(int p, int q = 0) {
  return make_atom(1.0, cplx(0.0, 1.0) * CMat::Identity(p, p), CVec::Zero(p),
                   IVec(static_cast<size_t>(q), 0));
}

/// Smallest eigenvalue of Im(M) (closure check: must stay > 0).
inline double im_min_eig(const GaussianAtom& a) {
  Eigen::SelfAdjointEigenSolver<Mat> es(a.M.imag());
  return es.eigenvalues().minCoeff();
}

/// f(x - v): b -> b - Mv, c -> c * exp(i pi <Mv,v> - 2 i pi <b,v>).
inline GaussianAtom translate(const GaussianAtom& a, const Vec& v) {
  GaussianAtom r = a;
  const CVec vc = v.cast<cplx>();
  r.b = a.b - a.M * vc;
  r.c = a.c * exp_i_pi((vc.transpose() * a.M * vc).value() - 2.0 * (a.b.transpose() * vc).value());
  return r;
}

/// Multiply by e(<xi, x>): b += xi.
inline GaussianAtom modulate(const GaussianAtom& a, const Vec& xi) {
  GaussianAtom r = a;
  r.b = a.b + xi.cast<cplx>();
  return r;
}

/// Multiply by e(1/2 <Px, x>): M += P.
inline GaussianAtom chirp(const GaussianAtom& a, const Mat& P) {
  GaussianAtom r = a;
  r.M = a.M + P.cast<cplx>();
  return r;
}

/// Fourier transform with kernel e(-<x, x'>).
inline GaussianAtom fourier(const GaussianAtom& a) {
  const CMat Mi = a.M.inverse();
  GaussianAtom r = a;
  r.M = -Mi;
  r.b = Mi * a.b;
  r.c = a.c / sqrt_det_prod(cplx(0.0, -1.0) * a.M) *
        exp_i_pi(-(a.b.transpose() * Mi * a.b).value());
  return r;
}

/// sqrt(det L) f(Lx) substitution (branch per sqrt_det_prod).
inline GaussianAtom substitute(const GaussianAtom& a, const Mat& L) {
  GaussianAtom r = a;
  const CMat Lc = L.cast<cplx>();
  r.M = Lc.transpose() * a.M * Lc;
  r.b = Lc.transpose() * a.b;
  r.c = a.c * sqrt_det_prod(Lc);
  return r;
}

/**
 * Free-symplectic kernel i^{s - m/2} sqrt|det B^{-1}| integral of
 * e(W(x, x')) f(x') dx' with the generating function of fs.
 */
inline GaussianAtom free_apply(const GaussianAtom& a, const FreeSymplectic& fs) {
  const int m = fs.m();
  const Mat Bi = fs.B.inverse();
  const CMat N = a.M + (Bi * fs.A).cast<cplx>();
  const CMat Ni = N.inverse();
  const CMat M2 = (fs.D * Bi).cast<cplx>() - Bi.transpose().cast<cplx>() * Ni * Bi.cast<cplx>();
  GaussianAtom r = a;
  r.M = (M2 + M2.transpose()) / 2.0;
  r.b = Bi.transpose().cast<cplx>() * (Ni * a.b);
  const cplx pref =
      i_pow(fs.s - m / 2.0) * std::sqrt(std::abs(Bi.determinant()));
  r.c = a.c * pref / sqrt_det_prod(cplx(0.0, -1.0) * N) *
        exp_i_pi(-(a.b.transpose() * Ni * a.b).value());
  return r;
}

/// Pointwise complex conjugate: conj(f) is again an atom.
inline GaussianAtom conj_atom(const GaussianAtom& a) {
  GaussianAtom r = a;
  r.c = std::conj(a.c);
  r.M = -a.M.conjugate();
  r.b = -a.b.conjugate();
  return r;
}

/// f(-x, -t).
inline GaussianAtom flip_atom(const GaussianAtom& a) {
  GaussianAtom r = a;
  r.b = -a.b;
  r.t0 = neg(a.t0);
  return r;
}

/// <f, g>_{L^2} = integral f conj(g) (sum over Z^q is the Kronecker delta on t0).
inline cplx l2_inner(const GaussianAtom& f, const GaussianAtom& g) {
  if (f.t0 != g.t0) return 0.0;
  const CMat K = f.M - g.M.conjugate();
  const CVec w = f.b - g.b.conjugate();
  const CMat Ki = K.inverse();
  return f.c * std::conj(g.c) / sqrt_det_prod(cplx(0.0, -1.0) * K) *
         exp_i_pi(-(w.transpose() * Ki * w).value());
}

/// Unconjugated product integral: integral f(x) g(x) dx on matching t0.
inline cplx l2_pair(const GaussianAtom& f, const GaussianAtom& g) {
  if (f.t0 != g.t0) return 0.0;
  const CMat K = f.M + g.M;
  const CVec w = f.b + g.b;
  const CMat Ki = K.inverse();
  return f.c * g.c / sqrt_det_prod(cplx(0.0, -1.0) * K) *
         exp_i_pi(-(w.transpose() * Ki * w).value());
}

/// Pointwise value f(x, t).
inline cplx eval_atom(const GaussianAtom& a, const Vec& x, const IVec& t) {
  if (t != a.t0) return 0.0;
  const CVec xc = x.cast<cplx>();
  return a.c * exp_i_pi((xc.transpose() * a.M * xc).value() + 2.0 * (a.b.transpose() * xc).value());
}

/// A finite linear combination of atoms sharing (p, q).
struct FunctionState {
  std::vector<GaussianAtom> atoms;

  FunctionState() = default;
  explicit FunctionState(GaussianAtom a) : atoms{std::move(a)} {}
  explicit FunctionState(std::vector<GaussianAtom> as) : atoms(std::move(as)) {}

  template <typename F>
  FunctionState map(F&& f) const {
    FunctionState r;
    r.atoms.reserve(atoms.size());
    for (const auto& a : atoms) r.atoms.push_back(f(a));
    return r;
  }

  FunctionState scaled(cplx s) const {
    return map([&](const GaussianAtom& a) {
      GaussianAtom b = a;
      b.c *= s;
      return b;
    });
  }

  FunctionState& append(const FunctionState& o) {
    atoms.insert(atoms.end(), o.atoms.begin(), o.atoms.end());
    return *this;
  }
};

inline cplx l2_inner(const FunctionState& f, const FunctionState& g) {
  cplx s = 0.0;
  for (const auto& a : f.atoms)
    for (const auto& b : g.atoms) s += l2_inner(a, b);
  return s;
}

inline cplx eval_state(const FunctionState& f, const Vec& x, const IVec& t) {
  cplx s = 0.0;
  for (const auto& a : f.atoms) s += eval_atom(a, x, t);
  return s;
}

/// Relative L^2 distance ||f - g|| / ||f|| via exact Gram computation.
inline double rel_l2_distance(const FunctionState& f, const FunctionState& g) {
  const cplx ff = l2_inner(f, f), gg = l2_inner(g, g), fg = l2_inner(f, g);
  const double n2 = std::abs(ff - 2.0 * cplx(fg.real(), 0.0) + gg);
  const double d = std::abs(ff);
  return d == 0.0 ? std::sqrt(n2) : std::sqrt(n2 / d);
}

/**
 * Atomwise relative distance for states produced from the same atom list by
 * two chains of closed-form operations (atom order is preserved by every
 * operation, so corresponding atoms must match parameter-by-parameter).
 * Returns a large value when atom counts or lattice offsets disagree.
 */
inline double atomwise_distance(const FunctionState& f, const FunctionState& g) {
  if (f.atoms.size() != g.atoms.size()) return 1e30;
  double r = 0.0;
  for (size_t i = 0; i < f.atoms.size(); ++i) {
    const auto& a = f.atoms[i];
    const auto& b = g.atoms[i];
    if (a.t0 != b.t0) return 1e30;
    const double scale = std::max({std::abs(a.c), std::abs(b.c), 1e-300});
    double d = std::abs(a.c - b.c) / scale;
    d += (a.M - b.M).cwiseAbs().maxCoeff();
    d += (a.b - b.b).cwiseAbs().maxCoeff();
    r = std::max(r, d);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Sampled-grid quadrature oracle (p = 1, q = 0): an independent cross-check
// backend for the closed forms.
// ---------------------------------------------------------------------------

struct Grid1d {
  double R = 12.0;
  int N = 16384;

  double x(int i) const { return -R + 2.0 * R * i / N; }
  double dx() const { return 2.0 * R / N; }
};

inline CVec grid_eval(const FunctionState& f, const Grid1d& g) {
  CVec v(g.N);
  Vec xx(1);
  for (int i = 0; i < g.N; ++i) {
    xx[0] = g.x(i);
    v[i] = eval_state(f, xx, {});
  }
  return v;
}

inline cplx grid_inner(const FunctionState& f, const FunctionState& h, const Grid1d& g) {
  const CVec vf = grid_eval(f, g), vh = grid_eval(h, g);
  return (vf.array() * vh.array().conjugate()).sum() * g.dx();
}

/// Riemann-sum Fourier transform (kernel e(-x xi)) of f at the point xi.
inline cplx grid_fourier_at(const FunctionState& f, double xi, const Grid1d& g) {
  const CVec vf = grid_eval(f, g);
  cplx s = 0.0;
  for (int i = 0; i < g.N; ++i) s += vf[i] * e(-xi * g.x(i));
  return s * g.dx();
}

}  // namespace nct
