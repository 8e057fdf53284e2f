/**
 * @file metaplectic.hpp
 * @brief Metaplectic operators on FunctionStates: generator words in
 *        {Fourier, Sub(L), Chirp(P)}, free-symplectic operators, composition,
 *        projection to the symplectic group, order/scalar-lift computation,
 *        and the hexic operator.
 *
 * Projection conventions.  Each step covers a classical symplectic matrix:
 *   Fourier (kernel e(-<x,x'>))      -> [[0, I],[-I, 0]]
 *   Sub(L)  (sqrt(det L) f(Lx))      -> [[L^{-1}, 0],[0, L^T]]
 *   Chirp(P)(e(1/2<Px,x>) f)         -> [[I, 0],[P, I]]
 *   Free(A,B,C,D,s)                  -> [[A, B],[C, D]]
 * classical_matrix(op) is the matrix of the composed map (last step leftmost).
 * The matrix entering the module equivariance identity
 *   (F f) U_l = F (f U_{W_theta l}),  W_theta = T^{-1} right_matrix(op) T
 * is right_matrix(op) = classical_matrix(op)^{-1}: each generator contributes
 * the inverse of its classical matrix, composed in application order.
 */
#pragma once

#include <variant>

#include "nct/gaussian.hpp"

namespace nct {

struct GenFourier {};
struct GenSub {
  Mat L;
};
struct GenChirp {
  Mat P;
};
using MetaplecticStep = std::variant<GenFourier, GenSub, GenChirp, FreeSymplectic>;

struct MetaplecticOp {
  cplx scalar{1.0, 0.0};
  std::vector<MetaplecticStep> steps;  ///< applied in order: steps[0] first
  int m = 1;                           ///< dimension of the continuous variable

  MetaplecticOp scaled(cplx z) const {
    MetaplecticOp r = *this;
    r.scalar *= z;
    return r;
  }
};

inline MetaplecticOp op_identity(int m) { return MetaplecticOp{1.0, {}, m}; }
inline MetaplecticOp op_fourier(int m) { return MetaplecticOp{1.0, {GenFourier{}}, m}; }
inline MetaplecticOp op_sub(const Mat& L) {
  return MetaplecticOp{1.0, {GenSub{L}}, static_cast<int>(L.rows())};
}
inline MetaplecticOp op_chirp(const Mat& P) {
  return MetaplecticOp{1.0, {GenChirp{P}}, static_cast<int>(P.rows())};
}
inline MetaplecticOp op_free(const FreeSymplectic& fs) {
  return MetaplecticOp{1.0, {fs}, fs.m()};
}

/// Classical symplectic matrix covered by a single step.
inline Mat step_classical(const MetaplecticStep& st, int m) {
  Mat W = Mat::Zero(2 * m, 2 * m);
  if (std::holds_alternative<GenFourier>(st)) {
    W.block(0, m, m, m) = Mat::Identity(m, m);
    W.block(m, 0, m, m) = -Mat::Identity(m, m);
  } else if (const auto* s = std::get_if<GenSub>(&st)) {
    W.block(0, 0, m, m) = s->L.inverse();
    W.block(m, m, m, m) = s->L.transpose();
  } else if (const auto* c = std::get_if<GenChirp>(&st)) {
    W.setIdentity();
    W.block(m, 0, m, m) = c->P;
  } else {
    W = std::get<FreeSymplectic>(st).assemble();
  }
  return W;
}

/// Matrix of the composed classical map (steps applied left to right).
inline Mat classical_matrix(const MetaplecticOp& op) {
  Mat W = Mat::Identity(2 * op.m, 2 * op.m);
  for (const auto& st : op.steps) W = step_classical(st, op.m) * W;
  return W;
}

/// The matrix entering the right-action equivariance identity.
inline Mat right_matrix(const MetaplecticOp& op) { return classical_matrix(op).inverse(); }

inline GaussianAtom apply_step(const MetaplecticStep& st, const GaussianAtom& a) {
  if (std::holds_alternative<GenFourier>(st)) return fourier(a);
  if (const auto* s = std::get_if<GenSub>(&st)) return substitute(a, s->L);
  if (const auto* c = std::get_if<GenChirp>(&st)) return chirp(a, c->P);
  return free_apply(a, std::get<FreeSymplectic>(st));
}

inline FunctionState apply(const MetaplecticOp& op, const FunctionState& f) {
  FunctionState r = f;
  for (const auto& st : op.steps) r = r.map([&](const GaussianAtom& a) { return apply_step(st, a); });
  return r.scaled(op.scalar);
}

/// compose(a, b): apply a first, then b; projections multiply accordingly.
inline MetaplecticOp compose(const MetaplecticOp& a, const MetaplecticOp& b) {
  if (a.m != b.m) throw std::invalid_argument("compose: dimension mismatch");
  MetaplecticOp r = a;
  r.scalar = a.scalar * b.scalar;
  r.steps.insert(r.steps.end(), b.steps.begin(), b.steps.end());
  return r;
}

/// Result of an operator-order probe.
struct OrderResult {
  cplx lambda{0.0, 0.0};
  double variance = 0.0;      ///< max deviation of per-probe scalars from lambda
  double shape_residual = 0.0;  ///< max parameter mismatch op^r(f) vs lambda f
  bool scalar_ok = false;
};

/// Deterministic random probe atom with controlled width and center.
inline GaussianAtom random_atom(Rng& rng, int p, int q = 0, int t_range = 0) {
  CMat M(p, p);
  Mat re = Mat::Zero(p, p);
  for (int i = 0; i < p; ++i)
    for (int j = i; j < p; ++j) re(i, j) = re(j, i) = 0.3 * runif(rng, -1.0, 1.0);
  Mat y = Mat::Zero(p, p);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) y(i, j) = runif(rng, -1.0, 1.0);
  const Mat im = y * y.transpose() + Mat::Identity(p, p) * runif(rng, 0.8, 1.6);
  M = re.cast<cplx>() + cplx(0.0, 1.0) * im.cast<cplx>();
  CVec b(p);
  for (int i = 0; i < p; ++i) b[i] = cplx(runif(rng, -0.5, 0.5), runif(rng, -0.5, 0.5));
  IVec t0(static_cast<size_t>(q), 0);
  for (int i = 0; i < q; ++i) t0[static_cast<size_t>(i)] = rint(rng, -t_range, t_range);
  return make_atom(cplx(runif(rng, 0.5, 1.5), runif(rng, -0.5, 0.5)), M, b, t0);
}

/**
 * Verify proj(op)^r = I, apply op r times to nprobes random atoms and return
 * the common scalar lambda with op^r = lambda * Id.
 */
inline OrderResult operator_order(const MetaplecticOp& op, int r, Rng& rng, int nprobes = 10) {
  const Mat W = right_matrix(op);
  Mat Wr = Mat::Identity(2 * op.m, 2 * op.m);
  for (int i = 0; i < r; ++i) Wr = W * Wr;
  if ((Wr - Mat::Identity(2 * op.m, 2 * op.m)).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("operator_order: proj(op)^r != I");

  OrderResult res;
  std::vector<cplx> lambdas;
  for (int k = 0; k < nprobes; ++k) {
    const GaussianAtom a = random_atom(rng, op.m);
    FunctionState f{a};
    for (int i = 0; i < r; ++i) f = apply(op, f);
    if (f.atoms.size() != 1) throw std::runtime_error("operator_order: op^r not atom-preserving");
    const GaussianAtom& y = f.atoms[0];
    res.shape_residual = std::max(
        res.shape_residual, (y.M - a.M).cwiseAbs().maxCoeff() + (y.b - a.b).cwiseAbs().maxCoeff());
    lambdas.push_back(y.c / a.c);
  }
  res.lambda = lambdas[0];
  for (const cplx& l : lambdas)
    res.variance = std::max(res.variance, std::abs(l - res.lambda));
  res.scalar_ok = res.variance <= 1e-9 && res.shape_residual <= 1e-9;
  return res;
}

/// z * op with z = lambda^{-1/r} (principal root), so (z op)^r = Id.
inline MetaplecticOp scalar_lift(const MetaplecticOp& op, int r, Rng& rng, int nprobes = 10) {
  const OrderResult res = operator_order(op, r, rng, nprobes);
  if (!res.scalar_ok) throw std::runtime_error("scalar_lift: op^r is not a consistent scalar");
  const double phi = std::arg(res.lambda);
  return op.scaled(std::polar(1.0, -phi / r));
}

/// The hexic free operator sqrt(i) integral e(xx' - x'^2/2) f(x') dx':
/// Free(A=1, B=-1, C=1, D=0, s=1).  Satisfies op^6 = -Id.
inline MetaplecticOp hexic() { return op_free(free1(1.0, -1.0, 1.0, 0.0, 1)); }

/// The i^{-1/3}-corrected hexic operator of exact order 6.
inline MetaplecticOp hexic_corrected() { return hexic().scaled(i_pow(-1.0 / 3.0)); }

/**
 * General-theta hexic operator
 *   f -> i^{1/6} theta^{-1/2} integral e((2xx' - x'^2)/(2 theta)) f(x') dx',
 * realized as i^{-1/3} Free(1, -theta, 1/theta, 0, s=1); equivariant for
 * W_6 = [[0,-1],[1,1]] under the embedding T = diag(-theta, 1).
 */
inline MetaplecticOp hexic_general(double theta12) {
  if (theta12 <= 0.0) throw std::invalid_argument("hexic_general: requires theta12 > 0");
  return op_free(free1(1.0, -theta12, 1.0 / theta12, 0.0, 1)).scaled(i_pow(-1.0 / 3.0));
}

/**
 * Inverse operator: classical-inverse free data with the scalar fixed by a
 * single probe so that inv(op(f)) = f exactly.  Requires the inverse
 * classical matrix to be free (invertible upper-right block).
 */
inline MetaplecticOp op_inverse(const MetaplecticOp& op, Rng& rng) {
  const Mat Wi = classical_matrix(op).inverse();
  const int m = op.m;
  FreeSymplectic fs;
  fs.A = Wi.block(0, 0, m, m);
  fs.B = Wi.block(0, m, m, m);
  fs.C = Wi.block(m, 0, m, m);
  fs.D = Wi.block(m, m, m, m);
  fs.s = 1;
  if (std::abs(fs.B.determinant()) < 1e-12)
    throw std::invalid_argument("op_inverse: inverse matrix is not free");
  MetaplecticOp inv = op_free(fs);
  const GaussianAtom a = random_atom(rng, m);
  const FunctionState y = apply(inv, apply(op, FunctionState{a}));
  if (y.atoms.size() != 1 ||
      (y.atoms[0].M - a.M).cwiseAbs().maxCoeff() + (y.atoms[0].b - a.b).cwiseAbs().maxCoeff() >
          1e-9)
    throw std::runtime_error("op_inverse: probe shape mismatch");
  return inv.scaled(a.c / y.atoms[0].c);
}

}  // namespace nct
