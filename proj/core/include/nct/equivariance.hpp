/**
 * @file equivariance.hpp
 * @brief Orchestrated verification of the module equivariance theorem:
 *        (F f) U_l = F (f U_{W_theta l}) for generator operators over
 *        theta = -J, for general nondegenerate theta via change of frame,
 *        the inner-product compatibility, the flip extension, and the
 *        imprimitivity identity.
 */
#pragma once

#include "nct/heisenberg.hpp"
#include "nct/metaplectic.hpp"

namespace nct {

/// W_theta = T^{-1} right_matrix(op) T for a square embedding frame T (q = 0).
inline Mat w_theta_of(const MetaplecticOp& op, const EmbeddingContext& emb) {
  if (emb.q != 0) throw std::invalid_argument("w_theta_of: requires q = 0");
  return emb.T.inverse() * right_matrix(op) * emb.T;
}

/// Main identity residual (atomwise): ||(F f)U_l - F(f U_{W_theta l})||.
inline double check_main_identity(const ModuleContext& ctx, const MetaplecticOp& op,
                                  const Mat& W_theta, const FunctionState& f, const Vec& l) {
  const FunctionState lhs = right_act(ctx, apply(op, f), l);
  const FunctionState rhs = apply(op, right_act(ctx, f, Vec(W_theta * l)));
  return atomwise_distance(lhs, rhs);
}

/**
 * Change of frame (q = 0): f U^theta_{W_theta l} = f U^{J}_{W (T l)} where the
 * right side uses the identity frame T = I over the standard form.
 */
inline double check_change_of_frame(const ModuleContext& ctx, const MetaplecticOp& op,
                                    const Mat& W_theta, const FunctionState& f, const Vec& l) {
  const int p = ctx.p();
  if (ctx.q() != 0) throw std::invalid_argument("check_change_of_frame: requires q = 0");
  const Mat Jp0 = J0m(p).cwiseMax(0.0);
  const FunctionState lhs = right_act(ctx, f, Vec(W_theta * l));
  const FunctionState rhs = heisenberg_shift(f, right_matrix(op) * (ctx.emb.T * l), Jp0, p, 0);
  return atomwise_distance(lhs, rhs);
}

/**
 * Inner-product compatibility:
 *   <f, g W>_A(l) = alpha_{W^{-1}}(<f W^{-1}, g>_A)(l) = <f W^{-1}, g>_A
 * evaluated at the (generally non-integer) parameter W_theta l.
 */
inline double check_inner_compat(const ModuleContext& ctx, const MetaplecticOp& op,
                                 const MetaplecticOp& op_inv, const Mat& W_theta,
                                 const FunctionState& f, const FunctionState& g, const IVec& l) {
  const cplx lhs = inner_A_coeff(ctx, f, apply(op, g), l);
  const cplx rhs = inner_A_coeff(ctx, apply(op_inv, f), g, Vec(W_theta * to_vec(l)));
  return std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs));
}

/// Flip extension: flip(f U_l) = (flip f) U_{-l} for all |l|_inf <= radius.
inline double check_flip_extension(const ModuleContext& ctx, const FunctionState& f, int radius) {
  double worst = 0.0;
  const int n = ctx.n();
  IVec l(static_cast<size_t>(n), 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      const FunctionState lhs = flip_op(right_act(ctx, f, l));
      const FunctionState rhs = right_act(ctx, flip_op(f), neg(l));
      worst = std::max(worst, atomwise_distance(lhs, rhs));
      return;
    }
    for (int v = -radius; v <= radius; ++v) {
      l[static_cast<size_t>(i)] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return worst;
}

/// The module context for theta = -J0 in dimension 2m with frame T = diag(-I, I).
inline ModuleContext standard_module(int m) {
  Mat T = Mat::Identity(2 * m, 2 * m);
  T.block(0, 0, m, m) = -Mat::Identity(m, m);
  const SkewMatrix theta(-J0m(m));
  return ModuleContext(build_embedding(theta, m, 0, &T));
}

/// The 2-d module context with frame T = diag(-theta12, 1).
inline ModuleContext hexic_module(double theta12) {
  Mat T = Mat::Zero(2, 2);
  T(0, 0) = -theta12;
  T(1, 1) = 1.0;
  return ModuleContext(build_embedding(skew2(-theta12), 1, 0, &T));
}

/**
 * Theorem proof replay: the three generator families over theta = -J0 in
 * dimension 2m, each checked at every basis direction e_i for both proof
 * regimes (i <= m and i > m), over nprobes random atoms.  Returns the worst
 * residual.
 */
inline double six_families_residual(int m, Rng& rng, int nprobes = 10) {
  const ModuleContext ctx = standard_module(m);
  std::vector<MetaplecticOp> ops;
  ops.push_back(op_fourier(m));
  {
    Mat L(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) L(i, j) = runif(rng, -1.0, 1.0) + (i == j ? 1.5 : 0.0);
    ops.push_back(op_sub(L));
    Mat P(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = i; j < m; ++j) P(i, j) = P(j, i) = runif(rng, -1.0, 1.0);
    ops.push_back(op_chirp(P));
  }
  double worst = 0.0;
  for (const auto& op : ops) {
    const Mat W_theta = w_theta_of(op, ctx.emb);
    for (int i = 0; i < 2 * m; ++i) {
      const Vec l = Vec::Unit(2 * m, i);
      for (int k = 0; k < nprobes; ++k) {
        const FunctionState f{random_atom(rng, m)};
        worst = std::max(worst, check_main_identity(ctx, op, W_theta, f, l));
      }
    }
  }
  return worst;
}

/// Random nondegenerate skew matrix of even dimension 2p with entries in (lo, hi).
inline SkewMatrix random_skew(int n, Rng& rng, double lo = 0.2, double hi = 0.9) {
  Mat m = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      m(i, j) = runif(rng, lo, hi) * (rint(rng, 0, 1) ? 1.0 : -1.0);
      m(j, i) = -m(i, j);
    }
  return SkewMatrix(m);
}

/// Imprimitivity check _B<f,g> . h = f . <g,h>_A via pointwise evaluation.
struct ImprimitivityReport {
  double residual = 0.0;  ///< relative sup-norm over the sample set
  int window = 0;
};

inline ImprimitivityReport check_imprimitivity(const ModuleContext& ctx, const FunctionState& f,
                                               const FunctionState& g, const FunctionState& h,
                                               int window) {
  FunctionState lhs, rhs;
  const int n = ctx.n();
  IVec l(static_cast<size_t>(n), 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      const cplx cb = inner_B_coeff(ctx, f, g, l);
      if (std::abs(cb) > 1e-18) lhs.append(left_act(ctx, l, h).scaled(cb));
      const cplx ca = inner_A_coeff(ctx, g, h, l);
      if (std::abs(ca) > 1e-18) rhs.append(right_act(ctx, f, l).scaled(ca));
      return;
    }
    for (int v = -window; v <= window; ++v) {
      l[static_cast<size_t>(i)] = v;
      rec(i + 1);
    }
  };
  rec(0);

  // Pointwise comparison on a fixed sample set (exact evaluation of both
  // closed-form sums; no quadrature, no Gram cancellation floor).
  const std::vector<double> xs = {-1.7, -1.1, -0.6, -0.2, 0.1, 0.4, 0.8, 1.3, 1.9};
  std::vector<IVec> ts;
  if (ctx.q() == 0)
    ts.push_back({});
  else
    for (int t = -2; t <= 2; ++t) ts.push_back(IVec{t});
  double diff = 0.0, scale = 0.0;
  Vec x(1);
  for (double xv : xs)
    for (const IVec& t : ts) {
      x[0] = xv;
      const cplx a = eval_state(lhs, x, t);
      const cplx b = eval_state(rhs, x, t);
      diff = std::max(diff, std::abs(a - b));
      scale = std::max(scale, std::abs(a));
    }
  ImprimitivityReport rep;
  rep.window = window;
  rep.residual = scale > 0.0 ? diff / scale : diff;
  return rep;
}

}  // namespace nct
