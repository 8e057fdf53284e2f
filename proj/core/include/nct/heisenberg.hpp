/**
 * @file heisenberg.hpp
 * @brief The Heisenberg bimodule on FunctionStates: right A-action, A-valued
 *        inner product, left B-action, B-valued inner product, the flip
 *        operator, and the crossed-product module action.
 *
 * Calibrated conventions (fixed by the pre-build study; see the project
 * decision ledger):
 *  - The right action at lattice point l uses v = T l; its composition law is
 *    the Presentation cocycle of the algebra with parameter -T^T J T (= -theta
 *    for the canonical embedding), so inner_A is valued in A(-theta).
 *  - inner_B is valued in A(-theta') and carries the normalization
 *    1/|det T11|, which is exactly the constant making the imprimitivity
 *    identity _B<f,g> . h = f . <g,h>_A hold on the nose.
 *  - The coefficient identity <f,g>_A(l) = <g U_{-l}, f>_{L^2} holds exactly.
 */
#pragma once

#include <functional>

#include "nct/algebra.hpp"
#include "nct/gaussian.hpp"

namespace nct {

struct SplitVector {
  Vec vx, vxi, vtau;
  IVec vt;
};

/// Split v in R^{2p+2q} into (x-shift, modulation, Z^q-shift, dual character).
inline SplitVector split_tv(const Vec& v, int p, int q) {
  SplitVector s;
  s.vx = v.segment(0, p);
  s.vxi = v.segment(p, p);
  s.vt.resize(static_cast<size_t>(q));
  for (int i = 0; i < q; ++i) {
    const double t = v[2 * p + i];
    const double r = std::round(t);
    if (std::abs(t - r) > 1e-9)
      throw std::invalid_argument("split_tv: non-integer Z^q component");
    s.vt[static_cast<size_t>(i)] = static_cast<int>(r);
  }
  s.vtau = v.segment(2 * p + q, q);
  return s;
}

inline double dot_ivec(const Vec& v, const IVec& t) {
  double s = 0.0;
  for (size_t i = 0; i < t.size(); ++i) s += v[static_cast<Eigen::Index>(i)] * t[i];
  return s;
}

/// Module context: embedding data plus algebra conventions and tail control.
struct ModuleContext {
  EmbeddingContext emb;
  Convention conv = Convention::Presentation;
  double tail_tol = 1e-12;  ///< certified-tail threshold for lattice windows
  int max_window = 32;

  SkewMatrix theta_A;  ///< coefficient algebra of inner_A: -T^T J T
  SkewMatrix theta_B;  ///< coefficient algebra of inner_B: -theta'

  explicit ModuleContext(EmbeddingContext e, Convention c = Convention::Presentation)
      : emb(std::move(e)), conv(c) {
    theta_A = SkewMatrix(-(emb.T.transpose() * emb.J * emb.T), 1e-8);
    theta_B = SkewMatrix(-emb.thetap.mat(), 1e-8);
  }

  int p() const { return emb.p; }
  int q() const { return emb.q; }
  int n() const { return emb.n(); }
};

/**
 * The elementary right-action operator at parameter vector v = T l:
 * phase e(-1/2 <v, J'v>), shift by v_x, modulation by v_xi, lattice shift by
 * v_t, and the character e(<v_tau, t0 + v_t>).
 */
inline FunctionState heisenberg_shift(const FunctionState& f, const Vec& v, const Mat& Jp, int p,
                                      int q) {
  const SplitVector s = split_tv(v, p, q);
  const cplx ph = e(-0.5 * v.dot(Jp * v));
  return f.map([&](const GaussianAtom& a) {
    GaussianAtom b = modulate(translate(a, s.vx), s.vxi);
    b.t0 = add(a.t0, s.vt);
    b.c *= ph * e(dot_ivec(s.vtau, b.t0));
    return b;
  });
}

/// Right action f . U_l at a (possibly real) lattice parameter l.
inline FunctionState right_act(const ModuleContext& ctx, const FunctionState& f, const Vec& l) {
  return heisenberg_shift(f, ctx.emb.T * l, ctx.emb.Jp, ctx.p(), ctx.q());
}

inline FunctionState right_act(const ModuleContext& ctx, const FunctionState& f, const IVec& l) {
  return right_act(ctx, f, to_vec(l));
}

/// Left action V_l f with v = S l (mirrored signs).
inline FunctionState left_act(const ModuleContext& ctx, const IVec& l, const FunctionState& f) {
  const Vec v = ctx.emb.S * to_vec(l);
  const SplitVector s = split_tv(v, ctx.p(), ctx.q());
  const cplx ph = e(-0.5 * v.dot(ctx.emb.Jp * v));
  return f.map([&](const GaussianAtom& a) {
    GaussianAtom b = modulate(translate(a, -s.vx), -s.vxi);
    b.t0 = add(a.t0, neg(s.vt));
    b.c *= ph * e(-dot_ivec(s.vtau, b.t0));
    return b;
  });
}

/// <f,g>_A coefficient at (possibly real) lattice parameter l: <g U_{-l}, f>_{L^2}.
inline cplx inner_A_coeff(const ModuleContext& ctx, const FunctionState& f, const FunctionState& g,
                          const Vec& l) {
  return l2_inner(right_act(ctx, g, Vec(-l)), f);
}

inline cplx inner_A_coeff(const ModuleContext& ctx, const FunctionState& f, const FunctionState& g,
                          const IVec& l) {
  return inner_A_coeff(ctx, f, g, to_vec(l));
}

/**
 * _B<f,g> coefficient at l: the S-based formula with the opposite phase sign
 * and an unconjugated product integral, normalized by 1/|det T11|.
 */
inline cplx inner_B_coeff(const ModuleContext& ctx, const FunctionState& f, const FunctionState& g,
                          const IVec& l) {
  const Vec v = ctx.emb.S * to_vec(l);
  const SplitVector s = split_tv(v, ctx.p(), ctx.q());
  const cplx ph = e(+0.5 * v.dot(ctx.emb.Jp * v));
  cplx tot = 0.0;
  for (const auto& ga : g.atoms) {
    GaussianAtom cg = translate(conj_atom(ga), -s.vx);
    cg.t0 = add(ga.t0, neg(s.vt));
    const GaussianAtom mm = modulate(cg, s.vxi);
    for (const auto& fa : f.atoms) {
      if (fa.t0 != mm.t0) continue;
      tot += l2_pair(mm, fa) * e(dot_ivec(s.vtau, mm.t0));
    }
  }
  return ph * tot / ctx.emb.abs_det_T11;
}

/// Windowed AlgebraElement assembly: grow the radius until a full shell of
/// coefficients falls below the certified tail threshold.
template <typename CoeffFn>
inline AlgebraElement windowed_element(const ModuleContext& ctx, const SkewMatrix& theta,
                                       CoeffFn&& coeff) {
  const int n = ctx.n();
  AlgebraElement r(theta, ctx.conv);
  IVec l(static_cast<size_t>(n), 0);
  // radius-0 term
  r.accumulate(l, coeff(l));
  for (int rad = 1; rad <= ctx.max_window; ++rad) {
    double shell_max = 0.0;
    // enumerate the sup-norm shell |l|_inf == rad
    std::function<void(int)> rec = [&](int i) {
      if (i == n) {
        bool on_shell = false;
        for (int v : l)
          if (std::abs(v) == rad) on_shell = true;
        if (!on_shell) return;
        const cplx c = coeff(l);
        shell_max = std::max(shell_max, std::abs(c));
        if (std::abs(c) > 0.0) r.accumulate(l, c);
        return;
      }
      for (int v = -rad; v <= rad; ++v) {
        l[static_cast<size_t>(i)] = v;
        rec(i + 1);
      }
    };
    rec(0);
    if (shell_max < ctx.tail_tol) return r.pruned(ctx.tail_tol);
  }
  throw std::runtime_error("windowed_element: tail bound not reached within max_window");
}

inline AlgebraElement inner_A(const ModuleContext& ctx, const FunctionState& f,
                              const FunctionState& g) {
  return windowed_element(ctx, ctx.theta_A,
                          [&](const IVec& l) { return inner_A_coeff(ctx, f, g, l); });
}

inline AlgebraElement inner_B(const ModuleContext& ctx, const FunctionState& f,
                              const FunctionState& g) {
  return windowed_element(ctx, ctx.theta_B,
                          [&](const IVec& l) { return inner_B_coeff(ctx, f, g, l); });
}

/// T_W for W = -I: f(x, t) -> f(-x, -t).
inline FunctionState flip_op(const FunctionState& f) {
  return f.map([](const GaussianAtom& a) { return flip_atom(a); });
}

/// Extend the right action linearly to algebra elements: f . (sum a_l U_l).
inline FunctionState act_algebra(const ModuleContext& ctx, const FunctionState& f,
                                 const AlgebraElement& a) {
  FunctionState r;
  for (const auto& [l, v] : a.coeffs()) r.append(right_act(ctx, f, l).scaled(v));
  return r;
}

/// One module-level operator per group power g = 0..r-1 (g = 0 must be the identity).
using ModuleGroupOps = std::vector<std::function<FunctionState(const FunctionState&)>>;

/// Crossed-product module action f . (sum_g a_g delta_g) = sum_g W_g(f . a_g).
template <typename Orbifold>
inline FunctionState crossed_module_act(const ModuleContext& ctx, const FunctionState& f,
                                        const Orbifold& x, const ModuleGroupOps& ops) {
  FunctionState r;
  for (const auto& [g, a] : x.parts())
    r.append(ops.at(static_cast<size_t>(g))(act_algebra(ctx, f, a)));
  return r;
}

}  // namespace nct
