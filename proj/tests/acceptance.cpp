// Acceptance suite: the ten pinned criteria, one pass/fail line each.
// Exit code 0 iff every criterion passes.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include <nct/nct.hpp>

using namespace nct;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int k, bool pass, const std::string& desc) {
  std::printf("CRITERION %d: %s — %s\n", k, pass ? "PASS" : "FAIL", desc.c_str());
  if (!pass) ++g_failures;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2e", x);
  return buf;
}

// ---------------------------------------------------------------------------

void criterion1_hexic_order() {
  const auto t0 = Clock::now();
  Rng rng(1001);
  const OrderResult base = operator_order(hexic(), 6, rng, 10);
  const MetaplecticOp lifted = scalar_lift(hexic(), 6, rng, 10);
  const OrderResult lift = operator_order(lifted, 6, rng, 10);
  const double lam_res = std::abs(base.lambda - cplx(-1.0));
  const double lift_res =
      std::abs(lift.lambda - cplx(1.0)) + lift.variance + lift.shape_residual;
  const double dt = seconds_since(t0);
  const bool pass = lam_res <= 1e-9 && base.variance <= 1e-9 && base.shape_residual <= 1e-9 &&
                    lift_res <= 1e-9 && dt < 1.0;
  report(1, pass,
         "hexic operator order: lambda = -1 (residual " + fmt(lam_res) + ", variance " +
             fmt(base.variance) + "), lifted order-6 residual " + fmt(lift_res) + ", " +
             fmt(dt) + " s");
}

void criterion2_equivariance_families() {
  const auto t0 = Clock::now();
  Rng rng(1002);
  double fam = 0.0;
  for (int m : {1, 2}) fam = std::max(fam, six_families_residual(m, rng, 10));
  double gen = 0.0;
  for (int p : {1, 2}) {
    for (int rep = 0; rep < 5; ++rep) {
      const ModuleContext ctx(build_embedding(random_skew(2 * p, rng), p, 0));
      const MetaplecticOp op = op_fourier(p);
      const Mat Wt = w_theta_of(op, ctx.emb);
      for (int i = 0; i < 2 * p; ++i) {
        const Vec l = Vec::Unit(2 * p, i);
        const FunctionState f{random_atom(rng, p)};
        gen = std::max(gen, check_main_identity(ctx, op, Wt, f, l));
        gen = std::max(gen, check_change_of_frame(ctx, op, Wt, f, l));
      }
    }
  }
  const double dt = seconds_since(t0);
  const bool pass = fam <= 1e-10 && gen <= 1e-10 && dt < 30.0;
  report(2, pass,
         "equivariance families m in {1,2} residual " + fmt(fam) +
             ", general-theta main/change residual " + fmt(gen) + ", " + fmt(dt) + " s");
}

void criterion3_inner_compat() {
  Rng rng(1003);
  double closed = 0.0, windowed = 0.0;
  for (int p : {1, 2}) {
    for (int rep = 0; rep < 5; ++rep) {
      const ModuleContext ctx(build_embedding(random_skew(2 * p, rng), p, 0));
      const MetaplecticOp op = op_fourier(p);
      const MetaplecticOp inv = op_inverse(op, rng);
      const Mat Wt = w_theta_of(op, ctx.emb);
      for (int i = 0; i < 2 * p; ++i) {
        IVec l(static_cast<size_t>(2 * p), 0);
        l[static_cast<size_t>(i)] = 1;
        const FunctionState f{random_atom(rng, p)}, g{random_atom(rng, p)};
        closed = std::max(closed, check_inner_compat(ctx, op, inv, Wt, f, g, l));
      }
      if (p == 1) {
        const FunctionState f{random_atom(rng, 1)}, g{random_atom(rng, 1)};
        const AlgebraElement lhs = inner_A(ctx, f, apply(op, g));
        for (const auto& [l, v] : lhs.coeffs()) {
          const cplx rhs = inner_A_coeff(ctx, apply(inv, f), g, Vec(Wt * to_vec(l)));
          windowed = std::max(windowed, std::abs(v - rhs));
        }
      }
    }
  }
  const bool pass = closed <= 1e-10 && windowed <= 1e-8;
  report(3, pass,
         "inner-product compatibility: closed-form residual " + fmt(closed) +
             ", lattice-window residual " + fmt(windowed));
}

void criterion4_imprimitivity() {
  Rng rng(1004);
  double worst = 0.0;
  for (int t = 0; t < 10; ++t) {
    const ModuleContext ctx(build_embedding(skew2(runif(rng, 0.3, 0.8)), 1, 0));
    const FunctionState f{random_atom(rng, 1)}, g{random_atom(rng, 1)}, h{random_atom(rng, 1)};
    worst = std::max(worst, check_imprimitivity(ctx, f, g, h, 10).residual);
  }
  for (int t = 0; t < 10; ++t) {
    const ModuleContext ctx(build_embedding(fixtures::theta3d(runif(rng, 0.3, 0.8)), 1, 1));
    const FunctionState f{random_atom(rng, 1, 1, 0)};
    FunctionState g;
    g.atoms.push_back(random_atom(rng, 1, 1, 0));
    g.atoms.push_back(random_atom(rng, 1, 1, 1));
    const FunctionState h{random_atom(rng, 1, 1, 0)};
    worst = std::max(worst, check_imprimitivity(ctx, f, g, h, 7).residual);
  }
  report(4, worst <= 1e-10,
         "imprimitivity _B<f,g>.h = f.<g,h>_A, p = 1, q in {0,1}, 10 triples each: residual " +
             fmt(worst));
}

void criterion5_flip_extension() {
  Rng rng(1005);
  const ModuleContext ctx(build_embedding(fixtures::theta3d(), 1, 1));
  double worst = 0.0;
  for (int t = 0; t < 3; ++t) {
    FunctionState f;
    f.atoms.push_back(random_atom(rng, 1, 1, 1));
    worst = std::max(worst, check_flip_extension(ctx, f, 3));
  }
  report(5, worst <= 1e-12,
         "flip extension on the 3-d fixture, all |l| <= 3: residual " + fmt(worst));
}

void criterion6_projections() {
  double worst = 0.0;
  for (int i = 1; i <= 8; ++i) {
    const ProjectionReport r = projection_report(build_projection(i, fixtures::theta3d()));
    worst = std::max({worst, r.idempotent, r.selfadjoint, r.trace_residual});
  }
  report(6, worst <= 1e-12,
         "projections P1..P8: idempotent, self-adjoint, trace 1/2 (worst residual " + fmt(worst) +
             ")");
}

void criterion7_rieffel() {
  RieffelData d;
  double prev = 1e9, at64 = 1e9, tr64 = 1e9;
  bool monotone = true;
  for (int K : {16, 32, 64, 128}) {
    d.fourier_cutoff = K;
    const RieffelReport r = rieffel_projection(d);
    if (r.proj_residual >= prev) monotone = false;
    prev = r.proj_residual;
    if (K == 64) {
      at64 = r.proj_residual;
      tr64 = r.trace_residual;
    }
  }
  const bool pass = at64 <= 1e-3 && tr64 <= 1e-6 && monotone;
  report(7, pass,
         "Rieffel projection at cutoff 64: ||p^2-p|| = " + fmt(at64) + ", |tau(p)-theta12| = " +
             fmt(tr64) + ", residuals monotone over {16,32,64,128}: " +
             (monotone ? "yes" : "no"));
}

void criterion8_trace_identity() {
  RieffelData d;
  d.fourier_cutoff = 64;
  const FlipVariantReport fv = flip_invariant_variant(d);
  const double res = corollary_trace_identity(d.theta12, fv.trace);
  report(8, res <= 2e-3, "trace identity |theta12 - 2 tau(S_g)| = " + fmt(res) + " at cutoff 64");
}

void criterion9_diagram() {
  const auto t0 = Clock::now();
  AlgebraElement a(skew2(fixtures::golden_conjugate), Convention::Presentation);
  // 2-d coefficients truncated to lattice radius 3
  a.accumulate({1, 0}, cplx(0.7, 0.1));
  a.accumulate({0, -1}, cplx(-0.3, 0.2));
  a.accumulate({2, 1}, cplx(0.1, 0.4));
  a.accumulate({-3, 3}, cplx(0.2, -0.1));
  const std::vector<NatsumeWordStep> gens = {
      {NatsumeGen::A, a}, {NatsumeGen::G, {}}, {NatsumeGen::S, {}}};
  double interior = 0.0, drift = 0.0;
  std::vector<std::vector<NatsumeWordStep>> words;
  for (const auto& g1 : gens) {
    words.push_back({g1});
    for (const auto& g2 : gens) words.push_back({g1, g2});
  }
  for (const auto& w : words) {
    double first = -1.0;
    for (int N : {8, 16, 32}) {
      const TruncatedRep rep(N, skew2(fixtures::golden_conjugate));
      const DiagramReport r = check_diagram(rep, w);
      interior = std::max(interior, r.interior);
      if (first < 0.0)
        first = r.total;
      else
        drift = std::max(drift, std::abs(r.total - first));
    }
  }
  const double dt = seconds_since(t0);
  const bool pass = interior <= 1e-12 && drift <= 1e-12 && dt < 10.0;
  report(9, pass,
         "diagram check: interior residual " + fmt(interior) +
             ", defects confined to kernel/boundary layers with norm drift " + fmt(drift) +
             " over N in {8,16,32}, " + fmt(dt) + " s");
}

// trace of the product through the matrix picture: the corner traces of
// p(x) average back to tau(x).
cplx p_trace(const OrbifoldElement& x, const OrbifoldElement& y) {
  const AlgMat2 m = p_map(x * y);
  return 0.5 * (m[0][0].trace() + m[1][1].trace());
}

void criterion10_symbolic_suites() {
  Rng rng(1010);
  const SkewMatrix theta = fixtures::theta3d();
  const Convention conv = Convention::Presentation;
  const FiniteCyclicAction act = flip_action(theta);
  auto rand_el = [&]() {
    AlgebraElement a(theta, conv);
    for (int i = 0; i < 3; ++i) {
      IVec l(3);
      for (auto& v : l) v = rint(rng, -3, 3);
      a.accumulate(l, cplx(runif(rng, -1, 1), runif(rng, -1, 1)));
    }
    return a;
  };
  auto rand_orb = [&]() {
    OrbifoldElement x(act, conv);
    x.set_part(0, rand_el());
    x.set_part(1, rand_el());
    return x;
  };
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    // cocycle identity
    IVec x(3), y(3), z(3);
    for (auto& v : x) v = rint(rng, -4, 4);
    for (auto& v : y) v = rint(rng, -4, 4);
    for (auto& v : z) v = rint(rng, -4, 4);
    worst = std::max(worst, std::abs(cocycle_value(theta, conv, x, y) *
                                         cocycle_value(theta, conv, add(x, y), z) -
                                     cocycle_value(theta, conv, x, add(y, z)) *
                                         cocycle_value(theta, conv, y, z)));
    // automorphism and trace
    const AlgebraElement u = rand_el(), v = rand_el();
    worst = std::max(worst,
                     distance_sup(apply_action(act, u * v),
                                  apply_action(act, u) * apply_action(act, v)));
    worst = std::max(worst, std::abs((u * v).trace() - (v * u).trace()));
    // p map multiplicativity
    const OrbifoldElement ox = rand_orb(), oy = rand_orb();
    worst = std::max(worst, mat2_dist(p_map(ox * oy), mat2_mul(p_map(ox), p_map(oy))));
    worst = std::max(worst, std::abs((ox * oy).trace() - p_trace(ox, oy)));
  }
  report(10, worst <= 1e-12,
         "symbolic suites (cocycle/automorphism/trace/p-map), 100 samples: residual " +
             fmt(worst));
}

}  // namespace

int main() {
  criterion1_hexic_order();
  criterion2_equivariance_families();
  criterion3_inner_compat();
  criterion4_imprimitivity();
  criterion5_flip_extension();
  criterion6_projections();
  criterion7_rieffel();
  criterion8_trace_identity();
  criterion9_diagram();
  criterion10_symbolic_suites();
  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all 10 criteria passed\n");
  return 0;
}
