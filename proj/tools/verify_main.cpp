// nct-verify: runs named verification suites and emits structured reports.
//
// Usage: nct-verify <suite> [--theta <path|fixture>] [--seed <int>]
//                   [--tol <name=value>]... [--out <path>] [--csv]
//
// Exit codes: 0 all checks passed, 1 at least one check failed,
//             2 configuration or fixture error.
#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include <nct/nct.hpp>

using namespace nct;

namespace {

struct SuiteConfig {
  SkewMatrix theta;
  unsigned long long seed = 1;
  std::map<std::string, double> tol;  ///< tolerance and truncation overrides

  double get(const std::string& name, double fallback) const {
    auto it = tol.find(name);
    return it == tol.end() ? fallback : it->second;
  }
  int geti(const std::string& name, int fallback) const {
    return static_cast<int>(get(name, fallback));
  }
  Rng rng(unsigned long long salt) const { return Rng(seed * 0x9e3779b97f4a7c15ULL + salt); }

  /// theta12 parameter used by the 2-d suites.
  double theta12() const {
    const double t = theta(0, 1);
    return (t > 0.05 && t < 0.95) ? t : fixtures::golden_conjugate;
  }
  /// 2-d restriction of theta.
  SkewMatrix theta2() const { return skew2(theta12()); }
  bool has_q1() const { return theta.n() == 3; }
};

using Records = std::vector<CheckRecord>;

void add(Records& r, const std::string& id, double residual, double tolerance) {
  r.push_back({id, residual, tolerance, residual <= tolerance});
}

IVec rand_l(Rng& rng, int n, int radius = 3) {
  IVec l(static_cast<size_t>(n));
  for (auto& v : l) v = rint(rng, -radius, radius);
  return l;
}

AlgebraElement rand_el(Rng& rng, const SkewMatrix& theta, Convention conv, int terms = 3) {
  AlgebraElement a(theta, conv);
  for (int i = 0; i < terms; ++i)
    a.accumulate(rand_l(rng, theta.n()), cplx(runif(rng, -1, 1), runif(rng, -1, 1)));
  return a;
}

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

Records suite_cocycle(const SuiteConfig& cfg) {
  Records r;
  Rng rng = cfg.rng(11);
  const double tol = cfg.get("cocycle", 1e-12);
  for (Convention conv : {Convention::Presentation, Convention::PaperFull}) {
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
      const IVec x = rand_l(rng, cfg.theta.n()), y = rand_l(rng, cfg.theta.n()),
                 z = rand_l(rng, cfg.theta.n());
      worst = std::max(worst, std::abs(cocycle_value(cfg.theta, conv, x, y) *
                                           cocycle_value(cfg.theta, conv, add(x, y), z) -
                                       cocycle_value(cfg.theta, conv, x, add(y, z)) *
                                           cocycle_value(cfg.theta, conv, y, z)));
    }
    add(r, conv == Convention::Presentation ? "cocycle.identity.presentation"
                                            : "cocycle.identity.paperfull",
        worst, tol);
  }
  return r;
}

Records suite_relations(const SuiteConfig& cfg) {
  Records r;
  Rng rng = cfg.rng(12);
  const Convention conv = Convention::Presentation;
  const double tol = cfg.get("relations", 1e-12);
  const int n = cfg.theta.n();

  double gen = 0.0;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      IVec ej(static_cast<size_t>(n), 0), ek(static_cast<size_t>(n), 0);
      ej[static_cast<size_t>(j)] = 1;
      ek[static_cast<size_t>(k)] = 1;
      const AlgebraElement uj = AlgebraElement::unit(cfg.theta, conv, ej);
      const AlgebraElement uk = AlgebraElement::unit(cfg.theta, conv, ek);
      gen = std::max(gen, distance_sup(uk * uj, e(cfg.theta(j, k)) * (uj * uk)));
    }
  add(r, "relations.generator", gen, tol);

  double nrm = 0.0;
  for (int t = 0; t < 50; ++t) {
    const IVec m = rand_l(rng, n);
    AlgebraElement prod = AlgebraElement::one(cfg.theta, conv);
    for (int i = 0; i < n; ++i) {
      IVec ei(static_cast<size_t>(n), 0);
      ei[static_cast<size_t>(i)] = m[static_cast<size_t>(i)];
      prod = prod * AlgebraElement::unit(cfg.theta, conv, ei);
    }
    AlgebraElement expected(cfg.theta, conv);
    expected.set(m, normal_ordering_phase(cfg.theta, conv, m));
    nrm = std::max(nrm, distance_sup(prod, expected));
  }
  add(r, "relations.normal_order", nrm, tol);

  double star = 0.0, trace = 0.0;
  for (int t = 0; t < 50; ++t) {
    const AlgebraElement a = rand_el(rng, cfg.theta, conv);
    const AlgebraElement b = rand_el(rng, cfg.theta, conv);
    star = std::max(star, distance_sup((a * b).star(), b.star() * a.star()));
    trace = std::max(trace, std::abs((a * b).trace() - (b * a).trace()));
  }
  add(r, "relations.star_antihomomorphism", star, tol);
  add(r, "relations.trace_tracial", trace, tol);
  return r;
}

Records suite_automorphism(const SuiteConfig& cfg) {
  Records r;
  Rng rng = cfg.rng(13);
  const Convention conv = Convention::Presentation;
  const double tol = cfg.get("automorphism", 1e-12);

  std::vector<std::pair<std::string, FiniteCyclicAction>> actions;
  actions.emplace_back("flip", flip_action(cfg.theta));
  if (cfg.theta.n() == 2) {
    actions.emplace_back("W3", FiniteCyclicAction(fixtures::W3(), cfg.theta));
    actions.emplace_back("W4", FiniteCyclicAction(fixtures::W4(), cfg.theta));
    actions.emplace_back("W6", FiniteCyclicAction(fixtures::W6(), cfg.theta));
  }
  for (const auto& [name, act] : actions) {
    double worst = 0.0;
    for (int t = 0; t < 25; ++t) {
      const AlgebraElement a = rand_el(rng, cfg.theta, conv);
      const AlgebraElement b = rand_el(rng, cfg.theta, conv);
      worst = std::max(worst, distance_sup(apply_action(act, a * b),
                                           apply_action(act, a) * apply_action(act, b)));
      worst = std::max(worst,
                       distance_sup(apply_action(act, a.star()), apply_action(act, a).star()));
      worst = std::max(worst, std::abs(apply_action(act, a).trace() - a.trace()));
      AlgebraElement it = a;
      for (int k = 0; k < act.order; ++k) it = apply_action(act, it);
      worst = std::max(worst, distance_sup(it, a));
    }
    add(r, "automorphism." + name, worst, tol);
  }
  return r;
}

Records suite_module(const SuiteConfig& cfg) {
  Records r;
  Rng rng = cfg.rng(14);
  const double tol = cfg.get("module", 1e-10);
  const ModuleContext ctx(build_embedding(cfg.theta2(), 1, 0));

  double coc = 0.0, inner = 0.0, herm = 0.0, compat = 0.0;
  for (int t = 0; t < 10; ++t) {
    const FunctionState f{random_atom(rng, 1)}, g{random_atom(rng, 1)};
    const IVec k = rand_l(rng, 2, 2), l = rand_l(rng, 2, 2);
    const FunctionState a = right_act(ctx, right_act(ctx, f, k), l);
    const FunctionState b =
        right_act(ctx, f, add(k, l)).scaled(cocycle_value(ctx.theta_A, ctx.conv, k, l));
    coc = std::max(coc, atomwise_distance(a, b));
    inner = std::max(inner, std::abs(inner_A_coeff(ctx, f, g, l) -
                                     l2_inner(right_act(ctx, g, neg(l)), f)));
    herm = std::max(herm, std::abs(inner_A_coeff(ctx, f, g, l) -
                                   std::conj(inner_A_coeff(ctx, g, f, neg(l)))));
  }
  {
    const FunctionState f{random_atom(rng, 1)}, g{random_atom(rng, 1)};
    AlgebraElement a(ctx.theta_A, ctx.conv);
    for (int i = 0; i < 3; ++i)
      a.accumulate(rand_l(rng, 2, 1), cplx(runif(rng, -1, 1), runif(rng, -1, 1)));
    compat = distance_sup(inner_A(ctx, f, act_algebra(ctx, g, a)), inner_A(ctx, f, g) * a);
  }
  add(r, "module.right_action_cocycle", coc, tol);
  add(r, "module.inner_identity", inner, tol);
  add(r, "module.inner_hermitian", herm, tol);
  add(r, "module.compatibility", compat, tol);
  return r;
}

Records suite_imprimitivity(const SuiteConfig& cfg) {
  Records r;
  Rng rng = cfg.rng(15);
  const double tol = cfg.get("imprimitivity", 1e-10);
  {
    const ModuleContext ctx(build_embedding(cfg.theta2(), 1, 0));
    double worst = 0.0;
    for (int t = 0; t < 5; ++t) {
      const FunctionState f{random_atom(rng, 1)}, g{random_atom(rng, 1)}, h{random_atom(rng, 1)};
      worst = std::max(worst,
                       check_imprimitivity(ctx, f, g, h, cfg.geti("lwindow", 10)).residual);
    }
    add(r, "imprimitivity.q0", worst, tol);
  }
  if (cfg.has_q1()) {
    const ModuleContext ctx(build_embedding(cfg.theta, 1, 1));
    double worst = 0.0;
    for (int t = 0; t < 5; ++t) {
      const FunctionState f{random_atom(rng, 1, 1, 0)};
      FunctionState g;
      g.atoms.push_back(random_atom(rng, 1, 1, 0));
      g.atoms.push_back(random_atom(rng, 1, 1, 1));
      const FunctionState h{random_atom(rng, 1, 1, 0)};
      worst = std::max(worst,
                       check_imprimitivity(ctx, f, g, h, cfg.geti("lwindow_q1", 7)).residual);
    }
    add(r, "imprimitivity.q1", worst, tol);
  }
  return r;
}

Records suite_equivariance(const SuiteConfig& cfg) {
  Records r;
  Rng rng = cfg.rng(16);
  const double tol = cfg.get("equivariance", 1e-10);
  add(r, "equivariance.families_m1", six_families_residual(1, rng, 5), tol);
  add(r, "equivariance.families_m2", six_families_residual(2, rng, 5), tol);

  double gen = 0.0, comp = 0.0;
  for (int rep = 0; rep < 3; ++rep) {
    const ModuleContext ctx(build_embedding(random_skew(2, rng), 1, 0));
    const MetaplecticOp op = op_fourier(1);
    const MetaplecticOp inv = op_inverse(op, rng);
    const Mat Wt = w_theta_of(op, ctx.emb);
    for (int i = 0; i < 2; ++i) {
      const Vec l = Vec::Unit(2, i);
      const FunctionState f{random_atom(rng, 1)}, g{random_atom(rng, 1)};
      gen = std::max(gen, check_main_identity(ctx, op, Wt, f, l));
      gen = std::max(gen, check_change_of_frame(ctx, op, Wt, f, l));
      IVec li(2, 0);
      li[static_cast<size_t>(i)] = 1;
      comp = std::max(comp, check_inner_compat(ctx, op, inv, Wt, f, g, li));
    }
  }
  add(r, "equivariance.general_theta", gen, tol);
  add(r, "equivariance.inner_compat", comp, tol);
  return r;
}

Records suite_hexic(const SuiteConfig& cfg) {
  Records r;
  Rng rng = cfg.rng(17);
  const double tol = cfg.get("hexic", 1e-9);
  const OrderResult base = operator_order(hexic(), 6, rng, 10);
  add(r, "hexic.lambda_minus_one",
      std::abs(base.lambda - cplx(-1.0)) + base.variance + base.shape_residual, tol);
  const OrderResult corr = operator_order(hexic_corrected(), 6, rng, 10);
  add(r, "hexic.corrected_order_six",
      std::abs(corr.lambda - cplx(1.0)) + corr.variance + corr.shape_residual, tol);

  const double th = cfg.theta12();
  const ModuleContext ctx = hexic_module(th);
  const MetaplecticOp op = hexic_general(th);
  const Mat Wt = w_theta_of(op, ctx.emb);
  double eq = (Wt - fixtures::W6()).cwiseAbs().maxCoeff();
  for (const IVec& l : {IVec{1, 0}, IVec{0, 1}, IVec{2, -1}}) {
    const FunctionState f{random_atom(rng, 1)};
    eq = std::max(eq, check_main_identity(ctx, op, Wt, f, to_vec(l)));
  }
  add(r, "hexic.general_equivariance", eq, cfg.get("hexic_equivariance", 1e-8));
  return r;
}

Records suite_flip(const SuiteConfig& cfg) {
  Records r;
  Rng rng = cfg.rng(18);
  const double tol = cfg.get("flip", 1e-12);
  {
    const ModuleContext ctx(build_embedding(cfg.theta2(), 1, 0));
    const FunctionState f{random_atom(rng, 1)};
    add(r, "flip.extension_2d", check_flip_extension(ctx, f, 3), tol);
  }
  if (cfg.has_q1()) {
    const ModuleContext ctx(build_embedding(cfg.theta, 1, 1));
    FunctionState f;
    f.atoms.push_back(random_atom(rng, 1, 1, 1));
    add(r, "flip.extension_3d", check_flip_extension(ctx, f, 2), tol);
  }
  return r;
}

Records suite_projections(const SuiteConfig& cfg) {
  Records r;
  const double tol = cfg.get("projections", 1e-12);
  const SkewMatrix th3 = cfg.has_q1() ? cfg.theta : fixtures::theta3d(cfg.theta12());
  for (int i = 1; i <= 8; ++i) {
    const ProjectionReport rep = projection_report(build_projection(i, th3));
    add(r, "projections.P" + std::to_string(i),
        std::max({rep.idempotent, rep.selfadjoint, rep.trace_residual}), tol);
  }
  return r;
}

Records suite_rieffel(const SuiteConfig& cfg) {
  Records r;
  RieffelData d;
  d.theta12 = cfg.theta12();
  double prev = 1e9;
  bool monotone = true;
  double res64 = 0.0, tr64 = 0.0;
  const int cutoff = cfg.geti("fourier_cutoff", 64);
  for (int K : {16, 32, 64}) {
    d.fourier_cutoff = K;
    const RieffelReport rep = rieffel_projection(d);
    if (rep.proj_residual >= prev) monotone = false;
    prev = rep.proj_residual;
  }
  d.fourier_cutoff = cutoff;
  {
    const RieffelReport rep = rieffel_projection(d);
    res64 = rep.proj_residual;
    tr64 = rep.trace_residual;
  }
  add(r, "rieffel.projection_residual", res64, cfg.get("rieffel", 1e-3));
  add(r, "rieffel.trace_residual", tr64, cfg.get("rieffel_trace", 1e-6));
  add(r, "rieffel.monotone", monotone ? 0.0 : 1.0, 0.5);
  return r;
}

Records suite_trace_identity(const SuiteConfig& cfg) {
  Records r;
  RieffelData d;
  d.theta12 = cfg.theta12();
  d.fourier_cutoff = cfg.geti("fourier_cutoff", 64);
  const FlipVariantReport fv = flip_invariant_variant(d);
  add(r, "trace_identity.flip_invariance", fv.flip_residual, 1e-12);
  add(r, "trace_identity.corollary", corollary_trace_identity(d.theta12, fv.trace),
      cfg.get("trace_identity", 2e-3));
  return r;
}

Records suite_toeplitz(const SuiteConfig& cfg) {
  Records r;
  const double tol = cfg.get("diagram", 1e-12);
  const int N = cfg.geti("N", 16);
  const SkewMatrix th2 = cfg.theta2();
  AlgebraElement a(th2, Convention::Presentation);
  a.accumulate({1, 0}, cplx(0.7, 0.1));
  a.accumulate({0, -1}, cplx(-0.3, 0.2));
  a.accumulate({2, 1}, cplx(0.1, 0.4));
  const std::vector<NatsumeWordStep> gens = {
      {NatsumeGen::A, a}, {NatsumeGen::G, {}}, {NatsumeGen::S, {}}};

  const TruncatedRep rep(N, th2);
  double interior = 0.0;
  for (const auto& g1 : gens) {
    interior = std::max(interior, check_diagram(rep, {g1}).interior);
    for (const auto& g2 : gens)
      interior = std::max(interior, check_diagram(rep, {g1, g2}).interior);
  }
  add(r, "diagram.interior", interior, tol);
  add(r, "diagram.pi_kernel", pi_kernel_residual(rep), tol);

  double drift = 0.0;
  const TruncatedRep rep2(N / 2, th2);
  for (const auto& g1 : gens)
    for (const auto& g2 : gens)
      drift = std::max(drift, std::abs(check_diagram(rep, {g1, g2}).total -
                                       check_diagram(rep2, {g1, g2}).total));
  add(r, "diagram.defect_constant_in_N", drift, tol);
  return r;
}

// ---------------------------------------------------------------------------

using SuiteFn = Records (*)(const SuiteConfig&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"cocycle", suite_cocycle},
      {"relations", suite_relations},
      {"automorphism", suite_automorphism},
      {"module", suite_module},
      {"imprimitivity", suite_imprimitivity},
      {"equivariance", suite_equivariance},
      {"hexic", suite_hexic},
      {"flip", suite_flip},
      {"projections", suite_projections},
      {"rieffel", suite_rieffel},
      {"trace-identity", suite_trace_identity},
      {"toeplitz-diagram", suite_toeplitz},
  };
  return table;
}

SkewMatrix resolve_theta(const std::string& arg) {
  if (arg.empty() || arg == "theta3d") return fixtures::theta3d();
  if (arg == "theta2d") return skew2(fixtures::golden_conjugate);
  return load_theta(arg);  // throws on missing/invalid files
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"noncommutative-torus verification suites"};
  std::string suite_name;
  std::string theta_arg;
  unsigned long long seed = 1;
  std::vector<std::string> tol_args;
  std::string out_path;
  bool csv = false;

  std::string suite_help = "suite to run: all";
  for (const auto& [name, fn] : suite_table()) suite_help += ", " + name;
  app.add_option("suite", suite_name, suite_help)->required();
  app.add_option("--theta", theta_arg, "theta fixture: JSON path, 'theta3d', or 'theta2d'");
  app.add_option("--seed", seed, "RNG seed for randomized checks");
  app.add_option("--tol", tol_args, "tolerance/truncation override name=value");
  app.add_option("--out", out_path, "write the JSON report to this path");
  app.add_flag("--csv", csv, "also emit CSV records");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int rc = app.exit(err);
    return rc == 0 ? 0 : 2;  // help exits 0; bad arguments are config errors
  }

  SuiteConfig cfg;
  cfg.seed = seed;
  try {
    cfg.theta = resolve_theta(theta_arg);
    for (const std::string& t : tol_args) {
      const auto eq = t.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("--tol expects name=value: " + t);
      cfg.tol[t.substr(0, eq)] = std::stod(t.substr(eq + 1));
    }
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }

  std::vector<std::pair<std::string, SuiteFn>> to_run;
  if (suite_name == "all") {
    to_run = suite_table();
  } else {
    for (const auto& entry : suite_table())
      if (entry.first == suite_name) to_run.push_back(entry);
    if (to_run.empty()) {
      std::cerr << "error: unknown suite '" << suite_name << "'\n";
      return 2;
    }
  }

  // Run suites in parallel; assembly is deterministic (fixed suite order,
  // checks sorted by id within each suite).
  std::vector<std::future<Records>> futures;
  futures.reserve(to_run.size());
  for (const auto& [name, fn] : to_run)
    futures.push_back(std::async(std::launch::async, fn, std::cref(cfg)));

  Records all;
  std::string run_error;
  for (size_t i = 0; i < to_run.size(); ++i) {
    try {
      Records rs = futures[i].get();
      std::sort(rs.begin(), rs.end(),
                [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
      all.insert(all.end(), rs.begin(), rs.end());
    } catch (const std::exception& err) {
      run_error = to_run[i].first + ": " + err.what();
      break;
    }
  }
  if (!run_error.empty()) {
    std::cerr << "error: suite " << run_error << "\n";
    return 2;
  }

  int failed = 0;
  std::printf("%-42s %14s %12s  %s\n", "check", "residual", "tolerance", "status");
  for (const auto& rec : all) {
    if (!rec.pass) ++failed;
    std::printf("%-42s %14.6e %12.3e  %s\n", rec.id.c_str(), rec.residual, rec.tolerance,
                rec.pass ? "pass" : "FAIL");
  }
  std::printf("%zu checks, %d failed\n", all.size(), failed);

  json report;
  report["suite"] = suite_name;
  report["seed"] = seed;
  report["checks"] = json::array();
  for (const auto& rec : all) report["checks"].push_back(record_to_json(rec));
  report["summary"] = {{"total", all.size()}, {"passed", all.size() - failed},
                       {"failed", failed}};
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return 2;
    }
    out << report.dump(2) << "\n";
  }
  if (csv) {
    std::ostream* os = &std::cout;
    std::ofstream csv_file;
    if (!out_path.empty()) {
      csv_file.open(out_path + ".csv");
      os = &csv_file;
    }
    *os << "id,residual,tolerance,pass\n";
    for (const auto& rec : all) {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.6e,%.3e", rec.residual, rec.tolerance);
      *os << rec.id << "," << buf << "," << (rec.pass ? 1 : 0) << "\n";
    }
  }
  return failed == 0 ? 0 : 1;
}
