// Microbenchmarks for the hot paths: twisted convolution, module actions,
// inner-product coefficients, and the diagram check.
#include <benchmark/benchmark.h>

#include <nct/nct.hpp>

using namespace nct;

namespace {

AlgebraElement dense_element(Rng& rng, const SkewMatrix& theta, int terms) {
  AlgebraElement a(theta, Convention::Presentation);
  for (int i = 0; i < terms; ++i) {
    IVec l(static_cast<size_t>(theta.n()));
    for (auto& v : l) v = rint(rng, -6, 6);
    a.accumulate(l, cplx(runif(rng, -1, 1), runif(rng, -1, 1)));
  }
  return a;
}

}  // namespace

static void BM_TwistedConvolution(benchmark::State& state) {
  Rng rng(1);
  const SkewMatrix theta = fixtures::theta3d();
  const AlgebraElement a = dense_element(rng, theta, static_cast<int>(state.range(0)));
  const AlgebraElement b = dense_element(rng, theta, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_TwistedConvolution)->Arg(32)->Arg(100);

static void BM_RightAction(benchmark::State& state) {
  Rng rng(2);
  const ModuleContext ctx(build_embedding(skew2(0.37), 1, 0));
  const FunctionState f{random_atom(rng, 1)};
  const IVec l{2, -1};
  for (auto _ : state) benchmark::DoNotOptimize(right_act(ctx, f, l));
}
BENCHMARK(BM_RightAction);

static void BM_InnerACoefficient(benchmark::State& state) {
  Rng rng(3);
  const ModuleContext ctx(build_embedding(skew2(0.37), 1, 0));
  const FunctionState f{random_atom(rng, 1)}, g{random_atom(rng, 1)};
  const IVec l{1, 1};
  for (auto _ : state) benchmark::DoNotOptimize(inner_A_coeff(ctx, f, g, l));
}
BENCHMARK(BM_InnerACoefficient);

static void BM_InnerAWindowed(benchmark::State& state) {
  Rng rng(4);
  const ModuleContext ctx(build_embedding(skew2(0.37), 1, 0));
  const FunctionState f{random_atom(rng, 1)}, g{random_atom(rng, 1)};
  for (auto _ : state) benchmark::DoNotOptimize(inner_A(ctx, f, g));
}
BENCHMARK(BM_InnerAWindowed);

static void BM_DiagramCheck(benchmark::State& state) {
  const TruncatedRep rep(static_cast<int>(state.range(0)), skew2(fixtures::golden_conjugate));
  AlgebraElement a(rep.theta2, rep.conv);
  a.accumulate({1, 0}, cplx(0.7, 0.1));
  a.accumulate({0, -1}, cplx(-0.3, 0.2));
  const std::vector<NatsumeWordStep> word = {{NatsumeGen::A, a}, {NatsumeGen::S, {}}};
  for (auto _ : state) benchmark::DoNotOptimize(check_diagram(rep, word));
}
BENCHMARK(BM_DiagramCheck)->Arg(8)->Arg(16);

static void BM_RieffelProjection(benchmark::State& state) {
  RieffelData d;
  d.fourier_cutoff = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rieffel_projection(d));
}
BENCHMARK(BM_RieffelProjection)->Arg(16)->Arg(32);
