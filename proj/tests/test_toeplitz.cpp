// Toeplitz layer: truncated Natsume generators, the symbol map, the kernel
// projection, and the commuting-diagram check.
#include <doctest.h>

#include <nct/fixtures.hpp>
#include <nct/toeplitz.hpp>

using namespace nct;

namespace {

AlgebraElement sample_a(const SkewMatrix& theta2, Convention conv) {
  AlgebraElement a(theta2, conv);
  a.accumulate({1, 0}, cplx(0.7, 0.1));
  a.accumulate({0, -1}, cplx(-0.3, 0.2));
  a.accumulate({2, 1}, cplx(0.1, 0.4));
  return a;
}

}  // namespace

TEST_CASE("iota2(g) is a self-adjoint unitary") {
  const TruncatedRep rep(8, skew2(fixtures::golden_conjugate));
  const AlgMat g = rep.iota2_g();
  const AlgMat id = AlgMat::identity(rep.dim(), rep.theta2, rep.conv);
  CHECK((g * g - id).norm_sup() <= 1e-14);
  CHECK((g.star() - g).norm_sup() <= 1e-14);
}

TEST_CASE("iota2(s) satisfies the truncated shift relations") {
  const TruncatedRep rep(8, skew2(fixtures::golden_conjugate));
  const AlgMat s = rep.iota2_s();
  const AlgMat q = kernel_projection(rep);  // I - s* s
  // q = e_{(P1,0)} + e_{(P2,N-1)} (the latter is the truncation artifact)
  for (int i = 0; i < rep.dim(); ++i)
    for (int j = 0; j < rep.dim(); ++j) {
      const bool diag_hit = (i == j) && (i == 0 || i == 2 * rep.N - 1);
      const double expect = diag_hit ? 1.0 : 0.0;
      CHECK(std::abs(q.at(i, j).trace() - cplx(expect)) <= 1e-14);
      if (i != j) CHECK(q.at(i, j).norm_sup() <= 1e-14);
    }
}

TEST_CASE("symbolically, pi(1 - s* s) = 0 in the crossed product") {
  const TruncatedRep rep(8, skew2(fixtures::golden_conjugate));
  CHECK(pi_kernel_residual(rep) <= 1e-14);
}

TEST_CASE("iota2(a) commutes with the symbol relations: g a g = beta(a)") {
  const TruncatedRep rep(6, skew2(0.37));
  const AlgebraElement a = sample_a(rep.theta2, rep.conv);
  const AlgMat lhs = rep.iota2_g() * rep.iota2_a(a) * rep.iota2_g();
  const AlgMat rhs = rep.iota2_a(flip_of(a));
  CHECK((lhs - rhs).norm_sup() <= 1e-12);
}

TEST_CASE("diagram check: interior exact, defects at the kernel and boundary only") {
  for (int N : {8, 16, 32}) {
    const TruncatedRep rep(N, skew2(fixtures::golden_conjugate));
    const AlgebraElement a = sample_a(rep.theta2, rep.conv);
    const std::vector<NatsumeWordStep> gens = {
        {NatsumeGen::A, a}, {NatsumeGen::G, {}}, {NatsumeGen::S, {}}};
    for (const auto& g1 : gens) {
      for (const auto& g2 : gens) {
        const DiagramReport r = check_diagram(rep, {g1, g2});
        CAPTURE(N);
        CHECK(r.interior <= 1e-12);
      }
      CHECK(check_diagram(rep, {g1}).interior <= 1e-12);
    }
  }
}

TEST_CASE("diagram defect norms are constant in N") {
  const AlgebraElement a = sample_a(skew2(fixtures::golden_conjugate), Convention::Presentation);
  const std::vector<std::vector<NatsumeWordStep>> words = {
      {{NatsumeGen::S, {}}, {NatsumeGen::S, {}}},
      {{NatsumeGen::S, {}}, {NatsumeGen::G, {}}},
      {{NatsumeGen::A, a}, {NatsumeGen::S, {}}}};
  for (const auto& w : words) {
    double first_total = -1.0;
    for (int N : {8, 16, 32}) {
      const TruncatedRep rep(N, skew2(fixtures::golden_conjugate));
      const DiagramReport r = check_diagram(rep, w);
      if (first_total < 0.0)
        first_total = r.total;
      else
        CHECK(std::abs(r.total - first_total) <= 1e-12);
    }
  }
}

TEST_CASE("scalar case theta12 = 0 behaves identically") {
  const TruncatedRep rep(8, skew2(0.0));
  const AlgebraElement a = sample_a(rep.theta2, rep.conv);
  const DiagramReport r = check_diagram(rep, {{NatsumeGen::A, a}, {NatsumeGen::S, {}}});
  CHECK(r.interior <= 1e-12);
  CHECK(pi_kernel_residual(rep) <= 1e-14);
}

TEST_CASE("AlgMat star and multiplication are compatible") {
  const TruncatedRep rep(5, skew2(0.61));
  const AlgebraElement a = sample_a(rep.theta2, rep.conv);
  const AlgMat x = rep.iota2_a(a) * rep.iota2_s();
  const AlgMat y = rep.iota2_g() * rep.iota2_a(flip_of(a));
  CHECK(((x * y).star() - y.star() * x.star()).norm_sup() <= 1e-12);
}
