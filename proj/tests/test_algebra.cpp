// Symbolic layer: cocycles, twisted convolution, involution, trace, and the
// finite cyclic lattice automorphisms.
#include <doctest.h>

#include <nct/cyclic_action.hpp>
#include <nct/fixtures.hpp>

using namespace nct;

namespace {

IVec random_lattice(Rng& rng, int n, int r = 4) {
  IVec l(static_cast<size_t>(n));
  for (auto& v : l) v = rint(rng, -r, r);
  return l;
}

AlgebraElement random_element(Rng& rng, const SkewMatrix& theta, Convention conv,
                              int terms = 4, int r = 3) {
  AlgebraElement a(theta, conv);
  for (int i = 0; i < terms; ++i)
    a.accumulate(random_lattice(rng, theta.n(), r), cplx(runif(rng, -1, 1), runif(rng, -1, 1)));
  return a;
}

}  // namespace

TEST_CASE("cocycle identity over 100 random triples, both conventions") {
  Rng rng(2024);
  const SkewMatrix theta = fixtures::theta3d();
  for (Convention conv : {Convention::Presentation, Convention::PaperFull}) {
    for (int t = 0; t < 100; ++t) {
      const IVec x = random_lattice(rng, 3), y = random_lattice(rng, 3), z = random_lattice(rng, 3);
      const cplx lhs = cocycle_value(theta, conv, x, y) * cocycle_value(theta, conv, add(x, y), z);
      const cplx rhs = cocycle_value(theta, conv, x, add(y, z)) * cocycle_value(theta, conv, y, z);
      CHECK(std::abs(lhs - rhs) <= 1e-12);
    }
  }
}

TEST_CASE("generator relation U_k U_j = e(theta_jk) U_j U_k") {
  const SkewMatrix theta = fixtures::theta3d(0.37);
  const Convention conv = Convention::Presentation;
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) {
      IVec ej(3, 0), ek(3, 0);
      ej[static_cast<size_t>(j)] = 1;
      ek[static_cast<size_t>(k)] = 1;
      const AlgebraElement uj = AlgebraElement::unit(theta, conv, ej);
      const AlgebraElement uk = AlgebraElement::unit(theta, conv, ek);
      CHECK(distance_sup(uk * uj, e(theta(j, k)) * (uj * uk)) <= 1e-12);
    }
}

TEST_CASE("normal ordering: U_1^{m1}...U_n^{mn} = nu(m) delta_m") {
  Rng rng(5);
  const SkewMatrix theta = fixtures::theta3d(0.29);
  const Convention conv = Convention::Presentation;
  for (int t = 0; t < 20; ++t) {
    const IVec m = random_lattice(rng, 3, 3);
    // ordered product of generator powers
    AlgebraElement prod = AlgebraElement::one(theta, conv);
    for (int i = 0; i < 3; ++i) {
      IVec ei(3, 0);
      ei[static_cast<size_t>(i)] = m[static_cast<size_t>(i)];
      prod = prod * AlgebraElement::unit(theta, conv, ei);
    }
    AlgebraElement expected(theta, conv);
    expected.set(m, normal_ordering_phase(theta, conv, m));
    CHECK(distance_sup(prod, expected) <= 1e-12);
  }
}

TEST_CASE("involution: (ab)* = b* a* and a** = a") {
  Rng rng(99);
  const SkewMatrix theta = fixtures::theta3d();
  for (Convention conv : {Convention::Presentation, Convention::PaperFull}) {
    for (int t = 0; t < 100; ++t) {
      const AlgebraElement a = random_element(rng, theta, conv);
      const AlgebraElement b = random_element(rng, theta, conv);
      CHECK(distance_sup((a * b).star(), b.star() * a.star()) <= 1e-12);
      CHECK(distance_sup(a.star().star(), a) <= 1e-12);
    }
  }
}

TEST_CASE("trace is tracial and positive on a* a") {
  Rng rng(7);
  const SkewMatrix theta = fixtures::theta3d();
  const Convention conv = Convention::Presentation;
  for (int t = 0; t < 100; ++t) {
    const AlgebraElement a = random_element(rng, theta, conv);
    const AlgebraElement b = random_element(rng, theta, conv);
    CHECK(std::abs((a * b).trace() - (b * a).trace()) <= 1e-12);
    const cplx pos = (a.star() * a).trace();
    CHECK(std::abs(pos.imag()) <= 1e-12);
    CHECK(pos.real() >= -1e-12);
  }
}

TEST_CASE("alpha_W is a *-automorphism of the same order as W") {
  Rng rng(11);
  const SkewMatrix theta2 = skew2(fixtures::golden_conjugate);
  const Convention conv = Convention::Presentation;
  for (const Mat& W : {fixtures::W2(), fixtures::W3(), fixtures::W4(), fixtures::W6()}) {
    const FiniteCyclicAction act(W, theta2);
    CHECK(act.order == matrix_order(to_imat(W)));
    for (int t = 0; t < 25; ++t) {
      const AlgebraElement a = random_element(rng, theta2, conv);
      const AlgebraElement b = random_element(rng, theta2, conv);
      // multiplicative, *-preserving, trace-invariant
      CHECK(distance_sup(apply_action(act, a * b), apply_action(act, a) * apply_action(act, b)) <=
            1e-12);
      CHECK(distance_sup(apply_action(act, a.star()), apply_action(act, a).star()) <= 1e-12);
      CHECK(std::abs(apply_action(act, a).trace() - a.trace()) <= 1e-12);
      // order
      AlgebraElement it = a;
      for (int k = 0; k < act.order; ++k) it = apply_action(act, it);
      CHECK(distance_sup(it, a) <= 1e-12);
      // inverse power
      CHECK(distance_sup(apply_action(act, apply_action(act, a), -1), a) <= 1e-12);
    }
  }
}

TEST_CASE("monomial phase calibration: eq41_phase = conj(nu)^2 for column vectors") {
  // The printed monomial phase uses the full bicharacter exponent; the
  // normal-ordering constant of the presentation convention is -1/2, so the
  // two conversion factors differ by exactly the square (the factor of 2
  // between the section-1 and section-2 conventions).
  const SkewMatrix theta = fixtures::theta3d(0.41);
  const IMat W = to_imat(fixtures::theta3d(0.0).mat() + Mat::Identity(3, 3));  // any integer matrix
  for (int i = 0; i < 3; ++i) {
    IVec col(3);
    for (int j = 0; j < 3; ++j) col[static_cast<size_t>(j)] = static_cast<int>(W(j, i));
    const cplx phi = eq41_phase(W, theta, i);
    const cplx nu = normal_ordering_phase(theta, Convention::Presentation, col);
    CHECK(std::abs(phi - std::conj(nu) * std::conj(nu)) <= 1e-12);
    // and it equals the PaperFull conversion factor directly
    const cplx nu_full = normal_ordering_phase(theta, Convention::PaperFull, col);
    CHECK(std::abs(phi - nu_full) <= 1e-12);
  }
}

TEST_CASE("100-sample randomized symbolic suite at 1e-12 (fixed seed)") {
  Rng rng(424242);
  const SkewMatrix theta = fixtures::theta3d();
  const Convention conv = Convention::Presentation;
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const AlgebraElement a = random_element(rng, theta, conv);
    const AlgebraElement b = random_element(rng, theta, conv);
    const AlgebraElement c = random_element(rng, theta, conv);
    worst = std::max(worst, distance_sup((a * b) * c, a * (b * c)));          // associativity
    worst = std::max(worst, distance_sup(a * (b + c), a * b + a * c));        // distributivity
    worst = std::max(worst, distance_sup(a * AlgebraElement::one(theta, conv), a));
    worst = std::max(worst, std::abs((a * b).trace() - (b * a).trace()));
  }
  CHECK(worst <= 1e-12);
}
