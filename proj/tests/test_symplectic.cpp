// Linear-algebra layer: skew factorization, the embedding frames, theta',
// fixture matrices, and free symplectic data.
#include <doctest.h>

#include <nct/equivariance.hpp>
#include <nct/fixtures.hpp>

using namespace nct;

TEST_CASE("skew_factor solves T^T J0 T = theta for random skew matrices") {
  Rng rng(31);
  for (int p : {1, 2, 3}) {
    for (int t = 0; t < 20; ++t) {
      const SkewMatrix th = random_skew(2 * p, rng);
      const Mat T = skew_factor(th.mat());
      CHECK((T.transpose() * J0m(p) * T - th.mat()).cwiseAbs().maxCoeff() <= 1e-10);
    }
  }
}

TEST_CASE("theta' is skew and satisfies the block formulas") {
  Rng rng(32);
  const SkewMatrix th = fixtures::theta3d(0.37);
  const SkewMatrix tp = theta_prime(th, 1);
  CHECK((tp.mat() + tp.mat().transpose()).cwiseAbs().maxCoeff() <= 1e-14);
  // top-left block is theta11^{-1}
  const Mat th11 = th.mat().topLeftCorner(2, 2);
  CHECK((tp.mat().topLeftCorner(2, 2) - th11.inverse()).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("build_embedding satisfies T^T J T = theta") {
  Rng rng(33);
  SUBCASE("q = 0, random theta") {
    for (int p : {1, 2}) {
      const SkewMatrix th = random_skew(2 * p, rng);
      const EmbeddingContext emb = build_embedding(th, p, 0);
      CHECK((emb.T.transpose() * emb.J * emb.T - th.mat()).cwiseAbs().maxCoeff() <= 1e-10);
    }
  }
  SUBCASE("q = 1, the 3-d fixture") {
    const SkewMatrix th = fixtures::theta3d();
    const EmbeddingContext emb = build_embedding(th, 1, 1);
    CHECK((emb.T.transpose() * emb.J * emb.T - th.mat()).cwiseAbs().maxCoeff() <= 1e-10);
    // det(T11)^2 det(J0) = det(theta11) = theta12^2
    CHECK(emb.abs_det_T11 == doctest::Approx(fixtures::golden_conjugate).epsilon(1e-12));
  }
}

TEST_CASE("fixture matrices are theta-symplectic with the advertised orders") {
  const SkewMatrix th = skew2(fixtures::golden_conjugate);
  const std::vector<std::pair<Mat, int>> cases = {
      {fixtures::W2(), 2}, {fixtures::W3(), 3}, {fixtures::W4(), 4},
      {fixtures::W6(), 6}, {fixtures::W6p(), 6}};
  for (const auto& [W, ord] : cases) {
    CHECK(check_theta_symplectic(W, th));
    CHECK(matrix_order(to_imat(W)) == ord);
  }
  // the flip -I is theta-symplectic in any dimension
  const SkewMatrix th3 = fixtures::theta3d();
  CHECK(check_theta_symplectic(-Mat::Identity(3, 3), th3));
}

TEST_CASE("conjugate_to_standard produces a J-symplectic matrix") {
  Rng rng(34);
  const SkewMatrix th = skew2(-fixtures::golden_conjugate);
  Mat T11 = Mat::Zero(2, 2);
  T11(0, 0) = -fixtures::golden_conjugate;
  T11(1, 1) = 1.0;
  const EmbeddingContext emb = build_embedding(th, 1, 0, &T11);
  const Mat W = conjugate_to_standard(fixtures::W6(), emb);
  CHECK((W.transpose() * J0m(1) * W - J0m(1)).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("generating function of the hexic free matrix is x x' - x'^2/2") {
  const FreeSymplectic fs = free1(1.0, -1.0, 1.0, 0.0, 1);
  CHECK(fs.symplectic_residual() <= 1e-14);
  Rng rng(35);
  for (int t = 0; t < 20; ++t) {
    Vec x(1), xp(1);
    x[0] = runif(rng, -2, 2);
    xp[0] = runif(rng, -2, 2);
    CHECK(generating_function(fs, x, xp) ==
          doctest::Approx(x[0] * xp[0] - 0.5 * xp[0] * xp[0]).epsilon(1e-12));
  }
}

TEST_CASE("random free symplectic matrices are symplectic") {
  Rng rng(36);
  for (int t = 0; t < 10; ++t) {
    // build one as chirp * fourier * chirp, which is always free
    const double pp = runif(rng, -1, 1), qq = runif(rng, -1, 1);
    Mat W(2, 2);
    W << qq, 1.0, pp * qq - 1.0, pp;  // [[1,0],[p,1]] J0 [[1,0],[q,1]]
    FreeSymplectic fs;
    fs.A = W.topLeftCorner(1, 1);
    fs.B = W.topRightCorner(1, 1);
    fs.C = W.bottomLeftCorner(1, 1);
    fs.D = W.bottomRightCorner(1, 1);
    fs.s = 0;
    CHECK(fs.symplectic_residual() <= 1e-12);
  }
}
