#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lieorb/errors.hpp"
#include "lieorb/kkform.hpp"
#include "lieorb/liecore.hpp"
#include "oracles.hpp"

using namespace lieorb;

namespace {

std::vector<AlgebraSpec> specs() {
  return {{Family::sl, 2, Field::real},
          {Family::sl, 3, Field::real},
          {Family::sl, 4, Field::real},
          {Family::sl, 2, Field::complex_realified},
          {Family::sl, 3, Field::complex_realified}};
}

}  // namespace

TEST_CASE("dimensions") {
  const int expect[] = {3, 8, 15, 6, 16};
  int i = 0;
  for (const auto& s : specs()) CHECK(MatrixLieAlgebra(s).dim() == expect[i++]);
}

TEST_CASE("basis labels and order for sl(2,R)") {
  MatrixLieAlgebra alg({Family::sl, 2, Field::real});
  CHECK(alg.labels() == std::vector<std::string>{"H1", "E12", "E21"});
  MatrixLieAlgebra c({Family::sl, 2, Field::complex_realified});
  CHECK(c.labels() == std::vector<std::string>{"H1", "iH1", "E12", "iE12", "E21", "iE21"});
}

TEST_CASE("sl(2,R) Killing matrix") {
  MatrixLieAlgebra alg({Family::sl, 2, Field::real});
  Mat expect(3, 3);
  expect << 8, 0, 0, 0, 0, 4, 0, 4, 0;
  CHECK((alg.killing_matrix() - expect).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("brackets, Killing form and theta against matrix oracles") {
  for (const auto& s : specs()) {
    MatrixLieAlgebra alg(s);
    CAPTURE(describe(s));
    Rng rng(5);
    for (int t = 0; t < 10; ++t) {
      const Vec x = random_vec(rng, alg.dim()), y = random_vec(rng, alg.dim());
      const Mat X = alg.to_matrix(x), Y = alg.to_matrix(y);
      CHECK((alg.to_matrix(alg.bracket(x, y)) - oracle::comm(X, Y)).cwiseAbs().maxCoeff() < 1e-12);
      CHECK(std::abs(alg.killing(x, y) - oracle::killing(alg, x, y)) < 1e-10);
      Mat th = -X.transpose();
      CHECK((alg.to_matrix(alg.theta(x)) - th).cwiseAbs().maxCoeff() < 1e-14);
      CHECK((alg.coords(X) - x).cwiseAbs().maxCoeff() < 1e-14);
    }
  }
}

TEST_CASE("structure residuals on every supported algebra") {
  for (const auto& s : specs()) {
    MatrixLieAlgebra alg(s);
    CAPTURE(describe(s));
    const auto split = cartan_split(alg);
    const auto r = structure_residuals(alg, split);
    CHECK(r.antisymmetry < 1e-10);
    CHECK(r.jacobi < 1e-10);
    CHECK(r.killing_symmetry < 1e-10);
    CHECK(r.killing_invariance < 1e-10);
    CHECK(r.killing_min_abs_eig > 1e-3);
    CHECK(r.theta_involution < 1e-10);
    CHECK(r.theta_killing < 1e-10);
    CHECK(r.theta_automorphism < 1e-10);
    CHECK(r.bracket_kk < 1e-10);
    CHECK(r.bracket_kp < 1e-10);
    CHECK(r.bracket_pp < 1e-10);
    CHECK(r.killing_k_max < 0);
    CHECK(r.killing_p_min > 0);
    CHECK(r.inner_min_eig > 0);
    CHECK(r.dim_additivity == 0);
    // k = so(n) or su(n)
    const int n = s.n;
    CHECK(split.k_basis.cols() == (alg.realified() ? n * n - 1 : n * (n - 1) / 2));
  }
}

TEST_CASE("complex structure J on realified algebras") {
  MatrixLieAlgebra alg({Family::sl, 3, Field::complex_realified});
  const Mat& j = alg.j_matrix();
  CHECK((j * j + Mat::Identity(alg.dim(), alg.dim())).cwiseAbs().maxCoeff() < 1e-14);
  Rng rng(6);
  const Vec x = random_vec(rng, alg.dim()), y = random_vec(rng, alg.dim());
  // [Jx, y] = J[x, y]
  CHECK((alg.bracket(alg.J(x), y) - alg.J(alg.bracket(x, y))).cwiseAbs().maxCoeff() < 1e-12);
  CHECK_THROWS_AS(MatrixLieAlgebra({Family::sl, 2, Field::real}).J(Vec::Zero(3)), ConfigError);
}

TEST_CASE("coords rejects matrices outside the algebra") {
  MatrixLieAlgebra alg({Family::sl, 2, Field::real});
  Mat m = Mat::Identity(2, 2);
  CHECK_THROWS_AS(alg.coords(m), DomainError);
  MatrixLieAlgebra c({Family::sl, 2, Field::complex_realified});
  Mat bad = Mat::Zero(4, 4);
  bad(0, 1) = 1.0;  // not of the form [[A,-B],[B,A]]
  CHECK_THROWS_AS(c.coords(bad), DomainError);
}

TEST_CASE("Killing duality B_R = 2 Re B_C") {
  for (int n : {2, 3}) {
    MatrixLieAlgebra alg({Family::sl, n, Field::complex_realified});
    CHECK(killing_compare_realified(alg) < 1e-9);
    ComplexTraceForm form(n);
    Rng rng(7);
    for (int t = 0; t < 5; ++t) {
      const Vec x = random_vec(rng, alg.dim()), y = random_vec(rng, alg.dim());
      const CMat X = complex_matrix(alg, x), Y = complex_matrix(alg, y);
      CHECK(std::abs(form.killing(X, Y) - oracle::killing_c(X, Y)) < 1e-10);
    }
  }
}

TEST_CASE("dual element: c_eta = 2 X_{Re eta}") {
  for (int n : {2, 3}) {
    MatrixLieAlgebra alg({Family::sl, n, Field::complex_realified});
    Rng rng(8);
    // eta = B_C(c_eta, .) for a random complex c_eta.
    const Vec c_eta = random_vec(rng, alg.dim());
    const CMat C = complex_matrix(alg, c_eta);
    Vec re_eta(alg.dim());
    for (int i = 0; i < alg.dim(); ++i) re_eta(i) = oracle::killing_c(C, complex_matrix(alg, Vec::Unit(alg.dim(), i))).real();
    const Vec x_re = dual_element(alg, re_eta);
    CHECK((c_eta - 2.0 * x_re).norm() < 1e-10);
  }
}

TEST_CASE("Ad is an automorphism") {
  for (const auto& s : specs()) {
    MatrixLieAlgebra alg(s);
    Rng rng(9);
    const Mat g = oracle::random_group(alg, rng);
    const Vec x = random_vec(rng, alg.dim()), y = random_vec(rng, alg.dim());
    CHECK((alg.Ad(g, alg.bracket(x, y)) - alg.bracket(alg.Ad(g, x), alg.Ad(g, y))).norm() < 1e-10);
    CHECK((alg.Ad(g, x) - oracle::Ad(alg, g, x)).norm() < 1e-12);
    CHECK(std::abs(alg.killing(alg.Ad(g, x), alg.Ad(g, y)) - alg.killing(x, y)) < 1e-9);
    CHECK(group_det_residual(alg, g) < 1e-10);
  }
}

TEST_CASE("Iwasawa decomposition") {
  for (const auto& s : specs()) {
    MatrixLieAlgebra alg(s);
    CAPTURE(describe(s));
    Rng rng(10);
    const Mat g = oracle::random_group(alg, rng, 0.8);
    const Iwasawa iw = iwasawa_decompose(alg, g);
    CHECK((iw.k * iw.a * iw.n - g).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(in_K(alg, iw.k));
    const int d = alg.mat_size();
    for (int i = 0; i < d; ++i) {
      CHECK(iw.a(i, i) > 0);
      CHECK(std::abs(iw.n(i, i) - 1.0) < 1e-10);
      for (int j = 0; j < d; ++j)
        if (i != j) CHECK(std::abs(iw.a(i, j)) < 1e-12);
    }
    if (!alg.realified()) CHECK(iw.n.triangularView<Eigen::StrictlyLower>().toDenseMatrix().cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("describe") {
  CHECK(describe({Family::sl, 3, Field::real}) == "sl(3,R)");
  CHECK(describe({Family::sl, 2, Field::complex_realified}) == "sl(2,C)");
}
