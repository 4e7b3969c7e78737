#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lieorb/symplecto.hpp"
#include "oracles.hpp"

using namespace lieorb;

namespace {

struct Case {
  AlgebraSpec spec;
  std::vector<double> c;
};

std::vector<Case> cases() {
  return {{{Family::sl, 2, Field::real}, {1, -1}},
          {{Family::sl, 3, Field::real}, {1, 0, -1}},
          {{Family::sl, 3, Field::real}, {1, 1, -2}},
          {{Family::sl, 4, Field::real}, {1, 1, -1, -1}},
          {{Family::sl, 2, Field::complex_realified}, {1, -1}},
          {{Family::sl, 3, Field::complex_realified}, {1, 0, -1}}};
}

}  // namespace

TEST_CASE("pullback of the orbit form is the Liouville form") {
  for (const auto& k : cases()) {
    CAPTURE(describe(k.spec));
    const auto d = hyperbolic_data(build_structure(k.spec), k.c);
    Rng rng(1);
    for (int p = 0; p < 20; ++p) {
      const auto pt = random_cotangent_point(d, rng);
      const auto r = pullback(d, pt);
      CHECK(r.residual < 1e-6);
      CHECK(std::abs(r.scale_ratio - 1.0) < 1e-6);
    }
  }
}

TEST_CASE("chart formula matches the finite-difference derivative of the tautological form") {
  for (const auto& k : cases()) {
    const auto d = hyperbolic_data(build_structure(k.spec), k.c);
    Rng rng(2);
    const auto frame = cotangent_frame(d);
    CHECK(frame.size() == static_cast<std::size_t>(2 * d.dim_n()));
    for (int p = 0; p < 3; ++p) {
      const auto pt = random_cotangent_point(d, rng);
      for (const auto& a : frame)
        for (const auto& b : frame) {
          const auto fd = liouville_fd(d, pt, a, b);
          CHECK(std::abs(fd.value - liouville_eval(d, pt, a, b)) < 1e-6);
          CHECK(fd.richardson < 1e-6);
        }
    }
  }
}

TEST_CASE("frozen sign: phi^* Omega = -d theta") {
  CHECK(kPullbackSign == -1.0);
  const auto d = hyperbolic_data(build_structure({Family::sl, 2, Field::real}), std::vector<double>{1, -1});
  Rng rng(3);
  const auto pt = random_cotangent_point(d, rng);
  const auto r = pullback(d, pt);
  const auto frame = cotangent_frame(d);
  Mat chart(frame.size(), frame.size());
  for (std::size_t a = 0; a < frame.size(); ++a)
    for (std::size_t b = 0; b < frame.size(); ++b) chart(a, b) = liouville_eval(d, pt, frame[a], frame[b]);
  // the pulled-back Gram is the negated chart Gram
  CHECK((r.pullback + chart).cwiseAbs().maxCoeff() < 1e-6);
  CHECK(chart.cwiseAbs().maxCoeff() > 1e-3);
}

TEST_CASE("bundle compatibility, well-definedness, equivariance") {
  for (const auto& k : cases()) {
    const auto d = hyperbolic_data(build_structure(k.spec), k.c);
    const auto& alg = d.algebra();
    const auto split = cartan_split(alg);
    Rng rng(4);
    for (int p = 0; p < 10; ++p) {
      const auto pt = random_cotangent_point(d, rng);
      const auto op = phi_lambda(d, pt);
      CHECK(coset_residual(d, project_pi(d, op).k, pt.k) < 1e-9);
      // orbit point is conjugate to c
      CHECK((op.w - oracle::Ad(alg, op.g, d.c)).norm() < 1e-9);

      const Mat m = random_Z_K(d, rng);
      CHECK(in_K(alg, m));
      CHECK((alg.Ad(m, d.c) - d.c).norm() < 1e-10);
      const Vec moved = d.n_coords(alg.Ad(m, d.n_element(pt.V)));
      CHECK((phi_lambda(d, {pt.k * m, pt.V}).w - phi_lambda(d, {pt.k, moved}).w).norm() < 1e-9);

      const Mat k0 = random_K(alg, split, rng);
      CHECK((phi_lambda(d, {k0 * pt.k, pt.V}).w - alg.Ad(k0, op.w)).norm() < 1e-9);
    }
  }
}

TEST_CASE("zero section lands on the K-orbit and is Lagrangian") {
  for (const auto& k : cases()) {
    const auto d = hyperbolic_data(build_structure(k.spec), k.c);
    const auto& alg = d.algebra();
    Rng rng(5);
    for (int p = 0; p < 5; ++p) {
      const auto pt = random_cotangent_point(d, rng);
      const Vec w = phi_lambda(d, {pt.k, Vec::Zero(d.dim_n())}).w;
      CHECK((w - alg.Ad(pt.k, d.c)).norm() < 1e-10);
    }
    CHECK(section_lagrangian_check(d, rng, 5) < 1e-10);
  }
}

TEST_CASE("tautological form vanishes on vertical vectors") {
  const auto d = hyperbolic_data(build_structure({Family::sl, 3, Field::real}), std::vector<double>{1, 0, -1});
  Rng rng(6);
  const auto pt = random_cotangent_point(d, rng);
  const CotangentTangent vertical{Vec::Zero(d.algebra().dim()), random_vec(rng, d.dim_n())};
  CHECK(std::abs(tautological_form(d, pt, vertical)) < 1e-15);
}

TEST_CASE("Arnold model: Re form at c against data at c/2") {
  for (int n : {2, 3}) {
    const auto st = build_structure({Family::sl, n, Field::complex_realified});
    const auto& alg = *st->algebra;
    const std::vector<double> c = n == 2 ? std::vector<double>{1, -1} : std::vector<double>{1, 0, -1};
    std::vector<double> half;
    for (double x : c) half.push_back(x / 2);
    const auto dh = hyperbolic_data(st, half);
    const auto dc = hyperbolic_data(st, c);
    const Vec cv = alg.diag_element(c);
    Rng rng(7);
    for (int p = 0; p < 20; ++p) {
      const auto pt = random_cotangent_point(dh, rng);
      const auto r = pullback(dh, pt, {FormKind::re, cv});
      CHECK(r.residual < 1e-6);
      CHECK(std::abs(r.scale_ratio - 1.0) < 1e-6);
    }
    // with data at c itself the Re form comes out at half scale
    const auto r2 = pullback(dc, random_cotangent_point(dc, rng), {FormKind::re, cv});
    CHECK(std::abs(r2.scale_ratio - 0.5) < 1e-6);

    // imaginary c = i b: Im form against data at b/2
    std::vector<cplx> ic;
    for (double x : c) ic.emplace_back(0, x);
    const auto r3 = pullback(dh, random_cotangent_point(dh, rng), {FormKind::im, alg.complex_diag_element(ic)});
    CHECK(r3.residual < 1e-6);
  }
}
