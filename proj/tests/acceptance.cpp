// One PASS/FAIL line per acceptance criterion. Exit status 0 iff all pass.
#include <cstdio>
#include <functional>
#include <string>

#include "lieorb/checks.hpp"
#include "lieorb/flows.hpp"
#include "lieorb/kkform.hpp"
#include "lieorb/symplecto.hpp"
#include "oracles.hpp"

using namespace lieorb;

namespace {

struct Case {
  AlgebraSpec spec;
  std::vector<double> c;
};

const AlgebraSpec kSl2R{Family::sl, 2, Field::real}, kSl3R{Family::sl, 3, Field::real},
    kSl4R{Family::sl, 4, Field::real}, kSl2C{Family::sl, 2, Field::complex_realified},
    kSl3C{Family::sl, 3, Field::complex_realified};

std::vector<AlgebraSpec> all_specs() { return {kSl2R, kSl3R, kSl4R, kSl2C, kSl3C}; }

std::vector<Case> orbit_cases() {
  return {{kSl2R, {1, -1}},          {kSl3R, {1, 0, -1}},        {kSl3R, {1, 1, -2}},
          {kSl3R, {2, -1, -1}},      {kSl4R, {3, 1, -1, -3}},    {kSl4R, {1, 1, -1, -1}},
          {kSl4R, {1, 0, 0, -1}},    {kSl2C, {1, -1}},           {kSl3C, {1, 0, -1}},
          {kSl3C, {1, 1, -2}}};
}

std::string label(const Case& k) {
  std::string s = describe(k.spec) + " c=(";
  for (std::size_t i = 0; i < k.c.size(); ++i) s += (i ? "," : "") + std::to_string(static_cast<int>(k.c[i]));
  return s + ")";
}

struct Verdict {
  bool pass = true;
  std::string detail;
  void need(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

std::string sci(double x) {
  char b[32];
  std::snprintf(b, sizeof b, "%.2e", x);
  return b;
}

int nullity(const Mat& m) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& s = svd.singularValues();
  int z = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) <= 1e-9 * std::max(1.0, s(0))) ++z;
  return z;
}

// ad(x) from matrix commutators.
Mat ad_oracle(const MatrixLieAlgebra& alg, const Vec& x) {
  Mat a(alg.dim(), alg.dim());
  const Mat X = alg.to_matrix(x);
  for (int j = 0; j < alg.dim(); ++j) a.col(j) = alg.coords(oracle::comm(X, alg.basis()[j]));
  return a;
}

// 1. Structure suite.
Verdict structure_suite() {
  Verdict v;
  double worst = 0;
  for (const auto& s : all_specs()) {
    const MatrixLieAlgebra alg(s);
    const auto& B = alg.basis();
    const int dim = alg.dim();
    double jac = 0, inv = 0, th = 0;
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        const Mat ij = oracle::comm(B[i], B[j]);
        th = std::max(th, (oracle::comm(Mat(-B[i].transpose()), Mat(-B[j].transpose())) + ij.transpose()).cwiseAbs().maxCoeff());
        th = std::max(th, (alg.to_matrix(alg.bracket(Vec::Unit(dim, i), Vec::Unit(dim, j))) - ij).cwiseAbs().maxCoeff());
        for (int k = 0; k < dim; ++k) {
          const Mat J = oracle::comm(ij, B[k]) + oracle::comm(oracle::comm(B[j], B[k]), B[i]) +
                        oracle::comm(oracle::comm(B[k], B[i]), B[j]);
          jac = std::max(jac, J.cwiseAbs().maxCoeff());
          // B([x,y],z) + B(y,[x,z]) through the library form
          const Vec x = Vec::Unit(dim, i), y = Vec::Unit(dim, j), z = Vec::Unit(dim, k);
          inv = std::max(inv, std::abs(alg.killing(alg.bracket(x, y), z) + alg.killing(y, alg.bracket(x, z))));
        }
      }
    // Killing matrix against the trace identity, and non-degeneracy.
    double kd = 0;
    Mat gram(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        gram(i, j) = oracle::killing(alg, Vec::Unit(dim, i), Vec::Unit(dim, j));
        kd = std::max(kd, std::abs(gram(i, j) - alg.killing_matrix()(i, j)));
      }
    const bool nondeg = nullity(gram) == 0;
    const auto r = structure_residuals(alg, cartan_split(alg));
    const double cartan = std::max({r.bracket_kk, r.bracket_kp, r.bracket_pp, r.theta_automorphism, r.theta_involution});
    const double m = std::max({jac, inv, th, kd, cartan, r.jacobi, r.killing_invariance});
    worst = std::max(worst, m);
    v.need(m < 1e-10 && nondeg && r.killing_k_max < 0 && r.killing_p_min > 0 && r.dim_additivity == 0,
           describe(s) + " residual " + sci(m));
  }
  if (v.pass) v.detail = "5 algebras, max residual " + sci(worst);
  return v;
}

// 2. Root suite.
Verdict root_suite() {
  Verdict v;
  double grading = 0;
  for (const auto& s : all_specs()) {
    const auto st = build_structure(s);
    const auto r = root_residuals(*st->algebra, st->split, st->roots, st->positive);
    int mult = 0;
    for (const auto& root : st->roots.roots) mult += root.multiplicity;
    const int book = st->algebra->dim() - static_cast<int>(st->roots.m_basis.cols() + st->roots.a_basis.cols()) - mult;
    grading = std::max(grading, r.bracket_grading);
    v.need(book == 0 && r.dim_bookkeeping == 0, describe(s) + " dimension bookkeeping");
    v.need(r.bracket_grading < 1e-9, describe(s) + " bracket grading " + sci(r.bracket_grading));
    v.need(r.eigen < 1e-9 && r.theta_pairing < 1e-9 && r.symmetric && r.partition, describe(s) + " root axioms");
  }
  // sl(3,C): spectrum of ad(c) on the complex algebra through raw matrices.
  const std::vector<cplx> h{cplx(1.0, 0.5), cplx(-0.3, 0.2), cplx(-0.7, -0.7)};
  CMat C = CMat::Zero(3, 3);
  for (int i = 0; i < 3; ++i) C(i, i) = h[i];
  std::vector<CMat> basis;
  for (int i = 0; i < 2; ++i) {
    CMat m = CMat::Zero(3, 3);
    m(i, i) = 1;
    m(i + 1, i + 1) = -1;
    basis.push_back(m);
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) {
        CMat m = CMat::Zero(3, 3);
        m(i, j) = 1;
        basis.push_back(m);
      }
  // ad(C) in this basis: off-diagonal units are eigenvectors, Cartan part is killed.
  std::vector<cplx> spec, expect;
  Eigen::MatrixXcd ad(8, 8);
  for (int j = 0; j < 8; ++j) {
    const CMat br = oracle::comm(C, basis[j]);
    Eigen::VectorXcd col(8);
    col(0) = br(0, 0);
    col(1) = br(0, 0) + br(1, 1);
    int k = 2;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        if (a != b) col(k++) = br(a, b);
    ad.col(j) = col;
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(ad);
  for (int i = 0; i < 8; ++i) spec.push_back(es.eigenvalues()(i));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) expect.push_back(h[i] - h[j]);
  expect.push_back(0.0);
  expect.push_back(0.0);
  const double gap = oracle::multiset_gap(spec, expect);
  const auto st = build_structure(kSl3C);
  const double lib_gap = spectrum_gap(*st->algebra, h);
  v.need(gap < 1e-9 && lib_gap < 1e-9, "sl(3,C) spectrum gap " + sci(std::max(gap, lib_gap)));
  if (v.pass) v.detail = "bookkeeping exact, grading " + sci(grading) + ", sl(3,C) spectrum gap " + sci(std::max(gap, lib_gap));
  return v;
}

// 3. Killing duality.
Verdict killing_duality() {
  Verdict v;
  double bk = 0, ce = 0;
  for (const auto& s : {kSl2C, kSl3C}) {
    const MatrixLieAlgebra alg(s);
    const int dim = alg.dim();
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        const Vec x = Vec::Unit(dim, i), y = Vec::Unit(dim, j);
        const cplx bc = oracle::killing_c(complex_matrix(alg, x), complex_matrix(alg, y));
        bk = std::max(bk, std::abs(alg.killing(x, y) - 2.0 * bc.real()));
      }
    bk = std::max(bk, killing_compare_realified(alg));
    Rng rng(11);
    for (int t = 0; t < 10; ++t) {
      const Vec c_eta = random_vec(rng, dim);
      const CMat Ce = complex_matrix(alg, c_eta);
      Vec re_eta(dim);
      for (int i = 0; i < dim; ++i) re_eta(i) = oracle::killing_c(Ce, complex_matrix(alg, Vec::Unit(dim, i))).real();
      ce = std::max(ce, (c_eta - 2.0 * dual_element(alg, re_eta)).norm());
    }
  }
  v.need(bk < 1e-9, "|B_R - 2 Re B_C| = " + sci(bk));
  v.need(ce < 1e-10, "|c_eta - 2 X_Re eta| = " + sci(ce));
  if (v.pass) v.detail = "|B_R - 2 Re B_C| " + sci(bk) + ", |c_eta - 2 X_Re eta| " + sci(ce);
  return v;
}

// 4. Exactness grid.
Verdict exactness_grid() {
  Verdict v;
  double vanish = 0, witness = INFINITY;
  for (const auto& s : {kSl2C, kSl3C}) {
    const auto st = build_structure(s);
    const auto& alg = *st->algebra;
    for (int kind = 0; kind < 3; ++kind) {
      const cplx u = kind == 0 ? cplx(1, 0) : kind == 1 ? cplx(0, 1) : cplx(1, 1);
      std::vector<cplx> h = s.n == 2 ? std::vector<cplx>{u, -u} : std::vector<cplx>{u, 0.0, -u};
      const Vec c = alg.complex_diag_element(h);
      const std::string tag = describe(s) + (kind == 0 ? " real" : kind == 1 ? " imaginary" : " mixed");
      ExactnessVerdict ev;
      try {
        ev = exactness_verdict(alg, st->split, c);
      } catch (const std::exception& e) {
        v.need(false, tag + ": " + e.what());
        continue;
      }
      // spectral rule on the raw eigenvalues c_i - c_j
      bool all_real = true, all_imag = true;
      for (const auto& a : h)
        for (const auto& b : h) {
          all_real = all_real && std::abs((a - b).imag()) < 1e-12;
          all_imag = all_imag && std::abs((a - b).real()) < 1e-12;
        }
      double re_max = 0, im_max = 0;
      const Mat& kb = st->split.k_basis;
      for (Eigen::Index i = 0; i < kb.cols(); ++i)
        for (Eigen::Index j = 0; j < kb.cols(); ++j) {
          const cplx f = oracle::holo_form(alg, c, kb.col(i), kb.col(j));
          re_max = std::max(re_max, std::abs(f.real()));
          im_max = std::max(im_max, std::abs(f.imag()));
        }
      v.need(ev.re_exact == all_real && ev.im_exact == all_imag, tag + " verdict disagrees with the spectrum");
      v.need((re_max < 1e-10) == all_real && (im_max < 1e-10) == all_imag, tag + " k-restriction disagrees");
      for (double r : {re_max, im_max}) {
        if (r < 1e-10) {
          vanish = std::max(vanish, r);
        } else {
          witness = std::min(witness, r);
          v.need(r > 1e-3, tag + " weak witness " + sci(r));
        }
      }
    }
  }
  if (v.pass) v.detail = "6/6 cases agree, vanishing <= " + sci(vanish) + ", witness >= " + sci(witness);
  return v;
}

// 5. Fiber Lagrangian.
Verdict fiber_lagrangian() {
  Verdict v;
  double base = 0, moved = 0;
  for (const auto& k : orbit_cases()) {
    const auto st = build_structure(k.spec);
    const auto& alg = *st->algebra;
    const auto d = hyperbolic_data(st, k.c);
    auto form = [&](const Vec& w, const Vec& x, const Vec& y) {
      double f = std::abs(oracle::kk_form(alg, w, x, y));
      if (alg.realified()) f = std::max(f, std::abs(oracle::holo_form(alg, w, x, y)));
      return f;
    };
    double b = 0;
    for (int i = 0; i < d.dim_n(); ++i)
      for (int j = 0; j < d.dim_n(); ++j) b = std::max(b, form(d.c, d.n_basis.col(i), d.n_basis.col(j)));
    Rng rng(21);
    double m = 0;
    for (int p = 0; p < 20; ++p) {
      const Mat g = oracle::random_group(alg, rng);
      const Vec w = oracle::Ad(alg, g, d.c);
      std::vector<Vec> reps;
      for (int i = 0; i < d.dim_n(); ++i) reps.push_back(oracle::Ad(alg, g, d.n_basis.col(i)));
      for (const auto& x : reps)
        for (const auto& y : reps) m = std::max(m, form(w, x, y));
    }
    const int dim_z = nullity(ad_oracle(alg, d.c));
    const bool half = 2 * d.dim_n() == alg.dim() - dim_z && dim_z == d.dim_z();
    base = std::max(base, b);
    moved = std::max(moved, m);
    v.need(b < 1e-10, label(k) + " at base " + sci(b));
    v.need(m < 1e-9, label(k) + " translated " + sci(m));
    v.need(half, label(k) + " half dimension");
  }
  if (v.pass)
    v.detail = std::to_string(orbit_cases().size()) + " (algebra, c) pairs, base " + sci(base) + ", translated " +
               sci(moved) + ", half-dimension exact";
  return v;
}

// 6. Flow suite.
Verdict flow_suite() {
  Verdict v;
  double gap = 0, commute = 0, round = 0, tail = 0, bern = 0;
  for (const auto& k : orbit_cases()) {
    const auto d = hyperbolic_data(build_structure(k.spec), k.c);
    const int dn = d.dim_n();
    Rng rng(31);
    for (int s = 0; s < 50; ++s) {
      const Vec V = random_vec(rng, dn), U0 = random_vec(rng, dn);
      const double t = 2.0 * uniform_pm1(rng);
      const FlowPolynomial fp = flow_exact(d, V, U0);
      gap = std::max(gap, (fp.eval(t) - flow_numeric(d, V, U0, t).value).cwiseAbs().maxCoeff());
      tail = std::max(tail, fp.tail);
      if (s < 5) bern = std::max(bern, (hv_field(d, V, U0) - oracle::hv_bernoulli(d, V, U0)).cwiseAbs().maxCoeff());
      v.need(fp.degree() <= d.degree_bound, label(k) + " degree above bound");
    }
    for (int a = 0; a < dn; ++a)
      for (int b = 0; b < dn; ++b) commute = std::max(commute, commute_residual(d, Vec::Unit(dn, a), Vec::Unit(dn, b)));
    for (int s = 0; s < 100; ++s) {
      const Vec V = random_vec(rng, dn);
      round = std::max(round, (invert_exp_H(d, exp_H(d, V)) - V).cwiseAbs().maxCoeff());
    }
  }
  v.need(gap < 1e-8, "RK4 gap " + sci(gap));
  v.need(commute < 1e-9, "commute " + sci(commute));
  v.need(round < 1e-9, "round trip " + sci(round));
  v.need(tail < 1e-12, "tail " + sci(tail));
  v.need(bern < 1e-10, "field vs Bernoulli series " + sci(bern));
  if (v.pass)
    v.detail = "RK4 gap " + sci(gap) + ", commute " + sci(commute) + ", round trip " + sci(round) + ", tail " +
               sci(tail) + ", field vs Bernoulli " + sci(bern);
  return v;
}

// 7. Symplectomorphism suite.
Verdict symplecto_suite() {
  Verdict v;
  const std::vector<Case> cases{{kSl2R, {1, -1}},   {kSl3R, {1, 0, -1}}, {kSl3R, {1, 1, -2}},
                                {kSl4R, {1, 1, -1, -1}}, {kSl2C, {1, -1}},  {kSl3C, {1, 0, -1}}};
  double pb = 0, bundle = 0, zero = 0, fd = 0;
  for (const auto& k : cases) {
    const auto d = hyperbolic_data(build_structure(k.spec), k.c);
    const auto& alg = d.algebra();
    Rng rng(41);
    const auto frame = cotangent_frame(d);
    for (int p = 0; p < 20; ++p) {
      const auto pt = random_cotangent_point(d, rng);
      pb = std::max(pb, pullback(d, pt).residual);
      bundle = std::max(bundle, coset_residual(d, project_pi(d, phi_lambda(d, pt)).k, pt.k));
      const Vec w0 = phi_lambda(d, {pt.k, Vec::Zero(d.dim_n())}).w;
      zero = std::max(zero, (w0 - oracle::Ad(alg, pt.k, d.c)).norm());
      if (p < 3)
        for (const auto& a : frame)
          for (const auto& b : frame)
            fd = std::max(fd, std::abs(liouville_fd(d, pt, a, b).value - liouville_eval(d, pt, a, b)));
    }
    zero = std::max(zero, section_lagrangian_check(d, rng, 5));
  }
  // Arnold case: realified algebras, Re form at real diagonal c.
  double arnold = 0;
  for (const auto& s : {kSl2C, kSl3C}) {
    const auto st = build_structure(s);
    const std::vector<double> half = s.n == 2 ? std::vector<double>{0.5, -0.5} : std::vector<double>{0.5, 0, -0.5};
    const auto dh = hyperbolic_data(st, half);
    const Vec c = st->algebra->diag_element(s.n == 2 ? std::vector<double>{1, -1} : std::vector<double>{1, 0, -1});
    Rng rng(43);
    for (int p = 0; p < 20; ++p) arnold = std::max(arnold, pullback(dh, random_cotangent_point(dh, rng), {FormKind::re, c}).residual);
  }
  v.need(pb < 1e-6, "pullback " + sci(pb));
  v.need(arnold < 1e-6, "Arnold pullback " + sci(arnold));
  v.need(bundle < 1e-9, "bundle " + sci(bundle));
  v.need(zero < 1e-10, "zero section " + sci(zero));
  v.need(fd < 1e-6, "Liouville vs FD " + sci(fd));
  if (v.pass)
    v.detail = "pullback " + sci(pb) + " (Arnold " + sci(arnold) + "), bundle " + sci(bundle) + ", zero section " +
               sci(zero) + ", Liouville vs FD " + sci(fd);
  return v;
}

// 8. Determinism.
Verdict determinism() {
  Verdict v;
  const char* configs[] = {
      R"({"algebra":{"n":3,"field":"R"},"c":[1,1,-2],"seed":5})",
      R"({"algebra":{"n":2,"field":"C"},"c":[1,-1],"seed":6})",
      R"({"algebra":{"n":3,"field":"C"},"c":[{"re":1,"im":1},0,{"re":-1,"im":-1}],"checks":["roots","kk","arnold"],"seed":7})",
  };
  for (const char* text : configs) {
    const RunConfig cfg = parse_config(Json::parse(text));
    const std::string a = run(cfg).body.dump(2), b = run(cfg).body.dump(2);
    v.need(a == b, std::string("bodies differ for ") + text);
  }
  if (v.pass) v.detail = "3 configs, byte-identical bodies";
  return v;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Verdict()>> criteria[] = {
      {"structure", structure_suite},       {"roots", root_suite},
      {"killing-duality", killing_duality}, {"exactness", exactness_grid},
      {"fiber-lagrangian", fiber_lagrangian}, {"flows", flow_suite},
      {"symplectomorphism", symplecto_suite}, {"determinism", determinism},
  };
  int failed = 0, i = 0;
  for (const auto& [name, fn] : criteria) {
    Verdict v;
    try {
      v = fn();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s %d %s: %s\n", v.pass ? "PASS" : "FAIL", ++i, name, v.detail.c_str());
    std::fflush(stdout);
    failed += v.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
