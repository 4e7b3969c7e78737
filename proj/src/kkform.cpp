#include "lieorb/kkform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lieorb/errors.hpp"
#include "lieorb/kernels.hpp"
#include "lieorb/tolerances.hpp"

namespace lieorb {

namespace {

// Orthonormal basis of ker(m), singular values below rel * smax counted as zero.
Mat kernel_basis(const Mat& m, double rel = 1e-8) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double smax = s.size() ? s(0) : 0.0;
  Eigen::Index r = 0;
  while (r < s.size() && s(r) > rel * std::max(smax, 1e-300)) ++r;
  return svd.matrixV().rightCols(m.cols() - r);
}

Nondegeneracy gram_report(const Mat& gram, int expected) {
  Nondegeneracy out;
  out.expected_rank = expected;
  if (gram.size() == 0) return out;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(gram);
  const auto& s = svd.singularValues();
  out.sigma_max = s(0);
  out.sigma_min = s(s.size() - 1);
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > 1e-8 * out.sigma_max) ++out.rank;
  return out;
}

int centralizer_dim(const MatrixLieAlgebra& alg, const Vec& w) {
  return static_cast<int>(kernel_basis(alg.ad_of(w)).cols());
}

}  // namespace

OrbitPoint orbit_point(const MatrixLieAlgebra& alg, const Mat& g, const Vec& c) { return {g, alg.Ad(g, c)}; }

TangentRep tangent(const MatrixLieAlgebra& alg, const OrbitPoint& pt, const Vec& X) {
  return {X, alg.bracket(X, pt.w)};
}

Vec dual_element(const MatrixLieAlgebra& alg, const Vec& lambda) {
  return Eigen::MatrixXd(alg.killing_matrix()).partialPivLu().solve(lambda);
}

double kk_eval(const MatrixLieAlgebra& alg, const Vec& w, const Vec& X, const Vec& Y) {
  const Vec kw = alg.killing_matrix() * w;
  const Vec b = alg.bracket(X, Y);
  return kernels::dot(static_cast<std::size_t>(b.size()), kw.data(), b.data());
}

double re_omega(const MatrixLieAlgebra& alg, const Vec& w, const Vec& X, const Vec& Y) {
  if (!alg.realified()) throw ConfigError("Re Omega needs a realified algebra");
  return 0.5 * kk_eval(alg, w, X, Y);
}

double im_omega(const MatrixLieAlgebra& alg, const Vec& w, const Vec& X, const Vec& Y) {
  return -0.5 * kk_eval(alg, w, alg.J(X), Y);
}

double eval_form(FormKind kind, const MatrixLieAlgebra& alg, const Vec& w, const Vec& X, const Vec& Y) {
  switch (kind) {
    case FormKind::omega:
      return kk_eval(alg, w, X, Y);
    case FormKind::re:
      return re_omega(alg, w, X, Y);
    case FormKind::im:
      return im_omega(alg, w, X, Y);
  }
  return 0.0;
}

double closedness_check(const MatrixLieAlgebra& alg, const Vec& w, const Vec& X, const Vec& Y, const Vec& Z) {
  return kk_eval(alg, w, alg.bracket(X, Y), Z) + kk_eval(alg, w, alg.bracket(Y, Z), X) +
         kk_eval(alg, w, alg.bracket(Z, X), Y);
}

Nondegeneracy nondegeneracy_check(const MatrixLieAlgebra& alg, const OrbitPoint& pt, const HyperbolicData& data) {
  const Mat g_inv = pt.g.inverse();
  std::vector<Vec> reps;
  for (Eigen::Index c = 0; c < data.nbar_basis.cols(); ++c) reps.push_back(alg.Ad(pt.g, g_inv, data.nbar_basis.col(c)));
  for (Eigen::Index c = 0; c < data.n_basis.cols(); ++c) reps.push_back(alg.Ad(pt.g, g_inv, data.n_basis.col(c)));
  const auto m = static_cast<Eigen::Index>(reps.size());
  Mat gram(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j) gram(i, j) = kk_eval(alg, pt.w, reps[i], reps[j]);
  return gram_report(gram, alg.dim() - centralizer_dim(alg, pt.w));
}

Nondegeneracy nondegeneracy_check(const MatrixLieAlgebra& alg, const Vec& w, FormKind kind) {
  const Mat ker = kernel_basis(alg.ad_of(w));
  const Mat comp = ker.cols() ? kernel_basis(Mat(ker.transpose() * alg.inner_matrix()))
                              : Mat(Mat::Identity(alg.dim(), alg.dim()));
  Mat gram(comp.cols(), comp.cols());
  for (Eigen::Index i = 0; i < comp.cols(); ++i)
    for (Eigen::Index j = 0; j < comp.cols(); ++j) gram(i, j) = eval_form(kind, alg, w, comp.col(i), comp.col(j));
  return gram_report(gram, alg.dim() - static_cast<int>(ker.cols()));
}

double fiber_isotropy_check(const HyperbolicData& data) {
  const MatrixLieAlgebra& alg = data.algebra();
  double worst = 0.0;
  for (int i = 0; i < data.dim_n(); ++i)
    for (int j = 0; j < data.dim_n(); ++j)
      worst = std::max(worst, std::abs(kk_eval(alg, data.c, data.n_basis.col(i), data.n_basis.col(j))));
  return worst;
}

double fiber_isotropy_check(const HyperbolicData& data, const Mat& g) {
  const MatrixLieAlgebra& alg = data.algebra();
  const Mat g_inv = g.inverse();
  const Vec w = alg.Ad(g, g_inv, data.c);
  std::vector<Vec> reps;
  for (int i = 0; i < data.dim_n(); ++i) reps.push_back(alg.Ad(g, g_inv, data.n_basis.col(i)));
  double worst = 0.0;
  for (const auto& x : reps)
    for (const auto& y : reps) worst = std::max(worst, std::abs(kk_eval(alg, w, x, y)));
  return worst;
}

KLagrangian k_orbit_lagrangian_check(const MatrixLieAlgebra& alg, const CartanSplit& split, const Vec& c,
                                     FormKind kind) {
  if (kind == FormKind::omega && alg.realified())
    throw ConfigError("real-form Lagrangian check requested on a realified algebra");
  if (kind != FormKind::omega && !alg.realified()) throw ConfigError("Re/Im check requested on a real form");
  KLagrangian out;
  const Mat& k = split.k_basis;
  for (Eigen::Index i = 0; i < k.cols(); ++i)
    for (Eigen::Index j = i + 1; j < k.cols(); ++j)
      out.max_abs = std::max(out.max_abs, std::abs(eval_form(kind, alg, c, k.col(i), k.col(j))));
  const Mat adc = alg.ad_of(c);
  out.dim_k_orbit = static_cast<int>(k.cols() - kernel_basis(Mat(adc * k)).cols());
  out.half_orbit = (alg.dim() - centralizer_dim(alg, c)) / 2;
  return out;
}

CVec ad_spectrum(const MatrixLieAlgebra& alg, const Vec& x) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(Eigen::MatrixXd(alg.ad_of(x)), false);
  return es.eigenvalues();
}

double spectrum_gap(const MatrixLieAlgebra& alg, const std::vector<cplx>& h) {
  const Vec x = alg.realified() ? alg.complex_diag_element(h) : alg.diag_element([&] {
    std::vector<double> re;
    for (const auto& v : h) re.push_back(v.real());
    return re;
  }());
  const CVec spec = ad_spectrum(alg, x);
  std::vector<cplx> expected;
  const int n = alg.n();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      expected.push_back(h[i] - h[j]);
      if (alg.realified()) expected.push_back(std::conj(h[i] - h[j]));
    }
  const int zeros = alg.realified() ? 2 * (n - 1) : n - 1;
  for (int z = 0; z < zeros; ++z) expected.emplace_back(0.0);
  if (static_cast<Eigen::Index>(expected.size()) != spec.size()) return std::numeric_limits<double>::infinity();
  std::vector<bool> used(expected.size(), false);
  double worst = 0.0;
  for (Eigen::Index i = 0; i < spec.size(); ++i) {
    std::size_t best = 0;
    double dist = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < expected.size(); ++k)
      if (!used[k] && std::abs(spec(i) - expected[k]) < dist) {
        dist = std::abs(spec(i) - expected[k]);
        best = k;
      }
    used[best] = true;
    worst = std::max(worst, dist);
  }
  return worst;
}

ExactnessVerdict exactness_verdict(const MatrixLieAlgebra& alg, const CartanSplit& split, const Vec& c) {
  if (!alg.realified()) throw ConfigError("exactness verdict needs a realified algebra");
  if (c.norm() == 0.0) throw DomainError("exactness verdict: c = 0");
  ExactnessVerdict v;
  const CVec spec = ad_spectrum(alg, c);
  const double scale = std::max(1.0, spec.cwiseAbs().maxCoeff());
  for (Eigen::Index i = 0; i < spec.size(); ++i) {
    v.spectrum_max_imag = std::max(v.spectrum_max_imag, std::abs(spec(i).imag()));
    v.spectrum_max_real = std::max(v.spectrum_max_real, std::abs(spec(i).real()));
  }
  const bool spectral_re = v.spectrum_max_imag <= 1e-9 * scale;
  const bool spectral_im = v.spectrum_max_real <= 1e-9 * scale;

  v.re_k_residual = k_orbit_lagrangian_check(alg, split, c, FormKind::re).max_abs;
  v.im_k_residual = k_orbit_lagrangian_check(alg, split, c, FormKind::im).max_abs;
  auto geometric = [](double residual, const char* which) {
    if (residual < 1e-10) return true;
    if (residual > kWitness) return false;
    throw InconsistencyError(std::string("exactness: ") + which + " restriction residual in the ambiguous band");
  };
  const bool geo_re = geometric(v.re_k_residual, "Re");
  const bool geo_im = geometric(v.im_k_residual, "Im");
  if (geo_re != spectral_re || geo_im != spectral_im)
    throw InconsistencyError("exactness: spectral and k-orbit tests disagree");
  v.re_exact = spectral_re;
  v.im_exact = spectral_im;
  return v;
}

}  // namespace lieorb
