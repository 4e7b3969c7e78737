#include "lieorb/liecore.hpp"

#include <algorithm>
#include <cmath>

#include "lieorb/errors.hpp"

namespace lieorb {

namespace {

// Enumerates the sl(n) basis as (row, col) of the unit matrix, with row == col
// standing for H_row = E_rr - E_{r+1,r+1}.
std::vector<std::pair<int, int>> sl_slots(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int k = 0; k + 1 < n; ++k) slots.emplace_back(k, k);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(j, i);
  return slots;
}

std::string slot_label(const std::pair<int, int>& s) {
  if (s.first == s.second) return "H" + std::to_string(s.first + 1);
  const std::string idx = std::to_string(s.first + 1) + std::to_string(s.second + 1);
  return "E" + idx;
}

template <class M>
void fill_slot(M& m, const std::pair<int, int>& s, typename M::Scalar v) {
  if (s.first == s.second) {
    m(s.first, s.first) += v;
    m(s.first + 1, s.first + 1) -= v;
  } else {
    m(s.first, s.second) += v;
  }
}

// Coefficients of an n x n block on the sl(n) basis: off-diagonal entries are
// read directly, H coefficients are prefix sums of the diagonal.
template <class Block, class Out>
void sl_coefficients(const Block& b, int n, Out&& out) {
  const auto slots = sl_slots(n);
  typename Block::Scalar prefix = 0;
  for (std::size_t s = 0; s < slots.size(); ++s) {
    const auto [i, j] = slots[s];
    if (i == j) {
      prefix += b(i, i);
      out(s, prefix);
    } else {
      out(s, b(i, j));
    }
  }
}

}  // namespace

std::string describe(const AlgebraSpec& spec) {
  return std::string("sl(") + std::to_string(spec.n) + (spec.field == Field::real ? ",R)" : ",C)");
}

MatrixLieAlgebra::MatrixLieAlgebra(const AlgebraSpec& spec) : spec_(spec) {
  if (spec.family != Family::sl) throw ConfigError("unsupported algebra family");
  if (spec.n < 2) throw ConfigError("sl(n) requires n >= 2");
  const int n = spec.n;
  d_ = realified() ? 2 * n : n;
  const auto slots = sl_slots(n);
  for (const auto& s : slots) {
    Mat m = Mat::Zero(d_, d_);
    fill_slot(m, s, 1.0);
    if (!realified()) {
      basis_.push_back(m);
      labels_.push_back(slot_label(s));
      continue;
    }
    m.bottomRightCorner(n, n) = m.topLeftCorner(n, n);
    basis_.push_back(m);
    labels_.push_back(slot_label(s));
    Mat im = Mat::Zero(d_, d_);
    Mat unit = Mat::Zero(n, n);
    fill_slot(unit, s, 1.0);
    im.bottomLeftCorner(n, n) = unit;
    im.topRightCorner(n, n) = -unit;
    basis_.push_back(im);
    labels_.push_back("i" + slot_label(s));
  }

  const int dim = this->dim();
  ad_.assign(static_cast<std::size_t>(dim), Mat::Zero(dim, dim));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) ad_[i].col(j) = coords(commutator(basis_[i], basis_[j]));

  killing_.resize(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j) killing_(i, j) = killing_(j, i) = trace_product(ad_[i], ad_[j]);

  theta_.resize(dim, dim);
  for (int j = 0; j < dim; ++j) theta_.col(j) = coords(-basis_[j].transpose());
  inner_ = -(killing_ * theta_);

  if (realified()) {
    Mat j0 = Mat::Zero(d_, d_);
    j0.topRightCorner(n, n) = -Mat::Identity(n, n);
    j0.bottomLeftCorner(n, n) = Mat::Identity(n, n);
    j_.resize(dim, dim);
    for (int j = 0; j < dim; ++j) j_.col(j) = coords(j0 * basis_[j]);
  }
}

Mat MatrixLieAlgebra::to_matrix(const Vec& x) const {
  Mat m = Mat::Zero(d_, d_);
  for (int i = 0; i < dim(); ++i)
    if (x(i) != 0.0) m += x(i) * basis_[i];
  return m;
}

Vec MatrixLieAlgebra::coords(const Mat& m) const { return coords(m, 1e-9); }

Vec MatrixLieAlgebra::coords(const Mat& m, double tol) const {
  const int n = spec_.n;
  Vec x(dim());
  if (!realified()) {
    sl_coefficients(m, n, [&](std::size_t s, double v) { x(s) = v; });
  } else {
    const Mat a = m.topLeftCorner(n, n);
    const Mat b = m.bottomLeftCorner(n, n);
    sl_coefficients(a, n, [&](std::size_t s, double v) { x(2 * s) = v; });
    sl_coefficients(b, n, [&](std::size_t s, double v) { x(2 * s + 1) = v; });
  }
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double residual = (to_matrix(x) - m).cwiseAbs().maxCoeff();
  if (residual > tol * scale)
    throw DomainError("matrix is not an element of " + describe(spec_) + " (residual " + std::to_string(residual) +
                      ")");
  return x;
}

Vec MatrixLieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (x.size() != dim() || y.size() != dim()) throw DomainError("bracket: dimension mismatch");
  return coords(commutator(to_matrix(x), to_matrix(y)));
}

double MatrixLieAlgebra::killing(const Vec& x, const Vec& y) const {
  if (x.size() != dim() || y.size() != dim()) throw DomainError("killing: dimension mismatch");
  return x.dot(killing_ * y);
}

double MatrixLieAlgebra::inner(const Vec& x, const Vec& y) const { return x.dot(inner_ * y); }

Vec MatrixLieAlgebra::J(const Vec& x) const {
  if (!realified()) throw ConfigError("complex structure requested on a real form");
  return j_ * x;
}

Mat MatrixLieAlgebra::ad_of(const Vec& x) const {
  Mat m = Mat::Zero(dim(), dim());
  for (int i = 0; i < dim(); ++i)
    if (x(i) != 0.0) m += x(i) * ad_[i];
  return m;
}

Vec MatrixLieAlgebra::diag_element(const std::vector<double>& h) const {
  if (static_cast<int>(h.size()) != spec_.n) throw DomainError("diag_element: wrong length");
  Mat m = Mat::Zero(d_, d_);
  for (int i = 0; i < spec_.n; ++i) {
    m(i, i) = h[i];
    if (realified()) m(i + spec_.n, i + spec_.n) = h[i];
  }
  return coords(m);
}

Vec MatrixLieAlgebra::complex_diag_element(const std::vector<cplx>& h) const {
  if (!realified()) throw ConfigError("complex diagonal requested on a real form");
  if (static_cast<int>(h.size()) != spec_.n) throw DomainError("complex_diag_element: wrong length");
  CMat z = CMat::Zero(spec_.n, spec_.n);
  for (int i = 0; i < spec_.n; ++i) z(i, i) = h[i];
  return coords(realify(z));
}

std::vector<double> MatrixLieAlgebra::real_diagonal(const Vec& x) const {
  const Mat m = to_matrix(x);
  std::vector<double> h(static_cast<std::size_t>(spec_.n));
  for (int i = 0; i < spec_.n; ++i) h[i] = m(i, i);
  return h;
}

Vec MatrixLieAlgebra::Ad(const Mat& g, const Vec& x) const { return Ad(g, Mat(g.inverse()), x); }

Vec MatrixLieAlgebra::Ad(const Mat& g, const Mat& g_inv, const Vec& x) const {
  return coords(matmul(matmul(g, to_matrix(x)), g_inv));
}

ComplexTraceForm::ComplexTraceForm(int n) : n_(n) {
  for (const auto& s : sl_slots(n)) {
    CMat m = CMat::Zero(n, n);
    fill_slot(m, s, cplx(1.0));
    basis_.push_back(m);
  }
}

CVec ComplexTraceForm::coords(const CMat& m) const {
  CVec x(static_cast<Eigen::Index>(basis_.size()));
  sl_coefficients(m, n_, [&](std::size_t s, cplx v) { x(static_cast<Eigen::Index>(s)) = v; });
  return x;
}

CMat ComplexTraceForm::ad(const CMat& x) const {
  const auto dim = static_cast<Eigen::Index>(basis_.size());
  CMat a(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) a.col(j) = coords(x * basis_[j] - basis_[j] * x);
  return a;
}

cplx ComplexTraceForm::killing(const CMat& x, const CMat& y) const { return (ad(x) * ad(y)).trace(); }

CMat complex_matrix(const MatrixLieAlgebra& alg, const Vec& x) {
  if (!alg.realified()) throw ConfigError("complex_matrix on a real form");
  const int n = alg.n();
  const Mat m = alg.to_matrix(x);
  return m.topLeftCorner(n, n).cast<cplx>() + cplx(0, 1) * m.bottomLeftCorner(n, n).cast<cplx>();
}

Mat realify(const CMat& z) {
  const auto n = z.rows();
  Mat m(2 * n, 2 * n);
  m.topLeftCorner(n, n) = z.real();
  m.bottomRightCorner(n, n) = z.real();
  m.bottomLeftCorner(n, n) = z.imag();
  m.topRightCorner(n, n) = -z.imag();
  return m;
}

double killing_compare_realified(const MatrixLieAlgebra& alg) {
  if (!alg.realified()) throw ConfigError("killing_compare_realified needs a realified algebra");
  const ComplexTraceForm oracle(alg.n());
  const int dim = alg.dim();
  std::vector<CMat> ads;
  for (int i = 0; i < dim; ++i) ads.push_back(oracle.ad(complex_matrix(alg, Vec::Unit(dim, i))));
  double worst = 0.0;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      const cplx bc = (ads[i] * ads[j]).trace();
      worst = std::max(worst, std::abs(alg.killing_matrix()(i, j) - 2.0 * bc.real()));
    }
  return worst;
}

CartanSplit cartan_split(const MatrixLieAlgebra& alg) {
  const Mat& th = alg.theta_matrix();
  const Mat id = Mat::Identity(alg.dim(), alg.dim());
  if ((th * th - id).cwiseAbs().maxCoeff() > 1e-10) throw InconsistencyError("theta is not an involution");
  CartanSplit s;
  s.k_basis = rref_basis(0.5 * (id + th));
  s.p_basis = rref_basis(0.5 * (id - th));
  s.inner_matrix = alg.inner_matrix();
  return s;
}

namespace {

double max_abs(const Mat& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

double bracket_leak(const MatrixLieAlgebra& alg, const Mat& u, const Mat& v, const Mat& leak) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < u.cols(); ++i)
    for (Eigen::Index j = 0; j < v.cols(); ++j) {
      const Vec b = alg.ad_of(u.col(i)) * v.col(j);
      worst = std::max(worst, (leak * b).cwiseAbs().maxCoeff());
    }
  return worst;
}

}  // namespace

StructureResiduals structure_residuals(const MatrixLieAlgebra& alg, const CartanSplit& split) {
  StructureResiduals r;
  const int dim = alg.dim();
  const Mat& K = alg.killing_matrix();
  const Mat& th = alg.theta_matrix();
  const Mat id = Mat::Identity(dim, dim);

  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      r.antisymmetry = std::max(r.antisymmetry, max_abs(alg.ad(i).col(j) + alg.ad(j).col(i)));
      // Jacobi for all triples <=> ad[b_i, b_j] = [ad b_i, ad b_j].
      const Mat lhs = alg.ad_of(alg.ad(i).col(j));
      r.jacobi = std::max(r.jacobi, max_abs(lhs - (alg.ad(i) * alg.ad(j) - alg.ad(j) * alg.ad(i))));
    }

  r.killing_symmetry = max_abs(K - K.transpose());
  for (int z = 0; z < dim; ++z) {
    const Mat ka = K * alg.ad(z);
    r.killing_invariance = std::max(r.killing_invariance, max_abs(ka + ka.transpose()));
    r.theta_automorphism = std::max(r.theta_automorphism, max_abs(th * alg.ad(z) - alg.ad_of(th.col(z)) * th));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ke(K);
  const auto& kev = ke.eigenvalues();
  r.killing_min_abs_eig = kev.cwiseAbs().minCoeff() / kev.cwiseAbs().maxCoeff();

  r.theta_involution = max_abs(th * th - id);
  r.theta_killing = max_abs(th.transpose() * K * th - K);

  const Mat to_k = 0.5 * (id + th);
  const Mat to_p = 0.5 * (id - th);
  r.bracket_kk = bracket_leak(alg, split.k_basis, split.k_basis, to_p);
  r.bracket_kp = bracket_leak(alg, split.k_basis, split.p_basis, to_k);
  r.bracket_pp = bracket_leak(alg, split.p_basis, split.p_basis, to_p);

  const Mat kk = split.k_basis.transpose() * K * split.k_basis;
  const Mat pp = split.p_basis.transpose() * K * split.p_basis;
  r.killing_k_max = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(kk).eigenvalues().maxCoeff();
  r.killing_p_min = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(pp).eigenvalues().minCoeff();
  r.inner_min_eig = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(split.inner_matrix).eigenvalues().minCoeff();

  for (Eigen::Index c = 0; c < split.p_basis.cols(); ++c) {
    const Mat ga = split.inner_matrix * alg.ad_of(split.p_basis.col(c));
    r.ad_p_symmetry = std::max(r.ad_p_symmetry, max_abs(ga - ga.transpose()));
  }
  r.dim_additivity = std::abs(static_cast<double>(split.k_basis.cols() + split.p_basis.cols() - dim));
  return r;
}

double group_det_residual(const MatrixLieAlgebra& alg, const Mat& g) {
  if (!alg.realified()) return std::abs(g.determinant() - 1.0);
  const int n = alg.n();
  const CMat z = g.topLeftCorner(n, n).cast<cplx>() + cplx(0, 1) * g.bottomLeftCorner(n, n).cast<cplx>();
  return std::abs(z.determinant() - 1.0);
}

bool in_K(const MatrixLieAlgebra& alg, const Mat& g, double tol) {
  const Mat id = Mat::Identity(g.rows(), g.cols());
  if ((g.transpose() * g - id).cwiseAbs().maxCoeff() > tol) return false;
  if (alg.realified()) {
    const int n = alg.n();
    if ((g.topLeftCorner(n, n) - g.bottomRightCorner(n, n)).cwiseAbs().maxCoeff() > tol) return false;
    if ((g.topRightCorner(n, n) + g.bottomLeftCorner(n, n)).cwiseAbs().maxCoeff() > tol) return false;
  }
  return group_det_residual(alg, g) < tol;
}

namespace {

template <class M>
void qr_positive(const M& g, M& q, M& r) {
  using Scalar = typename M::Scalar;
  const auto n = g.rows();
  Eigen::HouseholderQR<Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>> qr(g);
  q = qr.householderQ();
  r = qr.matrixQR().template triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < n; ++i) {
    const Scalar d = r(i, i);
    const double mag = std::abs(d);
    if (mag == 0.0) throw DomainError("iwasawa_decompose: singular input");
    const Scalar phase = d / mag;
    q.col(i) *= phase;
    r.row(i) /= phase;
  }
}

}  // namespace

Iwasawa iwasawa_decompose(const MatrixLieAlgebra& alg, const Mat& g) {
  if (g.rows() != alg.mat_size() || g.cols() != alg.mat_size()) throw DomainError("iwasawa: size mismatch");
  if (group_det_residual(alg, g) > 1e-9) throw DomainError("iwasawa_decompose: input not in the group (det != 1)");
  Iwasawa out;
  if (!alg.realified()) {
    Mat q, r;
    qr_positive(g, q, r);
    const Vec d = r.diagonal();
    out.k = q;
    out.a = d.asDiagonal();
    out.n = d.cwiseInverse().asDiagonal() * r;
  } else {
    const int n = alg.n();
    CMat z = g.topLeftCorner(n, n).cast<cplx>() + cplx(0, 1) * g.bottomLeftCorner(n, n).cast<cplx>();
    CMat q, r;
    qr_positive(z, q, r);
    const CVec d = r.diagonal();
    out.k = realify(q);
    out.a = realify(CMat(d.asDiagonal()));
    out.n = realify(CMat(d.cwiseInverse().asDiagonal() * r));
  }
  out.residual = (out.k * out.a * out.n - g).cwiseAbs().maxCoeff();
  return out;
}

KPDecomposition kp_decompose(const MatrixLieAlgebra& alg, const Mat& g, const ParabolicFiltration& filt) {
  const Iwasawa iw = iwasawa_decompose(alg, g);
  KPDecomposition out;
  out.k = iw.k;
  out.p = iw.a * iw.n;
  out.residual = (out.k * out.p - g).cwiseAbs().maxCoeff();
  const Mat p_inv = out.p.inverse();
  for (Eigen::Index c = 0; c < filt.p_orthonormal.cols(); ++c) {
    const Vec y = alg.Ad(out.p, p_inv, filt.p_orthonormal.col(c));
    out.filtration_residual =
        std::max(out.filtration_residual, outside_residual(filt.p_orthonormal, y) / std::max(1.0, y.norm()));
  }
  if (out.filtration_residual > 1e-8)
    throw InconsistencyError("kp_decompose: P-factor does not preserve the parabolic filtration");
  return out;
}

}  // namespace lieorb
