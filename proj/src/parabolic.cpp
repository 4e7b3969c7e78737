#include "lieorb/parabolic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "lieorb/errors.hpp"
#include "lieorb/random.hpp"
#include "lieorb/tolerances.hpp"

namespace lieorb {

namespace {

constexpr std::uint64_t kNilpotencySeed = 0x9e3779b97f4a7c15ull;

struct RootValue {
  int root;
  double value;
  std::optional<Rational> exact;
};

bool value_less(const RootValue& x, const RootValue& y) {
  if (x.exact && y.exact) return *x.exact < *y.exact;
  return x.value < y.value;
}

bool value_equal(const RootValue& x, const RootValue& y, double scale) {
  if (x.exact && y.exact) return *x.exact == *y.exact;
  return std::abs(x.value - y.value) <= 1e-9 * scale;
}

Mat hcat(const Mat& a, const Mat& b) {
  Mat m(std::max(a.rows(), b.rows()), a.cols() + b.cols());
  if (a.cols()) m.leftCols(a.cols()) = a;
  if (b.cols()) m.rightCols(b.cols()) = b;
  return m;
}

HyperbolicData build(std::shared_ptr<const Structure> s, const std::vector<double>& c_diag,
                     std::optional<std::vector<Rational>> exact) {
  const MatrixLieAlgebra& alg = *s->algebra;
  if (static_cast<int>(c_diag.size()) != alg.n()) throw DomainError("hyperbolic_data: c has wrong length");
  HyperbolicData d;
  d.structure = s;
  d.c_diag = c_diag;
  d.c_exact = exact;
  d.c = alg.diag_element(c_diag);
  if (d.c.norm() == 0.0) throw DomainError("hyperbolic_data: c = 0");
  d.lambda = alg.killing_matrix() * d.c;
  const double scale = std::max(1.0, d.c.cwiseAbs().maxCoeff());

  const auto& rs = s->roots;
  std::vector<RootValue> positive_n;
  Mat z = rs.zero_space;
  for (int idx : s->positive) {
    const auto& root = rs.roots[idx];
    RootValue rv{idx, root.value(d.c), std::nullopt};
    if (exact && !root.diag.empty()) {
      rv.exact = root.exact_value(*exact);
      rv.value = to_double(*rv.exact);
    } else if (!root.diag.empty()) {
      rv.value = 0.0;
      for (std::size_t i = 0; i < c_diag.size(); ++i) rv.value += to_double(root.diag[i]) * c_diag[i];
    }
    const bool negative = rv.exact ? (*rv.exact < Rational(0)) : (rv.value < -1e-10);
    if (negative) throw DomainError("hyperbolic_data: c is outside the closed positive chamber");
    const bool zero = rv.exact ? (*rv.exact == Rational(0)) : (std::abs(rv.value) <= 1e-9 * scale);
    if (zero) {
      z = hcat(z, root.space_basis);
      z = hcat(z, alg.theta_matrix() * root.space_basis);
    } else {
      positive_n.push_back(rv);
    }
  }
  if (!exact) {
    // Snap each cluster of nearly equal values to its smallest member, so
    // rounding noise cannot reorder roots inside a grade.
    std::vector<RootValue> sorted = positive_n;
    std::stable_sort(sorted.begin(), sorted.end(), value_less);
    std::vector<double> snapped(rs.roots.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (i > 0 && value_equal(sorted[i], sorted[i - 1], scale)) sorted[i].value = sorted[i - 1].value;
      snapped[sorted[i].root] = sorted[i].value;
    }
    for (auto& rv : positive_n) rv.value = snapped[rv.root];
  }
  std::stable_sort(positive_n.begin(), positive_n.end(), value_less);

  d.z_basis = rref_basis(z);
  d.n_basis = Mat(alg.dim(), 0);
  std::vector<double> t;
  for (const auto& rv : positive_n) {
    const auto& sb = rs.roots[rv.root].space_basis;
    d.n_basis = hcat(d.n_basis, sb);
    for (Eigen::Index c = 0; c < sb.cols(); ++c) t.push_back(rv.value);
  }
  // Grades.
  for (std::size_t i = 0; i < positive_n.size(); ++i) {
    if (i == 0 || !value_equal(positive_n[i], positive_n[i - 1], scale)) {
      d.eigenvalues.push_back(positive_n[i].value);
      d.multiplicities.push_back(0);
    }
    const int mult = rs.roots[positive_n[i].root].multiplicity;
    d.multiplicities.back() += mult;
    for (int k = 0; k < mult; ++k) d.grade_of.push_back(static_cast<int>(d.eigenvalues.size()) - 1);
  }
  d.t_diag = Eigen::Map<const Vec>(t.data(), static_cast<Eigen::Index>(t.size()));
  d.nbar_basis = alg.theta_matrix() * d.n_basis;

  d.adapted = hcat(hcat(d.nbar_basis, d.z_basis), d.n_basis);
  if (d.adapted.cols() != alg.dim()) throw InconsistencyError("nbar + z + n does not match dim g");
  d.adapted_inv = d.adapted.inverse();

  const int dn = d.dim_n();
  d.n_ad.assign(static_cast<std::size_t>(dn), Mat::Zero(dn, dn));
  for (int i = 0; i < dn; ++i) {
    const Mat adv = alg.ad_of(d.n_basis.col(i));
    for (int j = 0; j < dn; ++j) d.n_ad[i].col(j) = d.n_coords(adv * d.n_basis.col(j));
  }

  d.degree_bound = static_cast<int>(std::floor(d.eigenvalues.back() / d.eigenvalues.front() + 1e-9));
  d.N0 = sampled_nilpotency(d, 20, kNilpotencySeed);
  if (d.N0 > d.degree_bound) throw InconsistencyError("nilpotency index exceeds the grading bound");
  d.p_orthonormal = orthonormal_basis(hcat(d.z_basis, d.n_basis));
  return d;
}

}  // namespace

Vec HyperbolicData::n_coords(const Vec& x, double tol) const {
  const Vec comp = adapted_inv * x;
  const Eigen::Index outside = nbar_basis.cols() + z_basis.cols();
  const double leak = outside ? comp.head(outside).cwiseAbs().maxCoeff() : 0.0;
  if (leak > tol * std::max(1.0, x.norm())) throw DomainError("element has a component outside n(lambda)");
  return comp.tail(n_basis.cols());
}

Mat HyperbolicData::n_matrix(const Vec& u) const { return algebra().to_matrix(n_basis * u); }

Mat HyperbolicData::ad_n(const Vec& u) const {
  Mat m = Mat::Zero(dim_n(), dim_n());
  for (int i = 0; i < dim_n(); ++i)
    if (u(i) != 0.0) m += u(i) * n_ad[i];
  return m;
}

Vec HyperbolicData::bracket_n(const Vec& u, const Vec& v) const { return ad_n(u) * v; }

HyperbolicData hyperbolic_data(std::shared_ptr<const Structure> s, const std::vector<Rational>& c) {
  Rational sum(0);
  std::vector<double> cd;
  for (const auto& x : c) {
    sum += x;
    cd.push_back(to_double(x));
  }
  if (sum != Rational(0)) throw DomainError("hyperbolic_data: c is not traceless");
  return build(std::move(s), cd, c);
}

HyperbolicData hyperbolic_data(std::shared_ptr<const Structure> s, const std::vector<double>& c) {
  return build(std::move(s), c, std::nullopt);
}

int nilpotency_index(const HyperbolicData& data) { return data.N0; }

int sampled_nilpotency(const HyperbolicData& data, int samples, std::uint64_t seed) {
  Rng rng(seed);
  int worst = 1;
  for (int s = 0; s < samples; ++s) {
    Vec u = random_vec(rng, data.dim_n());
    u /= u.norm();
    const Mat a = data.ad_n(u);
    Mat power = a * a;
    int n = 1;
    while (power.cwiseAbs().maxCoeff() >= kNilpotent && n <= data.dim_n()) {
      power = power * a;
      ++n;
    }
    worst = std::max(worst, n);
  }
  return worst;
}

Mat grade_projector(const HyperbolicData& data, GradeMode mode, int index) {
  const int dn = data.dim_n();
  Mat p = Mat::Zero(dn, dn);
  for (int j = 0; j < dn; ++j) {
    const bool keep = mode == GradeMode::single ? j == index : mode == GradeMode::at_most ? j <= index : j > index;
    if (keep) p(j, j) = 1.0;
  }
  return p;
}

Vec grade_projection(const HyperbolicData& data, const Vec& x, GradeMode mode, int index) {
  return data.n_element(grade_projector(data, mode, index) * data.n_coords(x));
}

ParabolicResiduals parabolic_residuals(const HyperbolicData& data, std::uint64_t seed) {
  ParabolicResiduals r;
  const MatrixLieAlgebra& alg = data.algebra();
  const int dn = data.dim_n();
  const Mat adc = alg.ad_of(data.c);
  for (int j = 0; j < dn; ++j)
    r.eigen = std::max(r.eigen, (adc * data.n_basis.col(j) - data.t_diag(j) * data.n_basis.col(j)).norm());

  const Eigen::Index off = data.nbar_basis.cols() + data.z_basis.cols();
  for (int i = 0; i < dn; ++i)
    for (int j = 0; j < dn; ++j) {
      Vec comp = data.adapted_inv * (alg.ad_of(data.n_basis.col(i)) * data.n_basis.col(j));
      const double target = data.t_diag(i) + data.t_diag(j);
      for (int k = 0; k < dn; ++k)
        if (std::abs(data.t_diag(k) - target) < 1e-9) comp(off + k) = 0.0;
      r.grading = std::max(r.grading, comp.cwiseAbs().maxCoeff());
    }

  const Mat p = hcat(data.z_basis, data.n_basis);
  r.killing_n_p = (data.n_basis.transpose() * alg.killing_matrix() * p).cwiseAbs().maxCoeff();

  const Mat to_k = 0.5 * (Mat::Identity(alg.dim(), alg.dim()) + alg.theta_matrix());
  const Mat kz = rref_basis(to_k * data.z_basis);
  if (kz.cols() > 0) {
    Rng rng(seed);
    for (int s = 0; s < 5; ++s) {
      const Vec y = kz * random_vec(rng, kz.cols());
      const Mat k = expm(alg.to_matrix(y));
      const Mat kinv = k.transpose();
      for (int j = 0; j < dn; ++j) {
        Vec comp = data.adapted_inv * alg.Ad(k, kinv, data.n_basis.col(j));
        for (int q = 0; q < dn; ++q)
          if (data.grade_of[q] == data.grade_of[j]) comp(off + q) = 0.0;
        r.zk_invariance = std::max(r.zk_invariance, comp.cwiseAbs().maxCoeff());
      }
    }
  }

  Mat sum = Mat::Zero(dn, dn);
  for (int i = 0; i < dn; ++i) {
    const Mat pi = grade_projector(data, GradeMode::single, i);
    sum += pi;
    for (int j = 0; j < dn; ++j) {
      const Mat expect = i == j ? pi : Mat::Zero(dn, dn);
      r.projector = std::max(r.projector, (pi * grade_projector(data, GradeMode::single, j) - expect).cwiseAbs().maxCoeff());
    }
  }
  r.projector = std::max(r.projector, (sum - Mat::Identity(dn, dn)).cwiseAbs().maxCoeff());
  r.half_dimension = 2 * dn - (alg.dim() - data.dim_z());
  r.additivity = static_cast<int>(data.adapted.cols()) - alg.dim();
  return r;
}

std::vector<Rational> sort_into_chamber(std::vector<Rational> c) {
  std::sort(c.begin(), c.end(), std::greater<>());
  return c;
}

std::vector<double> sort_into_chamber(std::vector<double> c) {
  std::sort(c.begin(), c.end(), std::greater<>());
  return c;
}

}  // namespace lieorb
