#include "lieorb/symplecto.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lieorb/errors.hpp"

namespace lieorb {

Mat phi_group(const HyperbolicData& data, const CotangentPoint& pt) {
  if (!in_K(data.algebra(), pt.k)) throw DomainError("phi_lambda: k is not in K");
  return pt.k * exp_H(data, pt.V);
}

OrbitPoint phi_lambda(const HyperbolicData& data, const CotangentPoint& pt) {
  return orbit_point(data.algebra(), phi_group(data, pt), data.c);
}

BaseCoset project_pi(const HyperbolicData& data, const OrbitPoint& pt) {
  return {kp_decompose(data.algebra(), pt.g, data.filtration()).k};
}

double coset_residual(const HyperbolicData& data, const Mat& k1, const Mat& k2) {
  const Mat m = k1.transpose() * k2;
  if (!in_K(data.algebra(), m)) return std::numeric_limits<double>::infinity();
  return (data.algebra().Ad(m, m.transpose(), data.c) - data.c).norm();
}

double tautological_form(const HyperbolicData& data, const CotangentPoint& pt, const CotangentTangent& W) {
  return -data.algebra().killing(data.n_element(pt.V), W.Y);
}

double liouville_eval(const HyperbolicData& data, const CotangentPoint& pt, const CotangentTangent& W1,
                      const CotangentTangent& W2) {
  const MatrixLieAlgebra& alg = data.algebra();
  auto eta = [&](const Vec& v, const Vec& y) { return -alg.killing(data.n_element(v), y); };
  return eta(W1.delta, W2.Y) - eta(W2.delta, W1.Y) - eta(pt.V, alg.bracket(W1.Y, W2.Y));
}

namespace {

double liouville_fd_at(const HyperbolicData& data, const CotangentPoint& pt, const CotangentTangent& W1,
                       const CotangentTangent& W2, double h) {
  const MatrixLieAlgebra& alg = data.algebra();
  const Mat y1 = alg.to_matrix(W1.Y);
  const Mat y2 = alg.to_matrix(W2.Y);
  auto point = [&](double s, double t) {
    return CotangentPoint{pt.k * expm(s * y1) * expm(t * y2), pt.V + s * W1.delta + t * W2.delta};
  };
  // Left-trivialized velocities: d/dt -> Y2, d/ds -> Ad(e^{-t Y2}) Y1.
  auto theta_t = [&](double s) { return tautological_form(data, point(s, 0.0), {W2.Y, W2.delta}); };
  auto theta_s = [&](double t) {
    const Vec ys = alg.coords(expm(-t * y2) * y1 * expm(t * y2));
    return tautological_form(data, point(0.0, t), {ys, W1.delta});
  };
  const double ds_theta_t = (theta_t(h) - theta_t(-h)) / (2 * h);
  const double dt_theta_s = (theta_s(h) - theta_s(-h)) / (2 * h);
  return ds_theta_t - dt_theta_s;
}

}  // namespace

FdEstimate liouville_fd(const HyperbolicData& data, const CotangentPoint& pt, const CotangentTangent& W1,
                        const CotangentTangent& W2, double h) {
  FdEstimate e;
  e.value = liouville_fd_at(data, pt, W1, W2, h);
  e.richardson = std::abs(e.value - liouville_fd_at(data, pt, W1, W2, 2 * h));
  return e;
}

std::vector<CotangentTangent> cotangent_frame(const HyperbolicData& data) {
  std::vector<CotangentTangent> frame;
  const int dn = data.dim_n();
  const Vec zero = Vec::Zero(dn);
  for (int j = 0; j < dn; ++j) {
    const Vec v = data.n_basis.col(j);
    frame.push_back({v + data.algebra().theta(v), zero});
  }
  for (int j = 0; j < dn; ++j) frame.push_back({Vec::Zero(data.algebra().dim()), Vec::Unit(dn, j)});
  return frame;
}

namespace {

// g^{-1} g'(0) for g(t) = k exp(tY) exp_H(V + t delta), central differences.
Vec group_velocity(const HyperbolicData& data, const CotangentPoint& pt, const CotangentTangent& W, const Mat& g_inv,
                   double h) {
  const MatrixLieAlgebra& alg = data.algebra();
  const Mat y = alg.to_matrix(W.Y);
  auto g = [&](double t) { return Mat(pt.k * expm(t * y) * exp_H(data, pt.V + t * W.delta)); };
  const Mat dg = (g(h) - g(-h)) / (2 * h);
  return alg.coords(g_inv * dg, 1e-6);
}

Mat gram(const HyperbolicData& data, const CotangentPoint& pt, const std::vector<CotangentTangent>& frame,
         const PullbackOptions& opts, double h) {
  const MatrixLieAlgebra& alg = data.algebra();
  const Mat g = phi_group(data, pt);
  const Mat g_inv = g.inverse();
  const Vec base = opts.orbit_base ? *opts.orbit_base : data.c;
  const Vec w = alg.Ad(g, g_inv, base);
  std::vector<Vec> reps;
  for (const auto& W : frame) reps.push_back(alg.Ad(g, g_inv, group_velocity(data, pt, W, g_inv, h)));
  const auto m = static_cast<Eigen::Index>(frame.size());
  Mat out(m, m);
  for (Eigen::Index a = 0; a < m; ++a)
    for (Eigen::Index b = 0; b < m; ++b) out(a, b) = eval_form(opts.form, alg, w, reps[a], reps[b]);
  return out;
}

}  // namespace

PullbackReport pullback(const HyperbolicData& data, const CotangentPoint& pt, const PullbackOptions& opts) {
  const auto frame = cotangent_frame(data);
  const auto m = static_cast<Eigen::Index>(frame.size());
  PullbackReport r;
  r.pullback = gram(data, pt, frame, opts, opts.step);
  r.liouville.resize(m, m);
  for (Eigen::Index a = 0; a < m; ++a)
    for (Eigen::Index b = 0; b < m; ++b) r.liouville(a, b) = kPullbackSign * liouville_eval(data, pt, frame[a], frame[b]);
  r.residual = (r.pullback - r.liouville).cwiseAbs().maxCoeff();
  r.richardson = (r.pullback - gram(data, pt, frame, opts, 2 * opts.step)).cwiseAbs().maxCoeff();
  const double ss = r.liouville.squaredNorm();
  r.scale_ratio = ss > 0 ? r.pullback.cwiseProduct(r.liouville).sum() / ss : 0.0;
  return r;
}

double pullback_residual(const HyperbolicData& data, const CotangentPoint& pt) { return pullback(data, pt).residual; }

Mat random_K(const MatrixLieAlgebra& alg, const CartanSplit& split, Rng& rng, double spread) {
  const Vec y = split.k_basis * random_vec(rng, split.k_basis.cols());
  return expm(spread * alg.to_matrix(y));
}

Mat random_Z_K(const HyperbolicData& data, Rng& rng) {
  const MatrixLieAlgebra& alg = data.algebra();
  const Mat to_k = 0.5 * (Mat::Identity(alg.dim(), alg.dim()) + alg.theta_matrix());
  const Mat kz = rref_basis(to_k * data.z_basis);
  Mat m = Mat::Identity(alg.mat_size(), alg.mat_size());
  if (kz.cols() > 0) m = expm(alg.to_matrix(kz * random_vec(rng, kz.cols())));
  // Diagonal signs with an even number of -1 commute with diagonal c.
  const int n = alg.n();
  std::vector<double> signs(static_cast<std::size_t>(n), 1.0);
  for (int i = 0; i + 1 < n; i += 2)
    if (rng() & 1u) signs[i] = signs[i + 1] = -1.0;
  Mat d = Mat::Identity(alg.mat_size(), alg.mat_size());
  for (int i = 0; i < alg.mat_size(); ++i) d(i, i) = signs[static_cast<std::size_t>(i % n)];
  return m * d;
}

CotangentPoint random_cotangent_point(const HyperbolicData& data, Rng& rng) {
  CotangentPoint pt;
  pt.k = random_K(data.algebra(), data.structure->split, rng);
  pt.V = random_vec(rng, data.dim_n());
  return pt;
}

double section_lagrangian_check(const HyperbolicData& data, Rng& rng, int samples) {
  const MatrixLieAlgebra& alg = data.algebra();
  const Mat& kb = data.structure->split.k_basis;
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    const Mat k = s == 0 ? Mat(Mat::Identity(alg.mat_size(), alg.mat_size())) : random_K(alg, data.structure->split, rng);
    const OrbitPoint pt = phi_lambda(data, {k, Vec::Zero(data.dim_n())});
    const Mat kt = k.transpose();
    std::vector<Vec> reps;
    for (Eigen::Index c = 0; c < kb.cols(); ++c) reps.push_back(alg.Ad(k, kt, kb.col(c)));
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = i + 1; j < reps.size(); ++j)
        worst = std::max(worst, std::abs(kk_eval(alg, pt.w, reps[i], reps[j])));
  }
  return worst;
}

}  // namespace lieorb
