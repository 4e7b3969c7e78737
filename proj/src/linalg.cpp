#include "lieorb/linalg.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>

#include "lieorb/errors.hpp"
#include "lieorb/kernels.hpp"
#include "lieorb/tolerances.hpp"

namespace lieorb {

Mat matmul(const Mat& a, const Mat& b) {
  Mat c(a.rows(), b.cols());
  kernels::gemm(a.rows(), a.cols(), b.cols(), a.data(), b.data(), c.data());
  return c;
}

Vec matvec(const Mat& a, const Vec& x) {
  Vec y(a.rows());
  kernels::gemv(a.rows(), a.cols(), a.data(), x.data(), y.data());
  return y;
}

Mat commutator(const Mat& a, const Mat& b) {
  Mat c(a.rows(), a.cols());
  kernels::commutator(a.rows(), a.data(), b.data(), c.data());
  return c;
}

double trace_product(const Mat& a, const Mat& b) {
  std::vector<double> scratch(a.size());
  return kernels::trace_product(a.rows(), a.data(), b.data(), scratch.data());
}

Mat rref_basis(const Mat& cols, double tol) {
  Mat r = cols.transpose();
  const double scale = std::max(1.0, r.cwiseAbs().maxCoeff());
  const double eps = tol * scale;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < r.cols() && row < r.rows(); ++col) {
    Eigen::Index piv = row;
    double best = std::abs(r(row, col));
    for (Eigen::Index i = row + 1; i < r.rows(); ++i) {
      if (std::abs(r(i, col)) > best) {
        best = std::abs(r(i, col));
        piv = i;
      }
    }
    if (best <= eps) continue;
    r.row(row).swap(r.row(piv));
    r.row(row) /= r(row, col);
    for (Eigen::Index i = 0; i < r.rows(); ++i) {
      if (i != row && r(i, col) != 0.0) r.row(i) -= r(i, col) * r.row(row);
    }
    ++row;
  }
  Mat out = r.topRows(row).transpose();
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    double& v = out.data()[i];
    if (std::abs(v) < eps) v = 0.0;
    const double rv = std::round(v);
    if (std::abs(v - rv) < eps) v = rv;
  }
  return out;
}

Mat orthonormal_basis(const Mat& cols, double tol) {
  if (cols.cols() == 0) return Mat(cols.rows(), 0);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(cols, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  const double smax = s.size() ? s(0) : 0.0;
  Eigen::Index r = 0;
  while (r < s.size() && s(r) > tol * std::max(1.0, smax)) ++r;
  return svd.matrixU().leftCols(r);
}

namespace {

Eigen::Index gray_checked_rank(const Eigen::VectorXd& s) {
  const double smax = s.size() ? s(0) : 0.0;
  if (smax == 0.0) return 0;
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    const double rel = s(i) / smax;
    if (rel > kRankGrayHigh) {
      ++r;
    } else if (rel > kRankGrayLow) {
      throw DegeneracyError("rank test inconclusive: relative singular value " + std::to_string(rel));
    }
  }
  return r;
}

}  // namespace

Mat null_space(const Mat& m) {
  if (m.rows() == 0) return Mat::Identity(m.cols(), m.cols());
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const Eigen::Index r = gray_checked_rank(svd.singularValues());
  return svd.matrixV().rightCols(m.cols() - r);
}

int numerical_rank(const Mat& m) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  return static_cast<int>(gray_checked_rank(svd.singularValues()));
}

double subspace_distance(const Mat& a, const Mat& b) {
  const Mat qa = orthonormal_basis(a);
  const Mat qb = orthonormal_basis(b);
  if (qa.cols() != qb.cols()) return 1.0;
  if (qa.cols() == 0) return 0.0;
  const Eigen::MatrixXd d = qa * qa.transpose() - qb * qb.transpose();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(d);
  return svd.singularValues()(0);
}

double outside_residual(const Mat& q, const Vec& x) {
  if (q.cols() == 0) return x.norm();
  return (x - q * (q.transpose() * x)).norm();
}

Mat expm(const Mat& m) {
  const Eigen::MatrixXd cm = m;
  return Mat(cm.exp());
}

Mat exp_nilpotent(const Mat& m) {
  const Eigen::Index d = m.rows();
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  Mat sum = Mat::Identity(d, d);
  Mat term = Mat::Identity(d, d);
  for (Eigen::Index k = 1; k <= d; ++k) {
    term = matmul(term, m) / static_cast<double>(k);
    if (k == d) {
      if (term.cwiseAbs().maxCoeff() > 1e-12 * std::pow(scale, static_cast<double>(d)))
        throw DomainError("exp_nilpotent: matrix is not nilpotent");
      break;
    }
    sum += term;
  }
  return sum;
}

Mat log_unipotent(const Mat& u) {
  const Eigen::Index d = u.rows();
  const Mat n = u - Mat::Identity(d, d);
  const double scale = std::max(1.0, n.cwiseAbs().maxCoeff());
  Mat sum = Mat::Zero(d, d);
  Mat power = Mat::Identity(d, d);
  for (Eigen::Index k = 1; k <= d; ++k) {
    power = matmul(power, n);
    if (k == d) {
      if (power.cwiseAbs().maxCoeff() > 1e-10 * std::pow(scale, static_cast<double>(d)))
        throw DomainError("log_unipotent: matrix is not unipotent");
      break;
    }
    sum += ((k % 2 == 1) ? 1.0 : -1.0) / static_cast<double>(k) * power;
  }
  return sum;
}

}  // namespace lieorb
