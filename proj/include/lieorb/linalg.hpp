#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace lieorb {

using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vec = Eigen::VectorXd;
using cplx = std::complex<double>;
using CMat = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using CVec = Eigen::VectorXcd;

// Products routed through the dispatched kernels.
Mat matmul(const Mat& a, const Mat& b);
Vec matvec(const Mat& a, const Vec& x);
Mat commutator(const Mat& a, const Mat& b);
double trace_product(const Mat& a, const Mat& b);

// Columns spanning the column space of `cols`, as the transposed reduced row
// echelon form. Entries below `tol` (relative) are cleaned to zero.
Mat rref_basis(const Mat& cols, double tol = 1e-10);

// Orthonormal (Euclidean) basis of the column space.
Mat orthonormal_basis(const Mat& cols, double tol = 1e-10);

// Orthonormal basis of ker(m). Throws DegeneracyError if a relative singular
// value falls between kRankGrayLow and kRankGrayHigh.
Mat null_space(const Mat& m);

int numerical_rank(const Mat& m);

// Spectral norm of the difference of the orthogonal projectors; 1 if ranks differ.
double subspace_distance(const Mat& a, const Mat& b);

// Norm of the part of `x` outside the column span of orthonormal `q`.
double outside_residual(const Mat& q, const Vec& x);

Mat expm(const Mat& m);
// Finite series for nilpotent m; throws DomainError if m is not nilpotent.
Mat exp_nilpotent(const Mat& m);
// Finite series for unipotent u; throws DomainError otherwise.
Mat log_unipotent(const Mat& u);

// Lexicographic comparison of equally sized sequences.
template <class A>
bool lex_greater(const A& x, const A& y) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != y[i]) return x[i] > y[i];
  }
  return false;
}

}  // namespace lieorb
