#pragma once

#include <memory>
#include <string>
#include <vector>

#include "lieorb/linalg.hpp"

namespace lieorb {

enum class Family { sl };
enum class Field { real, complex_realified };

struct AlgebraSpec {
  Family family = Family::sl;
  int n = 2;
  Field field = Field::real;
};

std::string describe(const AlgebraSpec& spec);

// Elements are coordinate vectors on a fixed basis of d x d real matrices.
//
// sl(n,R), d = n:
//   H_k = E_kk - E_{k+1,k+1} (k = 0..n-2), then E_ij for i < j in
//   lexicographic (i, j) order, then E_ji in the same (i, j) order.
// sl(n,C) realified, d = 2n, Z = A + iB embedded as [[A, -B], [B, A]]:
//   each element b of the sl(n,R) list followed by i*b.
//
// theta(X) = -X^T in both cases; on the embedding this is Z -> -conj(Z)^T.
class MatrixLieAlgebra {
 public:
  explicit MatrixLieAlgebra(const AlgebraSpec& spec);

  const AlgebraSpec& spec() const { return spec_; }
  int n() const { return spec_.n; }
  bool realified() const { return spec_.field == Field::complex_realified; }
  int dim() const { return static_cast<int>(basis_.size()); }
  int mat_size() const { return d_; }

  const std::vector<Mat>& basis() const { return basis_; }
  const std::vector<std::string>& labels() const { return labels_; }

  Mat to_matrix(const Vec& x) const;
  // Throws DomainError if `m` is not in the algebra to 1e-9 (relative).
  Vec coords(const Mat& m) const;
  // Same read-off with a caller-chosen relative residual bound.
  Vec coords(const Mat& m, double tol) const;

  Vec bracket(const Vec& x, const Vec& y) const;
  double killing(const Vec& x, const Vec& y) const;
  double inner(const Vec& x, const Vec& y) const;
  Vec theta(const Vec& x) const { return theta_ * x; }
  // Multiplication by i; realified algebras only.
  Vec J(const Vec& x) const;

  // ad(b_i); column j holds coords([b_i, b_j]), so c^k_ij = ad(i)(k, j).
  const Mat& ad(int i) const { return ad_[static_cast<std::size_t>(i)]; }
  const std::vector<Mat>& structure_constants() const { return ad_; }
  Mat ad_of(const Vec& x) const;

  const Mat& killing_matrix() const { return killing_; }
  const Mat& theta_matrix() const { return theta_; }
  const Mat& inner_matrix() const { return inner_; }
  const Mat& j_matrix() const { return j_; }

  // Real traceless diagonal element diag(h) (entries must sum to zero).
  Vec diag_element(const std::vector<double>& h) const;
  // Complex diagonal element of a realified algebra.
  Vec complex_diag_element(const std::vector<cplx>& h) const;
  // Real parts of the diagonal (the first n diagonal entries of the matrix).
  std::vector<double> real_diagonal(const Vec& x) const;

  // Ad(g) x = coords(g X g^{-1}).
  Vec Ad(const Mat& g, const Vec& x) const;
  Vec Ad(const Mat& g, const Mat& g_inv, const Vec& x) const;

 private:
  Vec coords_sl(const Mat& m, int offset_row, int offset_col, double* residual) const;

  AlgebraSpec spec_;
  int d_ = 0;
  std::vector<Mat> basis_;
  std::vector<std::string> labels_;
  std::vector<Mat> ad_;
  Mat killing_, theta_, inner_, j_;
};

// Complex trace-form oracle for realified algebras: builds complex ad
// matrices of sl(n,C) on its complex basis and returns tr(ad X ad Y).
class ComplexTraceForm {
 public:
  explicit ComplexTraceForm(int n);
  CMat ad(const CMat& x) const;
  cplx killing(const CMat& x, const CMat& y) const;
  CVec coords(const CMat& m) const;

 private:
  int n_;
  std::vector<CMat> basis_;
};

// n x n complex matrix A + iB of a realified element.
CMat complex_matrix(const MatrixLieAlgebra& alg, const Vec& x);
Mat realify(const CMat& z);

// Returns max over basis pairs of |B_R(X,Y) - 2 Re B_C(X,Y)|.
double killing_compare_realified(const MatrixLieAlgebra& alg);

struct CartanSplit {
  Mat k_basis;       // columns, algebra coordinates
  Mat p_basis;
  Mat inner_matrix;  // <X,Y> = -B(X, theta Y)
};

CartanSplit cartan_split(const MatrixLieAlgebra& alg);

struct StructureResiduals {
  double antisymmetry = 0, jacobi = 0;
  double killing_symmetry = 0, killing_invariance = 0, killing_min_abs_eig = 0;
  double theta_involution = 0, theta_killing = 0, theta_automorphism = 0;
  double bracket_kk = 0, bracket_kp = 0, bracket_pp = 0;
  double killing_k_max = 0, killing_p_min = 0;  // B|k < 0, B|p > 0
  double inner_min_eig = 0, ad_p_symmetry = 0;
  double dim_additivity = 0;
};

StructureResiduals structure_residuals(const MatrixLieAlgebra& alg, const CartanSplit& split);

enum class GroupTag { general, in_K, in_N, in_A };

struct GroupElement {
  Mat matrix;
  GroupTag tag = GroupTag::general;
};

// K = SO(n) or SU(n) (embedded). Orthogonality of the embedding is the
// unitary condition.
bool in_K(const MatrixLieAlgebra& alg, const Mat& g, double tol = 1e-9);
double group_det_residual(const MatrixLieAlgebra& alg, const Mat& g);

struct Iwasawa {
  Mat k, a, n;
  double residual = 0;
};

// g = k a n with k in K, a positive diagonal, n upper unitriangular.
Iwasawa iwasawa_decompose(const MatrixLieAlgebra& alg, const Mat& g);

// Subspace P of the algebra, held as orthonormal coordinate columns.
struct ParabolicFiltration {
  Mat p_orthonormal;
};

struct KPDecomposition {
  Mat k, p;
  double residual = 0;
  double filtration_residual = 0;
};

// g = k p with p = a n; p is checked to preserve the filtration.
KPDecomposition kp_decompose(const MatrixLieAlgebra& alg, const Mat& g, const ParabolicFiltration& filt);

}  // namespace lieorb
