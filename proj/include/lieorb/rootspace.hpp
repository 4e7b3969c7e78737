#pragma once

#include <memory>
#include <vector>

#include "lieorb/liecore.hpp"
#include "lieorb/rational.hpp"

namespace lieorb {

struct RestrictedRoot {
  Vec functional;                // coordinates of alpha on a_basis
  Mat space_basis;               // columns spanning g_alpha (RREF-canonical)
  int multiplicity = 0;
  std::vector<Rational> diag;    // alpha(diag(h)) = sum_i diag[i] * h[i]
  Vec covector;                  // alpha(H) = covector . coords(H) for H in a

  double value(const Vec& h) const { return covector.dot(h); }
  Rational exact_value(const std::vector<Rational>& h) const;
};

struct RestrictedRootSystem {
  Mat a_basis;      // orthonormal for <,>
  std::vector<RestrictedRoot> roots;
  Mat zero_space;   // g_0 = m + a
  Mat m_basis;
  int dim_g = 0;
};

// Seeds with the p-parts of the Cartan-part basis elements and extends
// greedily inside the commutant until it is maximal.
Mat maximal_abelian(const MatrixLieAlgebra& alg, const CartanSplit& split);

RestrictedRootSystem restricted_roots(const MatrixLieAlgebra& alg, const Mat& a);

// Indices of the roots positive on h_reg, in root order.
std::vector<int> positive_system(const RestrictedRootSystem& rs, const Vec& h_reg);
Vec default_regular(const MatrixLieAlgebra& alg);

// Index of the root with the given diagonal coordinates, or -1.
int find_root(const RestrictedRootSystem& rs, const std::vector<Rational>& diag);

double k_from_roots_check(const MatrixLieAlgebra& alg, const RestrictedRootSystem& rs, const std::vector<int>& positive,
                          const CartanSplit& split);

struct RootResiduals {
  double eigen = 0;            // ||[H,X] - alpha(H) X||
  double theta_pairing = 0;
  double bracket_grading = 0;
  double g0_cap_p = 0;         // distance between g_0 cap p and a
  double abelian = 0;
  int dim_bookkeeping = 0;     // dim g - dim m - dim a - sum mult
  bool symmetric = true;       // Sigma = -Sigma
  bool positive_closed = true; // Pi closed under addition within Sigma
  bool partition = true;       // Sigma = Pi u -Pi
};

RootResiduals root_residuals(const MatrixLieAlgebra& alg, const CartanSplit& split, const RestrictedRootSystem& rs,
                             const std::vector<int>& positive);

struct Structure {
  std::shared_ptr<const MatrixLieAlgebra> algebra;
  CartanSplit split;
  RestrictedRootSystem roots;
  std::vector<int> positive;
};

std::shared_ptr<const Structure> build_structure(const AlgebraSpec& spec);

}  // namespace lieorb
