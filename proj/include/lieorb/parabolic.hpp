#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "lieorb/rational.hpp"
#include "lieorb/rootspace.hpp"

namespace lieorb {

// c in the closed positive chamber together with the graded splitting
// g = nbar + z(c) + n(c) it induces.
struct HyperbolicData {
  std::shared_ptr<const Structure> structure;
  Vec c;
  std::vector<double> c_diag;
  std::optional<std::vector<Rational>> c_exact;
  Vec lambda;  // B(c, .) on the basis

  Mat z_basis, n_basis, nbar_basis;  // columns, algebra coordinates
  std::vector<double> eigenvalues;   // nu_1 < ... < nu_p
  std::vector<int> multiplicities;
  std::vector<int> grade_of;         // per n basis vector, index into eigenvalues
  Vec t_diag;                        // T_lambda = diag(t_diag) on n_basis
  int N0 = 1;
  int degree_bound = 1;              // floor(nu_p / nu_1)

  Mat adapted, adapted_inv;          // [nbar | z | n]
  std::vector<Mat> n_ad;             // n_ad[i].col(j) = n-coords of [V_i, V_j]
  Mat p_orthonormal;                 // z + n, orthonormal coordinates

  const MatrixLieAlgebra& algebra() const { return *structure->algebra; }
  int dim_n() const { return static_cast<int>(n_basis.cols()); }
  int dim_z() const { return static_cast<int>(z_basis.cols()); }
  int grades() const { return static_cast<int>(eigenvalues.size()); }

  Vec n_element(const Vec& u) const { return n_basis * u; }
  // n-coordinates of an algebra element; DomainError if it leaves n.
  Vec n_coords(const Vec& x, double tol = 1e-10) const;
  Mat n_matrix(const Vec& u) const;
  // Matrix of ad(U) restricted to n, in n-coordinates.
  Mat ad_n(const Vec& u) const;
  Vec bracket_n(const Vec& u, const Vec& v) const;
  ParabolicFiltration filtration() const { return {p_orthonormal}; }
};

HyperbolicData hyperbolic_data(std::shared_ptr<const Structure> s, const std::vector<Rational>& c);
HyperbolicData hyperbolic_data(std::shared_ptr<const Structure> s, const std::vector<double>& c);

int nilpotency_index(const HyperbolicData& data);
// Largest N with (ad U)^N != 0 on n over `samples` random U; at least 1.
int sampled_nilpotency(const HyperbolicData& data, int samples, std::uint64_t seed);

enum class GradeMode { single, at_most, above };

// pr_j, pr_{<=k}, pr_{>k} on the ordered basis V_0..V_{n-1} (0-based).
Mat grade_projector(const HyperbolicData& data, GradeMode mode, int index);
Vec grade_projection(const HyperbolicData& data, const Vec& x, GradeMode mode, int index);

struct ParabolicResiduals {
  double eigen = 0;            // [c, V_j] - nu V_j
  double grading = 0;          // [n(nu_i), n(nu_j)] inside n(nu_i + nu_j)
  double killing_n_p = 0;      // B on n x P
  double zk_invariance = 0;    // Ad(Z_K) preserves every n(nu_j)
  double projector = 0;        // sum pr_j = I, pr_i pr_j = delta pr_i
  int half_dimension = 0;      // 2 dim n - (dim g - dim z)
  int additivity = 0;          // dim nbar + dim z + dim n - dim g
};

ParabolicResiduals parabolic_residuals(const HyperbolicData& data, std::uint64_t seed);

// Sorts diagonal entries so that the element lies in the closed chamber.
std::vector<Rational> sort_into_chamber(std::vector<Rational> c);
std::vector<double> sort_into_chamber(std::vector<double> c);

}  // namespace lieorb
