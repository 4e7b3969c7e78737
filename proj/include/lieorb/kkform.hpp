#pragma once

#include "lieorb/parabolic.hpp"

namespace lieorb {

struct OrbitPoint {
  Mat g;
  Vec w;  // Ad(g) c
};

OrbitPoint orbit_point(const MatrixLieAlgebra& alg, const Mat& g, const Vec& c);

struct TangentRep {
  Vec X;
  Vec value;  // [X, w]
};

TangentRep tangent(const MatrixLieAlgebra& alg, const OrbitPoint& pt, const Vec& X);

// X with B(X, Y) = lambda(Y) for every basis Y.
Vec dual_element(const MatrixLieAlgebra& alg, const Vec& lambda);

// B(w, [X, Y]).
double kk_eval(const MatrixLieAlgebra& alg, const Vec& w, const Vec& X, const Vec& Y);
inline double kk_eval(const MatrixLieAlgebra& alg, const OrbitPoint& pt, const Vec& X, const Vec& Y) {
  return kk_eval(alg, pt.w, X, Y);
}

// Real and imaginary parts of the holomorphic form on a realified orbit:
// B_R(w,[X,Y])/2 and -B_R(w,[JX,Y])/2.
double re_omega(const MatrixLieAlgebra& alg, const Vec& w, const Vec& X, const Vec& Y);
double im_omega(const MatrixLieAlgebra& alg, const Vec& w, const Vec& X, const Vec& Y);

enum class FormKind { omega, re, im };
double eval_form(FormKind kind, const MatrixLieAlgebra& alg, const Vec& w, const Vec& X, const Vec& Y);

// Cyclic sum B(w,[[X,Y],Z]) + B(w,[[Y,Z],X]) + B(w,[[Z,X],Y]).
double closedness_check(const MatrixLieAlgebra& alg, const Vec& w, const Vec& X, const Vec& Y, const Vec& Z);

struct Nondegeneracy {
  double sigma_min = 0;
  double sigma_max = 0;
  int rank = 0;
  int expected_rank = 0;  // dim g - dim z(w)
  double normalized() const { return sigma_max > 0 ? sigma_min / sigma_max : 0.0; }
};

// Gram matrix of the form on a complement of z(w). With hyperbolic data the
// complement is Ad(g)(nbar + n); otherwise the <,>-orthocomplement of ker ad w.
Nondegeneracy nondegeneracy_check(const MatrixLieAlgebra& alg, const OrbitPoint& pt, const HyperbolicData& data);
Nondegeneracy nondegeneracy_check(const MatrixLieAlgebra& alg, const Vec& w, FormKind kind = FormKind::omega);

// max |B(w, [X, Y])| over X, Y in Ad(g) n(lambda), w = Ad(g) c.
double fiber_isotropy_check(const HyperbolicData& data);
double fiber_isotropy_check(const HyperbolicData& data, const Mat& g);

struct KLagrangian {
  double max_abs = 0;
  int dim_k_orbit = 0;   // dim K / Z_K(c)
  int half_orbit = 0;    // (dim g - dim z(c)) / 2
};

// Form at c evaluated on k x k. FormKind::omega needs a real form; re / im
// need a realified algebra.
KLagrangian k_orbit_lagrangian_check(const MatrixLieAlgebra& alg, const CartanSplit& split, const Vec& c,
                                     FormKind kind);

struct ExactnessVerdict {
  bool re_exact = false;
  bool im_exact = false;
  double spectrum_max_imag = 0;  // over eigenvalues of ad(c)
  double spectrum_max_real = 0;
  double re_k_residual = 0;      // max |Re Omega| on k x k
  double im_k_residual = 0;
};

// Spectral test cross-checked with the k-orbit restriction; a disagreement
// or a residual between the vanishing and witness thresholds throws
// InconsistencyError.
ExactnessVerdict exactness_verdict(const MatrixLieAlgebra& alg, const CartanSplit& split, const Vec& c);

// Eigenvalues of ad(x).
CVec ad_spectrum(const MatrixLieAlgebra& alg, const Vec& x);

// Distance between the spectrum of ad(diag(h)) and the multiset of
// differences h_i - h_j (with conjugates on a realified algebra), matched greedily.
double spectrum_gap(const MatrixLieAlgebra& alg, const std::vector<cplx>& h);

}  // namespace lieorb
