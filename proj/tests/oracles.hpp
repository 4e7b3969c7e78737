#pragma once
// Reference computations for the tests. Everything here works on raw
// matrices and closed-form identities, not on the library's structure
// constants.

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "lieorb/liecore.hpp"
#include "lieorb/parabolic.hpp"
#include "lieorb/random.hpp"

namespace oracle {

using lieorb::CMat;
using lieorb::cplx;
using lieorb::Mat;
using lieorb::MatrixLieAlgebra;
using lieorb::Vec;
using lieorb::HyperbolicData;

inline Mat comm(const Mat& a, const Mat& b) { return a * b - b * a; }
inline CMat comm(const CMat& a, const CMat& b) { return a * b - b * a; }

// n x n complex block of a realified 2n x 2n matrix.
inline CMat complex_block(const Mat& m, int n) {
  return m.topLeftCorner(n, n).cast<cplx>() + cplx(0, 1) * m.bottomLeftCorner(n, n).cast<cplx>();
}

// sl(n,C): B(X,Y) = 2n tr(XY).
inline cplx killing_c(const CMat& x, const CMat& y) { return 2.0 * static_cast<double>(x.rows()) * (x * y).trace(); }

// Real Killing form of the algebra from the trace identity: 2n tr(XY) on
// sl(n,R), 2 Re(2n tr(XY)) on the realification of sl(n,C).
inline double killing(const MatrixLieAlgebra& alg, const Vec& x, const Vec& y) {
  const int n = alg.n();
  const Mat a = alg.to_matrix(x), b = alg.to_matrix(y);
  if (!alg.realified()) return 2.0 * n * (a * b).trace();
  return 2.0 * killing_c(complex_block(a, n), complex_block(b, n)).real();
}

// Complex form B_C(w, [X, Y]) on a realified orbit.
inline cplx holo_form(const MatrixLieAlgebra& alg, const Vec& w, const Vec& x, const Vec& y) {
  const int n = alg.n();
  const CMat W = complex_block(alg.to_matrix(w), n);
  return killing_c(W, comm(complex_block(alg.to_matrix(x), n), complex_block(alg.to_matrix(y), n)));
}

// B(w, [X, Y]) through matrices.
inline double kk_form(const MatrixLieAlgebra& alg, const Vec& w, const Vec& x, const Vec& y) {
  const Mat br = comm(alg.to_matrix(x), alg.to_matrix(y));
  return killing(alg, w, alg.coords(br));
}

inline Mat random_group(const MatrixLieAlgebra& alg, lieorb::Rng& rng, double spread = 0.5) {
  return lieorb::expm(alg.to_matrix(spread * lieorb::random_vec(rng, alg.dim())));
}

inline Vec Ad(const MatrixLieAlgebra& alg, const Mat& g, const Vec& x) {
  return alg.coords(g * alg.to_matrix(x) * g.inverse());
}

// Match two multisets of complex numbers greedily; returns the worst distance
// or +inf on a size mismatch.
inline double multiset_gap(std::vector<cplx> a, std::vector<cplx> b) {
  if (a.size() != b.size()) return INFINITY;
  double worst = 0;
  for (const cplx& x : a) {
    auto it = std::min_element(b.begin(), b.end(), [&](cplx p, cplx q) { return std::abs(p - x) < std::abs(q - x); });
    worst = std::max(worst, std::abs(*it - x));
    b.erase(it);
  }
  return worst;
}

// Bernoulli numbers with B1 = +1/2: x / (1 - e^{-x}) = sum B_m x^m / m!.
inline double bernoulli_plus(int m) {
  static const double b[] = {1.0, 0.5, 1.0 / 6, 0.0, -1.0 / 30, 0.0, 1.0 / 42, 0.0, -1.0 / 30,
                             0.0, 5.0 / 66, 0.0, -691.0 / 2730};
  return m < 13 ? b[m] : 0.0;
}

// h_V(U) = (ad U / (1 - e^{-ad U})) T^{-1} e^{-ad U} V, with the Bernoulli
// series and matrix commutators.
inline Vec hv_bernoulli(const HyperbolicData& d, const Vec& V, const Vec& U) {
  const auto& alg = d.algebra();
  const Mat Um = d.n_matrix(U);
  Mat term = d.n_matrix(V), acc = term;
  for (int k = 1; k < 12; ++k) {
    term = -comm(Um, term) / k;
    acc += term;
  }
  Vec x = d.n_coords(alg.coords(acc));
  x = x.cwiseQuotient(d.t_diag);
  Mat p = d.n_matrix(x), out = Mat::Zero(p.rows(), p.cols());
  double fact = 1;
  for (int m = 0; m < 12; ++m) {
    if (m > 0) fact *= m;
    out += bernoulli_plus(m) / fact * p;
    p = comm(Um, p);
  }
  return d.n_coords(alg.coords(out));
}

}  // namespace oracle
