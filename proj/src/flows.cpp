#include "lieorb/flows.hpp"

#include <algorithm>
#include <cmath>

#include "lieorb/errors.hpp"
#include "lieorb/tolerances.hpp"

namespace lieorb {

namespace {

using Poly = std::vector<Vec>;  // coefficient m multiplies t^m

Poly zero_poly(int dn, int degree) { return Poly(static_cast<std::size_t>(degree + 1), Vec::Zero(dn)); }

// [A(t), X(t)] truncated at the length of X.
Poly ad_poly(const HyperbolicData& data, const std::vector<Mat>& ad_a, const Poly& x) {
  Poly r = zero_poly(data.dim_n(), static_cast<int>(x.size()) - 1);
  for (std::size_t a = 0; a < ad_a.size(); ++a)
    for (std::size_t b = 0; a + b < x.size(); ++b) r[a + b] += ad_a[a] * x[b];
  return r;
}

void axpy(Poly& y, double alpha, const Poly& x) {
  for (std::size_t m = 0; m < y.size(); ++m) y[m] += alpha * x[m];
}

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// h_V(U(t)) for polynomial U, truncated at degree u.size() - 1.
Poly hv_poly(const HyperbolicData& data, const Vec& V, const Poly& u) {
  const int N0 = data.N0;
  const int deg = static_cast<int>(u.size()) - 1;
  std::vector<Mat> ad_u;
  for (const auto& c : u) ad_u.push_back(data.ad_n(c));

  // e^{-ad U} V
  Poly term = zero_poly(data.dim_n(), deg);
  term[0] = V;
  Poly e = term;
  for (int m = 1; m <= N0; ++m) {
    term = ad_poly(data, ad_u, term);
    axpy(e, (m % 2 ? -1.0 : 1.0) / factorial(m), term);
  }
  // T^{-1}
  for (auto& c : e) c = c.cwiseQuotient(data.t_diag);

  // R(ad U) X = sum_{q=1}^{N0} (-ad U)^q X / (q+1)!
  auto apply_r = [&](const Poly& x) {
    Poly out = zero_poly(data.dim_n(), deg);
    Poly p = x;
    for (int q = 1; q <= N0; ++q) {
      p = ad_poly(data, ad_u, p);
      axpy(out, (q % 2 ? -1.0 : 1.0) / factorial(q + 1), p);
    }
    return out;
  };
  // Neumann series; R(ad U) is nilpotent of order <= N0.
  Poly result = e;
  Poly r = e;
  for (int m = 1; m <= N0; ++m) {
    r = apply_r(r);
    axpy(result, m % 2 ? -1.0 : 1.0, r);
  }
  return result;
}

}  // namespace

Vec FlowPolynomial::eval(double t) const {
  Vec v = Vec::Zero(coeffs.front().size());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * t + *it;
  return v;
}

int FlowPolynomial::degree(double tol) const {
  int d = 0;
  for (std::size_t m = 0; m < coeffs.size(); ++m)
    if (coeffs[m].cwiseAbs().maxCoeff() > tol) d = static_cast<int>(m);
  return d;
}

Vec hv_field(const HyperbolicData& data, const Vec& V, const Vec& U) {
  if (V.size() != data.dim_n() || U.size() != data.dim_n()) throw DomainError("hv_field: dimension mismatch");
  return hv_poly(data, V, Poly{U})[0];
}

double hv_oracle_residual(const HyperbolicData& data, const Vec& V, const Vec& U) {
  const int d = data.algebra().mat_size();
  const Mat u = data.n_matrix(U);
  const Mat h = data.n_matrix(hv_field(data, V, U));
  Mat block = Mat::Zero(2 * d, 2 * d);
  block.topLeftCorner(d, d) = u;
  block.bottomRightCorner(d, d) = u;
  block.topRightCorner(d, d) = h;
  const Mat big = expm(block);
  const Mat lhs = big.topRightCorner(d, d);
  // exp(U) T^{-1}(exp(-U) V exp(U))
  const Mat n = big.topLeftCorner(d, d);
  const Mat n_inv = n.inverse();
  const Mat v = data.n_matrix(V);
  const Vec ad_inv = data.n_coords(data.algebra().coords(n_inv * v * n));
  const Mat rhs = n * data.n_matrix(ad_inv.cwiseQuotient(data.t_diag));
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

FlowPolynomial flow_exact(const HyperbolicData& data, const Vec& V, const Vec& U0) {
  const int dn = data.dim_n();
  if (V.size() != dn || U0.size() != dn) throw DomainError("flow_exact: dimension mismatch");
  const int D = data.degree_bound;
  const int work = D + 2;
  Poly u = zero_poly(dn, work);
  u[0] = U0;
  // Grade k of h_V(U) only sees grades < k of U, so each group is a quadrature.
  for (int g = 0; g < data.grades(); ++g) {
    const Poly h = hv_poly(data, V, u);
    for (int j = 0; j < dn; ++j) {
      if (data.grade_of[j] != g) continue;
      for (int m = 0; m < work; ++m) u[m + 1](j) = h[m](j) / static_cast<double>(m + 1);
    }
  }
  FlowPolynomial f;
  f.coeffs = u;
  f.degree_bound = D;
  for (int m = D + 1; m <= work; ++m) f.tail = std::max(f.tail, u[m].cwiseAbs().maxCoeff());
  const Poly h = hv_poly(data, V, u);
  for (int m = 0; m < work; ++m)
    f.ode_residual = std::max(f.ode_residual, (static_cast<double>(m + 1) * u[m + 1] - h[m]).cwiseAbs().maxCoeff());
  return f;
}

namespace {

Vec rk4(const HyperbolicData& data, const Vec& V, const Vec& U0, double t, int steps) {
  const double h = t / steps;
  Vec u = U0;
  for (int s = 0; s < steps; ++s) {
    const Vec k1 = hv_field(data, V, u);
    const Vec k2 = hv_field(data, V, u + 0.5 * h * k1);
    const Vec k3 = hv_field(data, V, u + 0.5 * h * k2);
    const Vec k4 = hv_field(data, V, u + h * k3);
    u += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return u;
}

}  // namespace

NumericFlow flow_numeric(const HyperbolicData& data, const Vec& V, const Vec& U0, double t, double step) {
  NumericFlow out;
  if (t == 0.0) {
    out.value = U0;
    return out;
  }
  if (!(step > 1e-12)) throw DomainError("flow_numeric: step underflow");
  int steps = static_cast<int>(std::ceil(std::abs(t) / step));
  steps += steps % 2;
  out.value = rk4(data, V, U0, t, steps);
  const Vec coarse = rk4(data, V, U0, t, steps / 2);
  out.error_estimate = (out.value - coarse).norm() / 15.0;
  return out;
}

double commute_residual(const HyperbolicData& data, const Vec& V, const Vec& W) {
  const Vec zero = Vec::Zero(data.dim_n());
  const Vec vw = flow_exact(data, V, flow_exact(data, W, zero).eval(1.0)).eval(1.0);
  const Vec wv = flow_exact(data, W, flow_exact(data, V, zero).eval(1.0)).eval(1.0);
  return (vw - wv).norm();
}

Mat exp_H(const HyperbolicData& data, const Vec& V) {
  const Vec u1 = flow_exact(data, V, Vec::Zero(data.dim_n())).eval(1.0);
  return exp_nilpotent(data.n_matrix(u1));
}

Vec invert_exp_H(const HyperbolicData& data, const Mat& n, int* iterations) {
  const Mat log_n = log_unipotent(n);
  const Vec target = data.n_coords(data.algebra().coords(log_n), 1e-9);
  Vec V = target;
  const Vec zero = Vec::Zero(data.dim_n());
  const double scale = std::max(1.0, target.norm());
  for (int it = 0; it < 50; ++it) {
    const Vec r = target - flow_exact(data, V, zero).eval(1.0);
    // Exact after one pass per grade; past that only roundoff remains.
    const bool settled = it > data.grades() && r.norm() <= 1e-11 * scale;
    if (r.norm() <= 1e-14 * scale || settled) {
      if (iterations) *iterations = it;
      return V;
    }
    V += r.cwiseProduct(data.t_diag);
  }
  throw InconsistencyError("invert_exp_H: no convergence in 50 iterations");
}

}  // namespace lieorb
