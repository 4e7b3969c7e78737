#pragma once

#include <vector>

#include "lieorb/parabolic.hpp"
#include "lieorb/tolerances.hpp"

namespace lieorb {

// Polynomial curve in n-coordinates, U(t) = sum_m coeffs[m] t^m.
struct FlowPolynomial {
  std::vector<Vec> coeffs;
  int degree_bound = 0;
  double tail = 0;          // max |coeff| past degree_bound
  double ode_residual = 0;  // U' - h_V(U) as a polynomial identity

  Vec eval(double t) const;
  int degree(double tol = kPolyTailDefault) const;
  static constexpr double kPolyTailDefault = 1e-12;
};

// [I + R(ad U)]^{-1} T^{-1} e^{-ad U} V with every series cut at N0.
Vec hv_field(const HyperbolicData& data, const Vec& V, const Vec& U);

// d exp(U)[h_V(U)] - exp(U) T^{-1}(Ad(exp U)^{-1} V), evaluated through the
// block-matrix exponential of [[U, h], [0, U]] in the defining representation.
double hv_oracle_residual(const HyperbolicData& data, const Vec& V, const Vec& U);

FlowPolynomial flow_exact(const HyperbolicData& data, const Vec& V, const Vec& U0);

struct NumericFlow {
  Vec value;
  double error_estimate = 0;  // Richardson, against the doubled step
};

NumericFlow flow_numeric(const HyperbolicData& data, const Vec& V, const Vec& U0, double t, double step = 1e-3);

double commute_residual(const HyperbolicData& data, const Vec& V, const Vec& W);

Mat exp_H(const HyperbolicData& data, const Vec& V);
Vec invert_exp_H(const HyperbolicData& data, const Mat& n, int* iterations = nullptr);

}  // namespace lieorb
