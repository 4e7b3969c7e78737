#pragma once

#include <optional>
#include <vector>

#include "lieorb/flows.hpp"
#include "lieorb/kkform.hpp"
#include "lieorb/random.hpp"
#include "lieorb/tolerances.hpp"

namespace lieorb {

// Point [(k, eta_V)] of K x_{Z_K} (g/P)^*, with eta_V = -B(V, .) and V in n.
struct CotangentPoint {
  Mat k;
  Vec V;  // n-coordinates
};

// Curve t -> (k exp(tY), V + t delta).
struct CotangentTangent {
  Vec Y;      // algebra coordinates, in k
  Vec delta;  // n-coordinates
};

struct BaseCoset {
  Mat k;
};

// Frozen convention: phi^* Omega = kPullbackSign * d(theta), i.e. the
// Liouville form is -d(theta) = sum dq ^ dp.
inline constexpr double kPullbackSign = -1.0;

Mat phi_group(const HyperbolicData& data, const CotangentPoint& pt);
OrbitPoint phi_lambda(const HyperbolicData& data, const CotangentPoint& pt);

BaseCoset project_pi(const HyperbolicData& data, const OrbitPoint& pt);
// ||Ad(k1^{-1} k2) c - c||; +inf if k1^{-1} k2 is not in K.
double coset_residual(const HyperbolicData& data, const Mat& k1, const Mat& k2);

double tautological_form(const HyperbolicData& data, const CotangentPoint& pt, const CotangentTangent& W);

// delta_eta1(Y2) - delta_eta2(Y1) - eta([Y1, Y2]).
double liouville_eval(const HyperbolicData& data, const CotangentPoint& pt, const CotangentTangent& W1,
                      const CotangentTangent& W2);

struct FdEstimate {
  double value = 0;
  double richardson = 0;  // |D_h - D_2h|
};

// Exterior derivative of the tautological form on the surface
// (s, t) -> (k e^{sY1} e^{tY2}, V + s delta1 + t delta2), by central differences.
FdEstimate liouville_fd(const HyperbolicData& data, const CotangentPoint& pt, const CotangentTangent& W1,
                        const CotangentTangent& W2, double h = kFdStep);

// Horizontal directions Y_j = V_j + theta V_j, then vertical delta = V_j.
std::vector<CotangentTangent> cotangent_frame(const HyperbolicData& data);

struct PullbackOptions {
  FormKind form = FormKind::omega;
  std::optional<Vec> orbit_base;  // element whose orbit carries the form; default c
  double step = kFdStep;
};

struct PullbackReport {
  double residual = 0;     // max |phi^* form - sign * liouville|
  double richardson = 0;   // max change of the pulled-back Gram between h and 2h
  double scale_ratio = 0;  // least-squares ratio phi^* form / (sign * liouville)
  Mat pullback, liouville;
};

PullbackReport pullback(const HyperbolicData& data, const CotangentPoint& pt, const PullbackOptions& opts = {});
double pullback_residual(const HyperbolicData& data, const CotangentPoint& pt);

double section_lagrangian_check(const HyperbolicData& data, Rng& rng, int samples = 10);

Mat random_K(const MatrixLieAlgebra& alg, const CartanSplit& split, Rng& rng, double spread = 1.0);
// exp of a random element of k cap z(c) times a random det-one diagonal sign matrix.
Mat random_Z_K(const HyperbolicData& data, Rng& rng);
CotangentPoint random_cotangent_point(const HyperbolicData& data, Rng& rng);

}  // namespace lieorb
