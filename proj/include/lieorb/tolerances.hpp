#pragma once

namespace lieorb {

struct Tolerances {
  double structural = 1e-10;
  double decomposition = 1e-9;
  double eigen = 1e-8;
  double finite_difference = 1e-6;
};

// Fixed thresholds that are not user knobs.
inline constexpr double kOracleGap = 1e-8;      // exact flow vs RK4
inline constexpr double kPolyTail = 1e-12;      // coefficients past the degree bound
inline constexpr double kNilpotent = 1e-12;     // (ad U)^m counted as zero
inline constexpr double kWitness = 1e-3;        // non-vanishing side of a restriction test
inline constexpr double kRankGrayLow = 1e-10;   // relative singular values below: zero
inline constexpr double kRankGrayHigh = 1e-6;   // relative singular values above: nonzero
inline constexpr double kFdStep = 1e-5;

}  // namespace lieorb
