#pragma once

#include "vpt/numerics.hpp"

namespace vpt {

/// Order dependence of the optimal trial frequency at strong coupling:
/// Omega_N^3 = g c N (1 + correction / N^(2/3)).
struct FrequencySchedule {
  static constexpr const char* kDefaultC = "0.186047272987397512984554740462";
  static constexpr const char* kDefaultCorrection = "6.85";

  Real c;
  Real correction;

  /// The literal constants at the given precision.
  static FrequencySchedule standard(int digits);
};

/// lambda_N = (g/4) / Omega_N^3 = 1 / (4 c N (1 + correction N^(-2/3))).
Real schedule_lambda(int order, const FrequencySchedule& schedule);

/// Omega_N = (g c N (1 + correction N^(-2/3)))^(1/3).
Real schedule_frequency(const Real& g, int order, const FrequencySchedule& schedule);

}  // namespace vpt
