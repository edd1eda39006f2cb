#pragma once

// Variational reexpansion of the perturbation series.
//
// With the trial frequency Omega the series is reorganized in
//   lambda = (g/4) / Omega^3,   omega_hat^2 = omega^2 / Omega^2,
// and the truncated energy reads
//   W_N = Omega * sum_{j<=N} e_j lambda^j sum_{k<=N-j} C((1-3j)/2, k) (omega_hat^2 - 1)^k,
// which is Omega * sum_l e_l(lambda, omega_hat^2) lambda^l with
//   e_l = sum_j e_j C((1-3j)/2, l-j) rho^(l-j),   rho = (omega_hat^2 - 1) / lambda.

#include <vector>

#include "vpt/benderwu.hpp"
#include "vpt/numerics.hpp"
#include "vpt/schedule.hpp"

namespace vpt {

struct ReducedPoint {
  Real lambda;
  Real omega_hat_sq;

  /// (omega_hat^2 - 1) / lambda.
  Real rho() const;
};

struct PhysicalPoint {
  Real g;
  Real omega;
  Real trial_omega;

  /// Throws DomainError unless g > 0, omega >= 0 and trial_omega > 0.
  void validate() const;
  /// r = (2/g)(omega^2 - Omega^2), recomputed on demand.
  Real r() const;
  ReducedPoint reduced() const;
};

struct VariationalEnergy {
  int order = 0;
  Real trial_omega;
  Real value;
};

/// e_j and C((1-3j)/2, k) for j + k <= order, converted once to Real.
class ReexpansionTables {
 public:
  ReexpansionTables(const BWSeries& bw, int order, int digits);

  int order() const { return order_; }
  int digits() const { return digits_; }
  const Real& coefficient(int j) const { return coefficients_[static_cast<std::size_t>(j)]; }
  /// Requires j + k <= order().
  const Real& binomial(int j, int k) const {
    return binomials_[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
  }

 private:
  int order_;
  int digits_;
  std::vector<Real> coefficients_;
  std::vector<std::vector<Real>> binomials_;
};

Real reexpansion_coefficient(const BWSeries& bw, int l, const ReducedPoint& point);
ExactRational reexpansion_coefficient(const BWSeries& bw, int l, const ExactRational& rho);

VariationalEnergy variational_energy(const ReexpansionTables& tables, const Real& g, const Real& omega,
                                     const Real& trial_omega, int order);
VariationalEnergy variational_energy(const BWSeries& bw, const Real& g, const Real& omega,
                                     const Real& trial_omega, int order);

/// W_N in exact arithmetic; omega enters only through omega^2.
ExactRational variational_energy_exact(const BWSeries& bw, const ExactRational& g, const ExactRational& omega_sq,
                                       const ExactRational& trial_omega, int order);

/// W_N and its first two derivatives with respect to Omega.
struct EnergyJet {
  Real value;
  Real d1;
  Real d2;
};

EnergyJet variational_energy_jet(const ReexpansionTables& tables, const Real& g, const Real& omega,
                                 const Real& trial_omega, int order);

enum class OptimumKind { kStationary, kTurningPoint };

struct OptimalFrequency {
  Real trial_omega;
  Real energy;
  OptimumKind kind = OptimumKind::kStationary;
};

/// Omega_N where W_N depends least on Omega: the stationary point of
/// dW/dOmega closest to the schedule value, otherwise the turning point
/// (zero of d^2W/dOmega^2) closest to it. Throws DomainError when neither
/// exists inside the scanned bracket.
OptimalFrequency optimal_frequency(const ReexpansionTables& tables, const Real& g, const Real& omega, int order,
                                   const FrequencySchedule& schedule);
OptimalFrequency optimal_frequency(const BWSeries& bw, const Real& g, const Real& omega, int order,
                                   const PrecisionContext& context);

/// omega * sum_{l<=N} e_l ((g/4)/omega^3)^l; requires omega > 0.
Real raw_partial_sum(const BWSeries& bw, const Real& g, const Real& omega, int order);

/// round(3 omega^3 / (4 g)), at least 0.
int optimal_truncation_order(const Real& g, const Real& omega);

}  // namespace vpt
