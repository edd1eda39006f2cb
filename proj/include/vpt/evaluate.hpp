#pragma once

// Strong-coupling energy series and comparison against rigorous bounds.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vpt/numerics.hpp"
#include "vpt/strongcoupling.hpp"

namespace vpt {

struct EnergyEstimate {
  Real g_over_4;
  Real omega;
  int n_max = 0;
  Real value;
};

struct BoundsRecord {
  Real g_over_4;
  Real lower;
  Real upper;
  std::string source;
};

struct BoundsReport {
  bool inside = false;
  /// value - upper above the interval, value - lower below it, 0 inside.
  Real signed_margin;
  /// Leading digits shared with the interval midpoint, capped at the number
  /// of digits in which the bounds agree with each other.
  int matched_digits = 0;
};

/// (g/4)^(1/3) sum_{n<=n_max} alpha_n (omega^2 / (g/4)^(2/3))^n.
/// Throws DomainError if some alpha_n with n <= n_max is missing.
EnergyEstimate strong_energy(std::span<const StrongCouplingCoefficient> alphas, const Real& g_over_4,
                             const Real& omega, int n_max);

/// Throws DomainError when the couplings differ.
BoundsReport check_bounds(const EnergyEstimate& estimate, const BoundsRecord& bounds);

/// Published lower/upper ground-state bounds at g/4 = 0.1, 0.3, 0.5, 1.0, 2.0 (omega = 1).
std::vector<BoundsRecord> reference_bounds(int digits);

/// The bounds record whose coupling matches, if any.
std::optional<BoundsRecord> find_bounds(std::span<const BoundsRecord> bounds, const Real& g_over_4);

struct Table2Row {
  EnergyEstimate estimate;
  std::optional<BoundsReport> report;
};

/// One row per (g/4, n_max) pair at omega = 1, in the given order.
std::vector<Table2Row> table2(std::span<const StrongCouplingCoefficient> alphas,
                              std::span<const Real> couplings, std::span<const int> n_maxes,
                              std::span<const BoundsRecord> bounds);

}  // namespace vpt
