#pragma once

// Rayleigh-Ritz ground-state energy of p^2/2 + omega^2 x^2/2 + (g/4) x^4 in
// the even harmonic-oscillator states |0>, |2>, ..., |2(size-1)> of a chosen
// basis frequency. Independent of the perturbative machinery.

#include <span>
#include <utility>
#include <vector>

#include "vpt/numerics.hpp"

namespace vpt {

struct RitzConfig {
  int basis_size = 64;
  Real basis_frequency = Real(1L, 60);
  int working_digits = 60;

  /// Throws DomainError unless basis_size >= 4, frequency > 0, digits > 0.
  void validate() const;
};

/// Symmetric pentadiagonal Hamiltonian in the even sector, stored by bands:
/// bands[0][i] = H(i,i), bands[1][i] = H(i,i+1), bands[2][i] = H(i,i+2).
struct BandedHamiltonian {
  std::vector<Real> bands[3];

  int size() const { return static_cast<int>(bands[0].size()); }
};

BandedHamiltonian ritz_hamiltonian(const Real& g, const Real& omega, const RitzConfig& config);

/// Number of eigenvalues below `shift` (LDL^T inertia).
int count_below(const BandedHamiltonian& h, const Real& shift);

/// Lowest eigenvalue: inertia bisection, then inverse-iteration polish.
/// Throws DomainError if the polish does not settle within its budget.
Real ritz_ground_energy(const Real& g, const Real& omega, const RitzConfig& config);

/// Ground energy for each basis size (ascending), same frequency and digits.
std::vector<std::pair<int, Real>> ritz_convergence_scan(const Real& g, const Real& omega,
                                                        std::span<const int> sizes, const RitzConfig& base);

}  // namespace vpt
