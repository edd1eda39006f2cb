#include "vpt/oracle.hpp"

#include <algorithm>

#include "vpt/errors.hpp"

namespace vpt {

namespace {

constexpr int kPolishBudget = 40;

struct Factorization {
  std::vector<Real> d;
  std::vector<Real> l1;  // L(i+1, i)
  std::vector<Real> l2;  // L(i+2, i)
  int negative = 0;
};

// LDL^T of H - shift*I without pivoting. An exactly zero pivot is nudged to a
// tiny positive value, which leaves the inertia count intact for bisection.
Factorization factorize(const BandedHamiltonian& h, const Real& shift) {
  const int n = h.size();
  const int digits = shift.precision_digits();
  const Real tiny = pow(Real(10L, digits), -digits);
  Factorization f;
  f.d.reserve(static_cast<std::size_t>(n));
  f.l1.reserve(static_cast<std::size_t>(n));
  f.l2.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const auto u = static_cast<std::size_t>(i);
    Real di = h.bands[0][u] - shift;
    if (i >= 1) di -= f.l1[u - 1] * f.l1[u - 1] * f.d[u - 1];
    if (i >= 2) di -= f.l2[u - 2] * f.l2[u - 2] * f.d[u - 2];
    if (di.is_zero()) di = tiny;
    if (di.sign() < 0) ++f.negative;

    Real a1 = i + 1 < n ? h.bands[1][u] : Real(0L, digits);
    if (i >= 1 && i + 1 < n) a1 -= f.l2[u - 1] * f.l1[u - 1] * f.d[u - 1];
    f.l1.push_back(a1 / di);
    f.l2.push_back(i + 2 < n ? h.bands[2][u] / di : Real(0L, digits));
    f.d.push_back(std::move(di));
  }
  return f;
}

std::vector<Real> solve(const Factorization& f, const std::vector<Real>& rhs) {
  const std::size_t n = rhs.size();
  std::vector<Real> z(rhs);
  for (std::size_t i = 0; i < n; ++i) {
    if (i >= 1) z[i] -= f.l1[i - 1] * z[i - 1];
    if (i >= 2) z[i] -= f.l2[i - 2] * z[i - 2];
  }
  for (std::size_t i = 0; i < n; ++i) z[i] /= f.d[i];
  for (std::size_t k = n; k-- > 0;) {
    if (k + 1 < n) z[k] -= f.l1[k] * z[k + 1];
    if (k + 2 < n) z[k] -= f.l2[k] * z[k + 2];
  }
  return z;
}

Real rayleigh_quotient(const BandedHamiltonian& h, std::vector<Real>& x) {
  const std::size_t n = x.size();
  Real norm(0L, x[0].precision_digits());
  for (const auto& v : x) norm += v * v;
  norm = sqrt(norm);
  for (auto& v : x) v /= norm;
  Real quotient(0L, norm.precision_digits());
  for (std::size_t i = 0; i < n; ++i) {
    quotient += h.bands[0][i] * x[i] * x[i];
    if (i + 1 < n) quotient += h.bands[1][i] * x[i] * x[i + 1] * 2;
    if (i + 2 < n) quotient += h.bands[2][i] * x[i] * x[i + 2] * 2;
  }
  return quotient;
}

}  // namespace

void RitzConfig::validate() const {
  if (basis_size < 4) throw DomainError("Ritz basis needs at least 4 functions");
  if (basis_frequency.sign() <= 0) throw DomainError("basis frequency must be positive");
  if (working_digits <= 0) throw DomainError("working digits must be positive");
}

BandedHamiltonian ritz_hamiltonian(const Real& g, const Real& omega, const RitzConfig& config) {
  config.validate();
  if (g.sign() < 0) throw DomainError("coupling g must be non-negative");
  if (omega.sign() < 0) throw DomainError("omega must be non-negative");
  const int digits = config.working_digits;
  const Real freq = config.basis_frequency.with_digits(digits);
  const Real quartic = g.with_digits(digits) / 4;
  const Real s = 1 / (freq * 2);  // x^2 = s (a + a^dagger)^2
  const Real s2 = s * s;
  const Real w = omega.with_digits(digits);
  const Real c2 = (w * w - freq * freq) / 2;

  BandedHamiltonian h;
  const auto n = static_cast<std::size_t>(config.basis_size);
  for (auto& band : h.bands) band.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const long m = 2 * static_cast<long>(i);
    h.bands[0].push_back(freq * (2 * m + 1) / 2 + c2 * s * (2 * m + 1) + quartic * s2 * (6 * m * m + 6 * m + 3));
    h.bands[1].push_back((c2 * s + quartic * s2 * (4 * m + 6)) * sqrt(Real((m + 1) * (m + 2), digits)));
    h.bands[2].push_back(quartic * s2 * sqrt(Real((m + 1) * (m + 2) * (m + 3) * (m + 4), digits)));
  }
  return h;
}

int count_below(const BandedHamiltonian& h, const Real& shift) { return factorize(h, shift).negative; }

Real ritz_ground_energy(const Real& g, const Real& omega, const RitzConfig& config) {
  const BandedHamiltonian h = ritz_hamiltonian(g, omega, config);
  const int digits = config.working_digits;
  const int n = h.size();

  // Gershgorin lower bound; H(0,0) is an upper bound for the lowest eigenvalue.
  Real lo = h.bands[0][0];
  for (int i = 0; i < n; ++i) {
    const auto u = static_cast<std::size_t>(i);
    Real radius(0L, digits);
    if (i + 1 < n) radius += abs(h.bands[1][u]);
    if (i + 2 < n) radius += abs(h.bands[2][u]);
    if (i >= 1) radius += abs(h.bands[1][u - 1]);
    if (i >= 2) radius += abs(h.bands[2][u - 2]);
    lo = std::min(lo, h.bands[0][u] - radius);
  }
  Real hi = h.bands[0][0] + abs(h.bands[0][0]) / 1000000 + Real(1L, digits) / 1000000;

  const Real bisect_tol = pow(Real(10L, digits), -(digits / 2));
  while (hi - lo > bisect_tol * abs(hi)) {
    Real mid = (lo + hi) / 2;
    if (count_below(h, mid) >= 1) {
      hi = std::move(mid);
    } else {
      lo = std::move(mid);
    }
  }

  // lo sits just below the lowest eigenvalue, so H - lo*I is positive definite.
  const Factorization f = factorize(h, lo);
  std::vector<Real> x(static_cast<std::size_t>(n), Real(1L, digits));
  Real energy = rayleigh_quotient(h, x);
  const Real polish_tol = pow(Real(10L, digits), -(digits - 5));
  for (int it = 0; it < kPolishBudget; ++it) {
    x = solve(f, x);
    Real next = rayleigh_quotient(h, x);
    const bool settled = abs(next - energy) <= polish_tol * abs(next);
    energy = std::move(next);
    if (settled && it >= 1) return energy;
  }
  throw DomainError("Ritz eigenvalue refinement did not converge");
}

std::vector<std::pair<int, Real>> ritz_convergence_scan(const Real& g, const Real& omega,
                                                        std::span<const int> sizes, const RitzConfig& base) {
  if (!std::is_sorted(sizes.begin(), sizes.end())) throw DomainError("basis sizes must be ascending");
  std::vector<std::pair<int, Real>> out;
  for (const int size : sizes) {
    RitzConfig config = base;
    config.basis_size = size;
    out.emplace_back(size, ritz_ground_energy(g, omega, config));
  }
  return out;
}

}  // namespace vpt
