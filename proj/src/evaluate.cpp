#include "vpt/evaluate.hpp"

#include <algorithm>

#include "vpt/errors.hpp"

namespace vpt {

namespace {

// Couplings are decimal inputs that may have been parsed at different
// precisions; compare them to 15 significant digits.
bool same_coupling(const Real& a, const Real& b) { return to_scientific(a, 15) == to_scientific(b, 15); }

}  // namespace

EnergyEstimate strong_energy(std::span<const StrongCouplingCoefficient> alphas, const Real& g_over_4,
                             const Real& omega, int n_max) {
  if (g_over_4.sign() <= 0) throw DomainError("g/4 must be positive");
  if (omega.sign() < 0) throw DomainError("omega must be non-negative");
  if (n_max < 0) throw DomainError("n_max must be non-negative");
  std::vector<const Real*> by_index(static_cast<std::size_t>(n_max) + 1, nullptr);
  int digits = std::max(g_over_4.precision_digits(), omega.precision_digits());
  for (const auto& a : alphas) {
    if (a.n >= 0 && a.n <= n_max) by_index[static_cast<std::size_t>(a.n)] = &a.value;
    digits = std::max(digits, a.value.precision_digits());
  }
  for (int n = 0; n <= n_max; ++n) {
    if (by_index[static_cast<std::size_t>(n)] == nullptr) {
      throw DomainError("missing strong-coupling coefficient alpha_" + std::to_string(n));
    }
  }
  const Real scale = cbrt(g_over_4.with_digits(digits));
  // ((g/4)/omega^3)^(-2/3) = omega^2 / (g/4)^(2/3); finite at omega = 0.
  const Real x = omega * omega / (scale * scale);
  Real sum(0L, digits);
  for (int n = n_max; n >= 0; --n) sum = sum * x + *by_index[static_cast<std::size_t>(n)];
  return {g_over_4, omega, n_max, scale * sum};
}

BoundsReport check_bounds(const EnergyEstimate& estimate, const BoundsRecord& bounds) {
  if (!same_coupling(estimate.g_over_4, bounds.g_over_4)) {
    throw DomainError("bounds are for g/4 = " + to_fixed(bounds.g_over_4, 15) + ", estimate for g/4 = " +
                      to_fixed(estimate.g_over_4, 15));
  }
  const Real& v = estimate.value;
  BoundsReport report;
  report.inside = bounds.lower <= v && v <= bounds.upper;
  if (v > bounds.upper) {
    report.signed_margin = v - bounds.upper;
  } else if (v < bounds.lower) {
    report.signed_margin = v - bounds.lower;
  } else {
    report.signed_margin = Real(0L, v.precision_digits());
  }
  const Real mid = (bounds.lower + bounds.upper) / 2;
  const int cap = std::max(v.precision_digits(), mid.precision_digits());
  const int bounds_agreement = matching_digits(mid + (bounds.upper - bounds.lower), mid, cap);
  report.matched_digits = std::min(matching_digits(v, mid, cap), bounds_agreement);
  return report;
}

std::vector<BoundsRecord> reference_bounds(int digits) {
  struct Row {
    const char* g4;
    const char* lower;
    const char* upper;
  };
  static constexpr Row kRows[] = {
      {"0.1", "0.5591463271835195763", "0.5591463271835195767"},
      {"0.3", "0.6379917831712785283", "0.6379917831712785296"},
      {"0.5", "0.6961758207651459251", "0.6961758207651459285"},
      {"1.0", "0.803770651234273756", "0.803770651234273786"},
      {"2.0", "0.9515684727294999", "0.9515684727295001"},
  };
  std::vector<BoundsRecord> out;
  for (const auto& row : kRows) {
    out.push_back({Real::parse(row.g4, digits), Real::parse(row.lower, digits), Real::parse(row.upper, digits),
                   "rigorous bounds"});
  }
  return out;
}

std::optional<BoundsRecord> find_bounds(std::span<const BoundsRecord> bounds, const Real& g_over_4) {
  const auto it = std::find_if(bounds.begin(), bounds.end(),
                               [&](const BoundsRecord& b) { return same_coupling(b.g_over_4, g_over_4); });
  if (it == bounds.end()) return std::nullopt;
  return *it;
}

std::vector<Table2Row> table2(std::span<const StrongCouplingCoefficient> alphas,
                              std::span<const Real> couplings, std::span<const int> n_maxes,
                              std::span<const BoundsRecord> bounds) {
  std::vector<Table2Row> rows;
  for (const Real& g4 : couplings) {
    const Real omega(1L, g4.precision_digits());
    for (const int n_max : n_maxes) {
      Table2Row row{strong_energy(alphas, g4, omega, n_max), std::nullopt};
      if (auto b = find_bounds(bounds, g4)) row.report = check_bounds(row.estimate, *b);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace vpt
