#include "vpt/vptcore.hpp"

#include <algorithm>
#include <optional>

#include "vpt/errors.hpp"

namespace vpt {

namespace {

constexpr int kScanPoints = 512;
constexpr int kRefineBudget = 2000;

void check_order(const BWSeries& bw, int order) {
  if (order < 0 || order > bw.max_order()) {
    throw DomainError("order " + std::to_string(order) + " exceeds available series order " +
                      std::to_string(bw.max_order()));
  }
}

// Truncated Taylor jet in Omega: value, first and second derivative.
struct Jet {
  Real v;
  Real d;
  Real dd;
};

Jet operator*(const Jet& a, const Jet& b) {
  return {a.v * b.v, a.d * b.v + a.v * b.d, a.dd * b.v + (a.d * b.d) * 2 + a.v * b.dd};
}

Jet& operator+=(Jet& a, const Real& c) {
  a.v += c;
  return a;
}

Jet& operator+=(Jet& a, const Jet& b) {
  a.v += b.v;
  a.d += b.d;
  a.dd += b.dd;
  return a;
}

int max_digits(std::initializer_list<const Real*> values) {
  int digits = 1;
  for (const Real* v : values) digits = std::max(digits, v->precision_digits());
  return digits;
}

}  // namespace

Real ReducedPoint::rho() const { return (omega_hat_sq - 1) / lambda; }

void PhysicalPoint::validate() const {
  if (g.sign() <= 0) throw DomainError("coupling g must be positive");
  if (omega.sign() < 0) throw DomainError("omega must be non-negative");
  if (trial_omega.sign() <= 0) throw DomainError("trial frequency must be positive");
}

Real PhysicalPoint::r() const { return (omega * omega - trial_omega * trial_omega) * 2 / g; }

ReducedPoint PhysicalPoint::reduced() const {
  validate();
  const Real cube = trial_omega * trial_omega * trial_omega;
  return {g / 4 / cube, omega * omega / (trial_omega * trial_omega)};
}

ReexpansionTables::ReexpansionTables(const BWSeries& bw, int order, int digits) : order_(order), digits_(digits) {
  check_order(bw, order);
  coefficients_.reserve(static_cast<std::size_t>(order) + 1);
  binomials_.resize(static_cast<std::size_t>(order) + 1);
  for (int j = 0; j <= order; ++j) {
    coefficients_.emplace_back(bw[j], digits);
    const ExactRational a = make_rational(1 - 3 * j, 2);
    ExactRational c(1);
    auto& row = binomials_[static_cast<std::size_t>(j)];
    row.reserve(static_cast<std::size_t>(order - j) + 1);
    for (int k = 0; k <= order - j; ++k) {
      if (k > 0) {
        c *= a - (k - 1);
        c /= k;
      }
      row.emplace_back(c, digits);
    }
  }
}

Real reexpansion_coefficient(const BWSeries& bw, int l, const ReducedPoint& point) {
  check_order(bw, l);
  const int digits = max_digits({&point.lambda, &point.omega_hat_sq});
  const Real rho = point.rho();
  // Horner in rho: sum_j e_j C(a_j, l-j) rho^(l-j), highest power first (j = 0).
  Real acc(0L, digits);
  for (int j = 0; j <= l; ++j) {
    acc = acc * rho + Real(bw[j] * binomial_half(j, l - j), digits);
  }
  return acc;
}

ExactRational reexpansion_coefficient(const BWSeries& bw, int l, const ExactRational& rho) {
  check_order(bw, l);
  ExactRational acc(0);
  for (int j = 0; j <= l; ++j) acc = acc * rho + bw[j] * binomial_half(j, l - j);
  return acc;
}

VariationalEnergy variational_energy(const ReexpansionTables& tables, const Real& g, const Real& omega,
                                     const Real& trial_omega, int order) {
  if (order < 0 || order > tables.order()) throw DomainError("order exceeds reexpansion tables");
  PhysicalPoint{g, omega, trial_omega}.validate();
  const int digits = std::max(tables.digits(), max_digits({&g, &omega, &trial_omega}));
  const Real big_omega = trial_omega.with_digits(digits);
  const Real t = omega * omega / (big_omega * big_omega) - 1;
  const Real lambda = g / 4 / (big_omega * big_omega * big_omega);

  CompensatedSum<Real> sum(Real(0L, digits));
  Real lambda_power(1L, digits);
  for (int j = 0; j <= order; ++j) {
    Real poly = tables.binomial(j, order - j);
    for (int k = order - j - 1; k >= 0; --k) poly = fma(poly, t, tables.binomial(j, k));
    sum.add(tables.coefficient(j) * lambda_power * poly);
    lambda_power *= lambda;
  }
  return {order, big_omega, big_omega * sum.value()};
}

VariationalEnergy variational_energy(const BWSeries& bw, const Real& g, const Real& omega,
                                     const Real& trial_omega, int order) {
  check_order(bw, order);
  const ReexpansionTables tables(bw, order, max_digits({&g, &omega, &trial_omega}));
  return variational_energy(tables, g, omega, trial_omega, order);
}

ExactRational variational_energy_exact(const BWSeries& bw, const ExactRational& g, const ExactRational& omega_sq,
                                       const ExactRational& trial_omega, int order) {
  check_order(bw, order);
  if (sgn(g) <= 0 || sgn(trial_omega) <= 0 || sgn(omega_sq) < 0) {
    throw DomainError("variational_energy_exact: need g > 0, omega^2 >= 0, Omega > 0");
  }
  const ExactRational t = omega_sq / (trial_omega * trial_omega) - 1;
  const ExactRational lambda = g / 4 / (trial_omega * trial_omega * trial_omega);
  ExactRational sum(0);
  ExactRational lambda_power(1);
  for (int j = 0; j <= order; ++j) {
    ExactRational poly(0);
    for (int k = order - j; k >= 0; --k) poly = poly * t + binomial_half(j, k);
    sum += bw[j] * lambda_power * poly;
    lambda_power *= lambda;
  }
  return trial_omega * sum;
}

EnergyJet variational_energy_jet(const ReexpansionTables& tables, const Real& g, const Real& omega,
                                 const Real& trial_omega, int order) {
  if (order < 0 || order > tables.order()) throw DomainError("order exceeds reexpansion tables");
  PhysicalPoint{g, omega, trial_omega}.validate();
  const int digits = std::max(tables.digits(), max_digits({&g, &omega, &trial_omega}));
  const Real x = trial_omega.with_digits(digits);
  const Real inv = 1 / x;
  const Real inv2 = inv * inv;
  const Real w2 = omega * omega;

  // t(Omega) = omega^2 / Omega^2 - 1
  const Jet t{w2 * inv2 - 1, w2 * inv2 * inv * -2, w2 * inv2 * inv2 * 6};
  const Real quarter_g_over_cube = g / 4 * inv2 * inv;

  Jet total{Real(0L, digits), Real(0L, digits), Real(0L, digits)};
  Real factor = x;  // (g/4)^j Omega^(1-3j)
  for (int j = 0; j <= order; ++j) {
    Jet poly{tables.binomial(j, order - j), Real(0L, digits), Real(0L, digits)};
    for (int k = order - j - 1; k >= 0; --k) {
      poly = poly * t;
      poly += tables.binomial(j, k);
    }
    const long p = 1 - 3L * j;
    const Real scaled = tables.coefficient(j) * factor;
    const Jet power{scaled, scaled * p * inv, scaled * (p * (p - 1)) * inv2};
    total += power * poly;
    factor *= quarter_g_over_cube;
  }
  return {total.v, total.d, total.dd};
}

namespace {

enum class Component { kFirst, kSecond };

const Real& pick(const EnergyJet& jet, Component c) { return c == Component::kFirst ? jet.d1 : jet.d2; }

// Illinois-modified regula falsi with periodic bisection on a sign-change bracket.
template <typename F>
Real refine_root(F&& f, Real a, Real fa, Real b, Real fb, int digits) {
  const Real tol = pow(Real(10L, digits), -(digits - 8));
  int side = 0;
  for (int it = 0; it < kRefineBudget; ++it) {
    Real c = (it % 8 == 7) ? (a + b) / 2 : (a * fb - b * fa) / (fb - fa);
    if (!(c > std::min(a, b) && c < std::max(a, b))) c = (a + b) / 2;
    const Real fc = f(c);
    if (fc.is_zero()) return c;
    if (fc.sign() == fb.sign()) {
      b = c;
      fb = fc;
      if (side == -1) fa = fa / 2;
      side = -1;
    } else {
      a = c;
      fa = fc;
      if (side == 1) fb = fb / 2;
      side = 1;
    }
    if (abs(b - a) <= tol * abs(b)) return fa.sign() == 0 ? a : (abs(fa) < abs(fb) ? a : b);
  }
  throw DomainError("optimal_frequency: root refinement did not converge");
}

std::optional<Real> closest_root(const ReexpansionTables& tables, const Real& g, const Real& omega, int order,
                                 const std::vector<Real>& grid, const std::vector<EnergyJet>& jets,
                                 Component component, const Real& target) {
  auto f = [&](const Real& x) {
    return Real(pick(variational_energy_jet(tables, g, omega, x, order), component));
  };
  std::optional<Real> best;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const Real& fa = pick(jets[i], component);
    const Real& fb = pick(jets[i + 1], component);
    std::optional<Real> root;
    if (fa.is_zero()) {
      root = grid[i];
    } else if (fa.sign() * fb.sign() < 0) {
      root = refine_root(f, grid[i], fa, grid[i + 1], fb, tables.digits());
    }
    if (root && (!best || abs(*root - target) < abs(*best - target))) best = std::move(root);
  }
  return best;
}

}  // namespace

OptimalFrequency optimal_frequency(const ReexpansionTables& tables, const Real& g, const Real& omega, int order,
                                   const FrequencySchedule& schedule) {
  if (order < 1) throw DomainError("optimal_frequency requires order >= 1");
  if (g.sign() <= 0) throw DomainError("coupling g must be positive");
  if (omega.sign() < 0) throw DomainError("omega must be non-negative");
  const int digits = tables.digits();
  const Real n(static_cast<long>(order), digits);
  const Real lower_scale = cbrt(g * schedule.c * n / 4);
  const Real upper_scale = cbrt(g * n * 2);
  const Real lo = std::max(omega, lower_scale) / 10;
  const Real hi = std::max(omega, upper_scale) * 10;
  const Real target = schedule_frequency(g, order, schedule);

  std::vector<Real> grid;
  std::vector<EnergyJet> jets;
  grid.reserve(kScanPoints);
  jets.reserve(kScanPoints);
  const Real ratio = pow_rational_exponent(hi / lo, 1, kScanPoints - 1);
  Real x = lo;
  for (int i = 0; i < kScanPoints; ++i) {
    grid.push_back(x);
    jets.push_back(variational_energy_jet(tables, g, omega, x, order));
    x *= ratio;
  }

  OptimumKind kind = OptimumKind::kStationary;
  auto root = closest_root(tables, g, omega, order, grid, jets, Component::kFirst, target);
  if (!root) {
    kind = OptimumKind::kTurningPoint;
    root = closest_root(tables, g, omega, order, grid, jets, Component::kSecond, target);
  }
  if (!root) throw DomainError("no stationary or turning point");
  Real energy = variational_energy(tables, g, omega, *root, order).value;
  return {std::move(*root), std::move(energy), kind};
}

OptimalFrequency optimal_frequency(const BWSeries& bw, const Real& g, const Real& omega, int order,
                                   const PrecisionContext& context) {
  context.validate();
  check_order(bw, order);
  const ReexpansionTables tables(bw, order, context.working_digits);
  return optimal_frequency(tables, g.with_digits(context.working_digits), omega.with_digits(context.working_digits),
                           order, FrequencySchedule::standard(context.working_digits));
}

Real raw_partial_sum(const BWSeries& bw, const Real& g, const Real& omega, int order) {
  check_order(bw, order);
  if (g.sign() <= 0) throw DomainError("coupling g must be positive");
  if (omega.sign() <= 0) throw DomainError("raw series needs omega > 0");
  const int digits = max_digits({&g, &omega});
  const Real x = g / 4 / (omega * omega * omega);
  Real acc(0L, digits);
  for (int l = order; l >= 0; --l) acc = acc * x + Real(bw[l], digits);
  return omega * acc;
}

int optimal_truncation_order(const Real& g, const Real& omega) {
  if (g.sign() <= 0) throw DomainError("coupling g must be positive");
  const Real n = omega * omega * omega * 3 / (g * 4);
  return static_cast<int>(std::max(0L, n.round_to_long()));
}

}  // namespace vpt
