#include "vpt/strongcoupling.hpp"

#include "vpt/detail/parallel.hpp"
#include "vpt/errors.hpp"

namespace vpt {

namespace {

void check_arguments(int tables_order, int order, int n) {
  if (order < 1 || order > tables_order) {
    throw DomainError("order " + std::to_string(order) + " outside available range 1.." +
                      std::to_string(tables_order));
  }
  if (n < 0) throw DomainError("derivative index must be non-negative");
}

}  // namespace

Real w_derivative_at_zero(const ReexpansionTables& tables, int order, const Real& lambda, int n) {
  check_arguments(tables.order(), order, n);
  if (lambda.sign() <= 0) throw DomainError("lambda must be positive");
  const int digits = std::max(tables.digits(), lambda.precision_digits());
  if (n > order) return Real(0L, digits);

  // k!/(k-n)! for k = n..order
  std::vector<BigInt> falling(static_cast<std::size_t>(order) + 1);
  falling[static_cast<std::size_t>(n)] = factorial(n);
  for (int k = n + 1; k <= order; ++k) {
    falling[static_cast<std::size_t>(k)] = falling[static_cast<std::size_t>(k - 1)] * k / (k - n);
  }

  CompensatedSum<Real> outer(Real(0L, digits));
  Real lambda_power(1L, digits);
  for (int j = 0; j <= order - n; ++j) {
    Real inner(0L, digits);
    for (int k = n; k <= order - j; ++k) {
      const Real term = tables.binomial(j, k) * falling[static_cast<std::size_t>(k)];
      if ((k - n) % 2 == 0) {
        inner += term;
      } else {
        inner -= term;
      }
    }
    outer.add(tables.coefficient(j) * lambda_power * inner);
    lambda_power *= lambda;
  }
  return outer.value();
}

Real w_derivative_at_zero(const BWSeries& bw, int order, const Real& lambda, int n) {
  if (order < 1 || order > bw.max_order()) throw DomainError("order exceeds available series order");
  const ReexpansionTables tables(bw, order, lambda.precision_digits());
  return w_derivative_at_zero(tables, order, lambda, n);
}

ExactRational w_derivative_at_zero_exact(const BWSeries& bw, int order, const ExactRational& lambda, int n) {
  check_arguments(bw.max_order(), order, n);
  if (sgn(lambda) <= 0) throw DomainError("lambda must be positive");
  ExactRational total(0);
  ExactRational lambda_power(1);
  for (int j = 0; j <= order - n; ++j) {
    ExactRational inner(0);
    for (int k = n; k <= order - j; ++k) {
      const ExactRational term = binomial_half(j, k) * ExactRational(falling_factorial(k, n));
      inner += ((k - n) % 2 == 0) ? term : ExactRational(-term);
    }
    total += bw[j] * lambda_power * inner;
    lambda_power *= lambda;
  }
  return total;
}

StrongCouplingCoefficient alpha_at(const ReexpansionTables& tables, int order, int n, const Real& lambda) {
  const Real derivative = w_derivative_at_zero(tables, order, lambda, n);
  const int digits = derivative.precision_digits();
  Real value = derivative * pow_rational_exponent(lambda.with_digits(digits), 2L * n - 1, 3) /
               Real(factorial(n), digits);
  return {n, order, std::move(value), digits};
}

StrongCouplingCoefficient alpha(const ReexpansionTables& tables, int order, int n,
                                const FrequencySchedule& schedule) {
  return alpha_at(tables, order, n, schedule_lambda(order, schedule));
}

StrongCouplingCoefficient alpha(const BWSeries& bw, int order, int n, const PrecisionContext& context) {
  context.validate();
  if (order < 1 || order > bw.max_order()) throw DomainError("order exceeds available series order");
  const ReexpansionTables tables(bw, order, context.working_digits);
  return alpha(tables, order, n, FrequencySchedule::standard(context.working_digits));
}

std::vector<StrongCouplingCoefficient> alpha_table(const ReexpansionTables& tables, int order, int n_max,
                                                   const FrequencySchedule& schedule) {
  if (n_max < 0) throw DomainError("n_max must be non-negative");
  check_arguments(tables.order(), order, 0);
  const Real lambda = schedule_lambda(order, schedule);
  return detail::parallel_map(static_cast<std::size_t>(n_max) + 1, [&](std::size_t n) {
    return alpha_at(tables, order, static_cast<int>(n), lambda);
  });
}

std::vector<StrongCouplingCoefficient> alpha_table(const BWSeries& bw, int order, int n_max,
                                                   const PrecisionContext& context) {
  context.validate();
  if (order < 1 || order > bw.max_order()) throw DomainError("order exceeds available series order");
  const ReexpansionTables tables(bw, order, context.working_digits);
  return alpha_table(tables, order, n_max, FrequencySchedule::standard(context.working_digits));
}

}  // namespace vpt
