#pragma once

// Strong-coupling coefficients from the variational series.
//
// At fixed lambda the truncated sum v_N(lambda, omega_hat^2) is a polynomial
// in omega_hat^2 and the energy becomes
//   W_N = (g/4)^(1/3) sum_n alpha_n ((g/4)/omega^3)^(-2n/3),
//   alpha_n = lambda^((2n-1)/3) v_N^(n)(lambda, 0) / n!,
// evaluated at lambda = lambda_N from the frequency schedule.

#include <vector>

#include "vpt/benderwu.hpp"
#include "vpt/numerics.hpp"
#include "vpt/schedule.hpp"
#include "vpt/vptcore.hpp"

namespace vpt {

struct StrongCouplingCoefficient {
  int n = 0;
  int order = 0;  // truncation order N
  Real value;
  int working_digits = kDefaultWorkingDigits;
};

/// n-th derivative of v_N with respect to omega_hat^2 at omega_hat^2 = 0:
///   sum_j e_j lambda^j sum_{k=n}^{N-j} C((1-3j)/2, k) k!/(k-n)! (-1)^(k-n).
Real w_derivative_at_zero(const ReexpansionTables& tables, int order, const Real& lambda, int n);
Real w_derivative_at_zero(const BWSeries& bw, int order, const Real& lambda, int n);
ExactRational w_derivative_at_zero_exact(const BWSeries& bw, int order, const ExactRational& lambda, int n);

/// (alpha_n)_N at an explicit lambda.
StrongCouplingCoefficient alpha_at(const ReexpansionTables& tables, int order, int n, const Real& lambda);

/// (alpha_n)_N at lambda = schedule_lambda(N).
StrongCouplingCoefficient alpha(const ReexpansionTables& tables, int order, int n,
                                const FrequencySchedule& schedule);
StrongCouplingCoefficient alpha(const BWSeries& bw, int order, int n, const PrecisionContext& context);

/// alpha_0 ... alpha_{n_max} at order N, computed concurrently across n.
std::vector<StrongCouplingCoefficient> alpha_table(const ReexpansionTables& tables, int order, int n_max,
                                                   const FrequencySchedule& schedule);
std::vector<StrongCouplingCoefficient> alpha_table(const BWSeries& bw, int order, int n_max,
                                                   const PrecisionContext& context);

}  // namespace vpt
