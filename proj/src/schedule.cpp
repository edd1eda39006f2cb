#include "vpt/schedule.hpp"

#include "vpt/errors.hpp"

namespace vpt {

FrequencySchedule FrequencySchedule::standard(int digits) {
  return {Real::parse(kDefaultC, digits), Real::parse(kDefaultCorrection, digits)};
}

namespace {

Real schedule_factor(int order, const FrequencySchedule& schedule) {
  if (order < 1) throw DomainError("schedule requires order >= 1");
  const int digits = schedule.c.precision_digits();
  const Real n(static_cast<long>(order), digits);
  return schedule.c * n * (1 + schedule.correction * pow_rational_exponent(n, -2, 3));
}

}  // namespace

Real schedule_lambda(int order, const FrequencySchedule& schedule) {
  return 1 / (schedule_factor(order, schedule) * 4);
}

Real schedule_frequency(const Real& g, int order, const FrequencySchedule& schedule) {
  return cbrt(g * schedule_factor(order, schedule));
}

}  // namespace vpt
