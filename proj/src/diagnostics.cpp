#include "vpt/diagnostics.hpp"

#include <algorithm>

#include "vpt/detail/parallel.hpp"
#include "vpt/errors.hpp"
#include "vpt/strongcoupling.hpp"

namespace vpt {

std::vector<ConvergenceSample> convergence_series(const ReexpansionTables& tables, int n, int order_from,
                                                  int order_to, const Real& reference,
                                                  const FrequencySchedule& schedule) {
  if (order_from < 1 || order_from > order_to) throw DomainError("invalid order range");
  if (order_to > tables.order()) {
    throw DomainError("order " + std::to_string(order_to) + " exceeds available series order " +
                      std::to_string(tables.order()));
  }
  if (!reference.is_finite()) throw DomainError("reference must be finite");

  return detail::parallel_map(static_cast<std::size_t>(order_to - order_from + 1), [&](std::size_t i) {
    const int order = order_from + static_cast<int>(i);
    Real approx = alpha(tables, order, n, schedule).value;
    const Real residual = approx - reference;
    return ConvergenceSample{order, std::move(approx), abs(residual), residual.sign()};
  });
}

std::vector<ConvergenceSample> envelope(std::span<const ConvergenceSample> samples, int min_run) {
  if (samples.size() < 5) throw DomainError("envelope needs at least 5 samples");
  const std::size_t count = samples.size();

  std::vector<std::size_t> peaks;
  for (std::size_t i = 1; i + 1 < count; ++i) {
    if (samples[i].delta > samples[i - 1].delta && samples[i].delta > samples[i + 1].delta) peaks.push_back(i);
  }

  struct Run {
    std::size_t first;
    std::size_t last;
    int sign;
  };
  std::vector<Run> runs;
  for (std::size_t i = 0; i < count; ++i) {
    if (!runs.empty() && runs.back().sign == samples[i].sign) {
      runs.back().last = i;
    } else {
      runs.push_back({i, i, samples[i].sign});
    }
  }

  std::vector<ConvergenceSample> out;
  if (runs.size() <= 1) {
    for (const std::size_t i : peaks) out.push_back(samples[i]);
    return out;
  }

  std::vector<Run> merged;
  for (const Run& run : runs) {
    if (run.sign == 0 || run.last - run.first + 1 < static_cast<std::size_t>(min_run)) continue;
    if (!merged.empty() && merged.back().sign == run.sign) {
      merged.back().last = run.last;
    } else {
      merged.push_back(run);
    }
  }
  for (const Run& run : merged) {
    const std::size_t* best = nullptr;
    for (const std::size_t& i : peaks) {
      if (i < run.first || i > run.last) continue;
      if (best == nullptr || samples[i].delta > samples[*best].delta) best = &i;
    }
    if (best != nullptr) out.push_back(samples[*best]);
  }
  return out;
}

EnvelopeFit fit_envelope(std::span<const ConvergenceSample> points, int order_min) {
  std::vector<const ConvergenceSample*> used;
  int digits = 1;
  for (const auto& p : points) {
    if (p.order >= order_min && p.delta.sign() > 0) {
      used.push_back(&p);
      digits = std::max(digits, p.delta.precision_digits());
    }
  }
  if (used.size() < 3) throw DomainError("envelope fit needs at least 3 points with N >= N_min");

  std::vector<Real> xs;
  std::vector<Real> ys;
  Real mean_x(0L, digits);
  Real mean_y(0L, digits);
  for (const auto* p : used) {
    xs.push_back(cbrt(Real(static_cast<long>(p->order), digits)));
    ys.push_back(log(p->delta.with_digits(digits)));
    mean_x += xs.back();
    mean_y += ys.back();
  }
  const long m = static_cast<long>(used.size());
  mean_x = mean_x / m;
  mean_y = mean_y / m;
  Real sxx(0L, digits);
  Real sxy(0L, digits);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const Real dx = xs[i] - mean_x;
    sxx += dx * dx;
    sxy += dx * (ys[i] - mean_y);
  }
  if (sxx.is_zero()) throw DomainError("degenerate envelope fit: all orders equal");
  const Real slope = sxy / sxx;
  const Real intercept = mean_y - slope * mean_x;
  Real ss(0L, digits);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const Real r = ys[i] - (intercept + slope * xs[i]);
    ss += r * r;
  }
  return {-intercept, -slope, sqrt(ss / m), static_cast<int>(m)};
}

std::vector<FigureRow> export_fig_data(std::span<const ConvergenceSample> samples) {
  std::vector<FigureRow> rows;
  rows.reserve(samples.size());
  for (const auto& s : samples) {
    const int digits = s.delta.precision_digits();
    rows.push_back({s.order, cbrt(Real(static_cast<long>(s.order), digits)), s.delta, log(s.delta), s.sign});
  }
  std::sort(rows.begin(), rows.end(), [](const FigureRow& a, const FigureRow& b) { return a.order < b.order; });
  return rows;
}

}  // namespace vpt
