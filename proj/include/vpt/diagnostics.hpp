#pragma once

// Convergence of (alpha_n)_N toward a reference value and the envelope law
//   Delta_N = exp(-kappa0 - kappa1 N^(1/3)).

#include <span>
#include <vector>

#include "vpt/numerics.hpp"
#include "vpt/schedule.hpp"
#include "vpt/vptcore.hpp"

namespace vpt {

struct ConvergenceSample {
  int order = 0;
  Real approx;
  Real delta;    // |approx - reference|
  int sign = 0;  // sign of approx - reference
};

struct EnvelopeFit {
  Real kappa0;
  Real kappa1;
  Real rms_residual;
  int points_used = 0;
};

/// One sample per N in [order_from, order_to]; computed concurrently.
std::vector<ConvergenceSample> convergence_series(const ReexpansionTables& tables, int n, int order_from,
                                                  int order_to, const Real& reference,
                                                  const FrequencySchedule& schedule);

inline constexpr int kMinSignRun = 3;

/// Upper envelope of |residual|.
///
/// Candidates are the strict interior local maxima of delta. When the signed
/// residual oscillates, sign-runs shorter than `min_run` samples (flicker at
/// a zero crossing) are dropped, adjacent runs of equal sign are merged, and
/// only the largest candidate of each run is kept, one peak per half period.
/// Throws DomainError for fewer than 5 samples.
std::vector<ConvergenceSample> envelope(std::span<const ConvergenceSample> samples, int min_run = kMinSignRun);

/// Least squares of ln(delta) against N^(1/3) over points with N >= order_min:
/// slope -kappa1, intercept -kappa0. Throws DomainError for fewer than three
/// usable points or a degenerate design.
EnvelopeFit fit_envelope(std::span<const ConvergenceSample> points, int order_min);

struct FigureRow {
  int order = 0;
  Real cube_root;
  Real delta;
  Real log_delta;  // -inf when delta == 0
  int sign = 0;
};

/// Plot-ready rows in ascending N.
std::vector<FigureRow> export_fig_data(std::span<const ConvergenceSample> samples);

}  // namespace vpt
