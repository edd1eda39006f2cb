#pragma once

// Shared fixtures for the unit and acceptance binaries.

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "vpt/benderwu.hpp"
#include "vpt/numerics.hpp"

#ifndef VPT_TEST_DATA_DIR
#error "VPT_TEST_DATA_DIR must point at tests/data"
#endif

namespace vpt::testing {

inline std::string data_path(std::string_view name) { return std::string(VPT_TEST_DATA_DIR) + "/" + std::string(name); }

// Frozen output of the independent Python recursion (tests/oracles/bw_reference.py).
inline const BWSeries& fixture_series() {
  static const BWSeries series = load_cache(data_path("bw-251.txt"));
  return series;
}

inline constexpr std::string_view kAlpha0Long =
    "0.66798625915577710827096201691986019943040493698406045597666380";

// Published strong-coupling coefficients, digit grouping removed.
inline constexpr std::array<std::string_view, 23> kTableOne = {
    "0.66798625915577710827096",
    "0.1436687833808649100203",
    "-0.008627565680802279128",
    "0.000818208905756349543",
    "-0.000082429217130077221",
    "0.000008069494235040966",
    "-0.000000727977005945775",
    "0.000000056145997222354",
    "-0.000000002949562732712",
    "-0.000000000064215331954",
    "0.000000000048214263787",
    "-0.000000000008940319867",
    "0.000000000001205637215",
    "-0.000000000000130347650",
    "0.000000000000010760089",
    "-0.0000000000000004458901",
    "-0.0000000000000000589898",
    "0.00000000000000001919600",
    "-0.00000000000000000328813",
    "0.00000000000000000042962",
    "-0.000000000000000000044438",
    "0.0000000000000000000032305",
    "-0.0000000000000000000000314",
};

struct TableTwoEntry {
  std::string_view g4;
  int n_max;
  std::string_view value;
};

inline constexpr std::array<TableTwoEntry, 15> kTableTwo = {{
    {"0.1", 15, "0.5591465975035621870"},
    {"0.1", 20, "0.5591462012018055446"},
    {"0.1", 22, "0.5591463443738731269"},
    {"0.3", 15, "0.6379917831785360253"},
    {"0.3", 20, "0.6379917831712361493"},
    {"0.3", 22, "0.6379917831712803818"},
    {"0.5", 15, "0.6961758207651915169"},
    {"0.5", 20, "0.6961758207651458875"},
    {"0.5", 22, "0.6961758207651459288"},
    {"1.0", 15, "0.8037706512342738120476"},
    {"1.0", 20, "0.8037706512342737693509"},
    {"1.0", 22, "0.8037706512342737693541"},
    {"2.0", 15, "0.95156847272950001118421369"},
    {"2.0", 20, "0.95156847272950001114693027"},
    {"2.0", 22, "0.95156847272950001114693052"},
}};

inline int decimals(std::string_view printed) {
  const auto dot = printed.find('.');
  return dot == std::string_view::npos ? 0 : static_cast<int>(printed.size() - dot - 1);
}

/// True when `value` rounds to `printed` within one unit of its last decimal.
inline bool matches_printed(const Real& value, std::string_view printed) {
  const int digits = value.precision_digits();
  const Real ref = Real::parse(printed, digits);
  const Real ulp = pow(Real(10L, digits), -decimals(printed));
  return abs(value - ref) <= ulp * 3 / 2;
}

// v_N(lambda, y) summed straight from its definition.
inline Real v_direct(const BWSeries& bw, int order, const Real& lambda, const Real& y) {
  const int d = lambda.precision_digits();
  Real total(0L, d);
  for (int j = 0; j <= order; ++j) {
    Real inner(0L, d);
    for (int k = 0; k + j <= order; ++k) inner += Real(binomial_half(j, k), d) * pow(y - 1, k);
    total += Real(bw[j], d) * pow(lambda, j) * inner;
  }
  return total;
}

// Central stencils for derivatives 0..3 with step h.
inline Real central_difference(const BWSeries& bw, int order, const Real& lambda, int n, const Real& h) {
  auto v = [&](long step) { return v_direct(bw, order, lambda, h * step); };
  switch (n) {
    case 0:
      return v(0);
    case 1:
      return (v(1) - v(-1)) / (h * 2);
    case 2:
      return (v(1) - v(0) * 2 + v(-1)) / (h * h);
    default:
      return (v(2) - v(1) * 2 + v(-1) * 2 - v(-2)) / (h * h * h * 2);
  }
}

// Exact power-series check of the reexpansion: with omega^2 = Omega^2 + g r / 2
// held at fixed r, the raw series sum_l e_l (g/4)^l omega^(1-3l) is expanded in
// g through order N. Powers of omega come from series square roots and
// reciprocals rather than binomial coefficients.
using Series = std::vector<ExactRational>;

inline Series series_mul(const Series& a, const Series& b) {
  Series c(a.size(), ExactRational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

/// Coefficients in g of the truncated raw series, degree 0..order.
inline Series raw_series_in_g(const BWSeries& bw, int order, const ExactRational& trial, const ExactRational& r) {
  const auto len = static_cast<std::size_t>(order + 1);
  // s = sqrt(1 + u), t = 1 / s
  Series s(len, ExactRational(0)), t(len, ExactRational(0));
  s[0] = 1;
  for (std::size_t m = 1; m < len; ++m) {
    ExactRational acc = m == 1 ? ExactRational(1) : ExactRational(0);
    for (std::size_t i = 1; i < m; ++i) acc -= s[i] * s[m - i];
    s[m] = acc / 2;
  }
  t[0] = 1;
  for (std::size_t m = 1; m < len; ++m) {
    ExactRational acc = 0;
    for (std::size_t i = 1; i <= m; ++i) acc -= s[i] * t[m - i];
    t[m] = acc;
  }
  const ExactRational kappa = r / (2 * trial * trial);  // u = kappa g
  Series out(len, ExactRational(0));
  Series power = s;  // (1+u)^((1-3l)/2)
  const Series t3 = series_mul(series_mul(t, t), t);
  ExactRational trial_pow = trial;  // Omega^(1-3l)
  ExactRational quarter_pow = 1;
  for (int l = 0; l <= order; ++l) {
    ExactRational kappa_pow = 1;
    for (int m = l; m <= order; ++m) {
      out[static_cast<std::size_t>(m)] +=
          bw[l] * quarter_pow * trial_pow * power[static_cast<std::size_t>(m - l)] * kappa_pow;
      kappa_pow *= kappa;
    }
    power = series_mul(power, t3);
    trial_pow /= trial * trial * trial;
    quarter_pow /= 4;
  }
  return out;
}

inline ExactRational evaluate_series(const Series& c, const ExactRational& g) {
  ExactRational acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * g + *it;
  return acc;
}

}  // namespace vpt::testing
