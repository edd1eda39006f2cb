// vpt: strong-coupling coefficients of the quartic anharmonic oscillator from
// variational perturbation theory.
//
// Exit codes: 0 success, 2 usage error, 3 domain error, 4 I/O error.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include "vpt/benderwu.hpp"
#include "vpt/diagnostics.hpp"
#include "vpt/errors.hpp"
#include "vpt/evaluate.hpp"
#include "vpt/oracle.hpp"
#include "vpt/report.hpp"
#include "vpt/strongcoupling.hpp"
#include "vpt/vptcore.hpp"

namespace fs = std::filesystem;
using namespace vpt;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitIo = 4;

struct RunConfig {
  std::string format = "text";
  std::string output;
  std::string cache_dir;
  int working_digits = kDefaultWorkingDigits;
  int output_digits = kDefaultOutputDigits;

  PrecisionContext context() const {
    PrecisionContext ctx{working_digits, output_digits};
    ctx.validate();
    return ctx;
  }
};

fs::path resolve_cache_dir(const RunConfig& config) {
  if (!config.cache_dir.empty()) return config.cache_dir;
  if (const char* env = std::getenv("VPT_CACHE_DIR"); env != nullptr && *env != '\0') return env;
  return "cache";
}

fs::path cache_file(const fs::path& dir, int order) { return dir / ("bw-" + std::to_string(order) + ".txt"); }

/// Exact series through `order`: an exact-order cache file, else a longer one
/// truncated, else a fresh run of the recursion that is then cached.
BWSeries obtain_series(const RunConfig& config, int order) {
  if (order < 0) throw DomainError("order must be non-negative");
  const fs::path dir = resolve_cache_dir(config);
  if (fs::exists(cache_file(dir, order))) return load_cache(cache_file(dir, order));
  std::error_code ec;
  if (fs::is_directory(dir, ec)) {
    static const std::regex kName(R"(bw-(\d+)\.txt)");
    std::optional<int> best;
    for (const auto& entry : fs::directory_iterator(dir)) {
      std::smatch m;
      const std::string name = entry.path().filename().string();
      if (!std::regex_match(name, m, kName)) continue;
      const int available = std::stoi(m[1].str());
      if (available >= order && (!best || available < *best)) best = available;
    }
    if (best) return load_cache(cache_file(dir, *best)).truncated(order);
  }
  BWSeries series = generate(order);
  save_cache(series, cache_file(dir, order));
  return series;
}

void emit(const RunConfig& config, const std::string& text) {
  if (config.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(config.output, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write output file " + config.output);
  out << text;
  if (!out) throw IoError("error writing output file " + config.output);
}

Real parse_real(const std::string& text, int digits) { return Real::parse(text, digits); }

std::string fixed(const Real& x, const RunConfig& config) { return to_fixed(x, config.output_digits); }

// Bounds are quoted to their published length; padding zeros would suggest digits nobody measured.
std::string trimmed(std::string s) {
  if (s.find('.') == std::string::npos) return s;
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s;
}

// --- subcommands ------------------------------------------------------------

struct BwArgs {
  int order = 251;
};

void run_bw(const RunConfig& config, const BwArgs& args) {
  const BWSeries series = obtain_series(config, args.order);
  const OutputFormat format = parse_format(config.format);
  if (format == OutputFormat::kText) {
    std::string out;
    for (int l = 0; l <= series.max_order(); ++l) out += std::to_string(l) + " " + to_string(series[l]) + "\n";
    emit(config, out);
    return;
  }
  Table table{{{"l", CellKind::kInteger}, {"coefficient", CellKind::kText}}, {}};
  for (int l = 0; l <= series.max_order(); ++l) table.rows.push_back({std::to_string(l), to_string(series[l])});
  emit(config, render(table, format));
}

struct AlphaArgs {
  int order = 251;
  int n_max = 22;
};

void run_alpha(const RunConfig& config, const AlphaArgs& args) {
  const PrecisionContext ctx = config.context();
  const BWSeries series = obtain_series(config, args.order);
  const auto alphas = alpha_table(series, args.order, args.n_max, ctx);
  Table table{{{"n", CellKind::kInteger}, {"N", CellKind::kInteger}, {"alpha", CellKind::kDecimal}}, {}};
  for (const auto& a : alphas) {
    table.rows.push_back({std::to_string(a.n), std::to_string(a.order), fixed(a.value, config)});
  }
  emit(config, render(table, parse_format(config.format)));
}

struct Table2Args {
  int order = 251;
  std::vector<std::string> couplings{"0.1", "0.3", "0.5", "1.0", "2.0"};
  std::vector<int> n_maxes{15, 20, 22};
};

void run_table2(const RunConfig& config, const Table2Args& args) {
  const PrecisionContext ctx = config.context();
  int n_max = 0;
  for (const int n : args.n_maxes) {
    if (n < 0) throw DomainError("n_max must be non-negative");
    n_max = std::max(n_max, n);
  }
  const BWSeries series = obtain_series(config, args.order);
  const auto alphas = alpha_table(series, args.order, n_max, ctx);
  const auto bounds = reference_bounds(ctx.working_digits);
  Table table{{{"g/4", CellKind::kText},
               {"n_max", CellKind::kText},
               {"E0", CellKind::kDecimal},
               {"status", CellKind::kText},
               {"matched_digits", CellKind::kText},
               {"margin", CellKind::kText}},
              {}};
  for (const auto& text : args.couplings) {
    const Real g4 = parse_real(text, ctx.working_digits);
    const Real couplings[] = {g4};
    for (const auto& row : table2(alphas, couplings, args.n_maxes, bounds)) {
      std::string status = "-";
      std::string digits = "-";
      std::string margin = "-";
      if (row.report) {
        status = row.report->inside ? "inside" : "outside";
        digits = std::to_string(row.report->matched_digits);
        margin = row.report->inside ? "0" : to_scientific(row.report->signed_margin, 3);
      }
      table.rows.push_back({text, std::to_string(row.estimate.n_max), fixed(row.estimate.value, config), status,
                            digits, margin});
    }
    if (auto b = find_bounds(bounds, g4)) {
      table.rows.push_back({text, "lb", trimmed(to_fixed(b->lower, config.output_digits)), b->source, "-", "-"});
      table.rows.push_back({text, "ub", trimmed(to_fixed(b->upper, config.output_digits)), b->source, "-", "-"});
    }
  }
  emit(config, render(table, parse_format(config.format)));
}

struct ConvergeArgs {
  int n = 0;
  int from = 65;
  int to = 251;
  int reference_order = 251;
  int order_min = 65;
};

std::vector<ConvergenceSample> samples_for(const RunConfig& config, const ConvergeArgs& args) {
  const PrecisionContext ctx = config.context();
  const int order = std::max(args.to, args.reference_order);
  const BWSeries series = obtain_series(config, order);
  const ReexpansionTables tables(series, order, ctx.working_digits);
  const FrequencySchedule schedule = FrequencySchedule::standard(ctx.working_digits);
  const Real reference = alpha(tables, args.reference_order, args.n, schedule).value;
  return convergence_series(tables, args.n, args.from, args.to, reference, schedule);
}

void run_converge(const RunConfig& config, const ConvergeArgs& args) {
  const auto samples = samples_for(config, args);
  Table table{{{"N", CellKind::kInteger},
               {"N^(1/3)", CellKind::kText},
               {"delta", CellKind::kText},
               {"ln_delta", CellKind::kText},
               {"sign", CellKind::kInteger}},
              {}};
  for (const auto& row : export_fig_data(samples)) {
    table.rows.push_back({std::to_string(row.order), to_fixed(row.cube_root, 17), to_scientific(row.delta, 17),
                          row.log_delta.is_finite() ? to_fixed(row.log_delta, 17) : "-inf",
                          std::to_string(row.sign)});
  }
  emit(config, render(table, parse_format(config.format)));
}

void run_fit(const RunConfig& config, const ConvergeArgs& args) {
  const auto samples = samples_for(config, args);
  const auto points = envelope(samples);
  const EnvelopeFit fit = fit_envelope(points, args.order_min);
  std::string used;
  for (const auto& p : points) {
    if (p.order < args.order_min) continue;
    used += (used.empty() ? "" : " ") + std::to_string(p.order);
  }
  Table table{{{"n", CellKind::kInteger},
               {"kappa0", CellKind::kText},
               {"kappa1", CellKind::kText},
               {"rms_residual", CellKind::kText},
               {"points", CellKind::kInteger},
               {"envelope_N", CellKind::kText}},
              {}};
  table.rows.push_back({std::to_string(args.n), to_fixed(fit.kappa0, 8), to_fixed(fit.kappa1, 8),
                        to_scientific(fit.rms_residual, 4), std::to_string(fit.points_used), used});
  emit(config, render(table, parse_format(config.format)));
}

struct OracleArgs {
  std::string g4 = "1.0";
  std::string omega = "1";
  std::vector<int> sizes{64};
  std::string basis_frequency;
  int digits = 60;
};

void run_oracle(const RunConfig& config, const OracleArgs& args) {
  const int digits = args.digits;
  const Real g = parse_real(args.g4, digits) * 4;
  const Real omega = parse_real(args.omega, digits);
  RitzConfig ritz;
  ritz.working_digits = digits;
  // Default basis frequency: the variational optimum scale of the quartic term.
  ritz.basis_frequency = args.basis_frequency.empty() ? std::max(omega, cbrt(g * 3) * 2 / 3)
                                                     : parse_real(args.basis_frequency, digits);
  Table table{{{"basis_size", CellKind::kInteger}, {"energy", CellKind::kDecimal}}, {}};
  for (const auto& [size, energy] : ritz_convergence_scan(g, omega, args.sizes, ritz)) {
    table.rows.push_back({std::to_string(size), to_fixed(energy, std::min(config.output_digits, digits - 5))});
  }
  emit(config, render(table, parse_format(config.format)));
}

struct EnergyArgs {
  std::string g4 = "1.0";
  std::string omega = "1";
  int n_max = 22;
  int order = 251;
};

void run_energy(const RunConfig& config, const EnergyArgs& args) {
  const PrecisionContext ctx = config.context();
  const BWSeries series = obtain_series(config, args.order);
  const auto alphas = alpha_table(series, args.order, args.n_max, ctx);
  const EnergyEstimate e = strong_energy(alphas, parse_real(args.g4, ctx.working_digits),
                                         parse_real(args.omega, ctx.working_digits), args.n_max);
  Table table{{{"g/4", CellKind::kText},
               {"omega", CellKind::kText},
               {"n_max", CellKind::kInteger},
               {"E0", CellKind::kDecimal}},
              {}};
  table.rows.push_back({args.g4, args.omega, std::to_string(args.n_max), fixed(e.value, config)});
  emit(config, render(table, parse_format(config.format)));
}

struct WnArgs {
  std::string g = "4";
  std::string omega = "1";
  int order = 1;
  std::string trial;
  bool optimize = false;
};

void run_wn(const RunConfig& config, const WnArgs& args) {
  const PrecisionContext ctx = config.context();
  const int digits = ctx.working_digits;
  const BWSeries series = obtain_series(config, args.order);
  const ReexpansionTables tables(series, args.order, digits);
  const Real g = parse_real(args.g, digits);
  const Real omega = parse_real(args.omega, digits);
  Real trial;
  Real energy;
  std::string kind = "fixed";
  if (args.optimize) {
    OptimalFrequency opt = optimal_frequency(tables, g, omega, args.order, FrequencySchedule::standard(digits));
    kind = opt.kind == OptimumKind::kStationary ? "stationary" : "turning";
    trial = std::move(opt.trial_omega);
    energy = std::move(opt.energy);
  } else {
    trial = args.trial.empty() ? omega : parse_real(args.trial, digits);
    energy = variational_energy(tables, g, omega, trial, args.order).value;
  }
  Table table{{{"N", CellKind::kInteger},
               {"Omega", CellKind::kDecimal},
               {"W_N", CellKind::kDecimal},
               {"kind", CellKind::kText}},
              {}};
  table.rows.push_back({std::to_string(args.order), fixed(trial, config), fixed(energy, config), kind});
  emit(config, render(table, parse_format(config.format)));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strong-coupling expansion of the quartic anharmonic oscillator via variational perturbation theory"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  app.add_option("--format", config.format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  app.add_option("-o,--output", config.output, "Write to this file instead of stdout");
  app.add_option("--cache-dir", config.cache_dir, "Coefficient cache directory (else $VPT_CACHE_DIR, else ./cache)");
  app.add_option("--working-digits", config.working_digits, "Working precision in decimal digits")
      ->capture_default_str();
  app.add_option("--digits", config.output_digits, "Significant digits in output")->capture_default_str();

  BwArgs bw;
  auto* bw_cmd = app.add_subcommand("bw", "Exact perturbation coefficients e_0..e_L (cached)");
  bw_cmd->add_option("--order", bw.order, "Highest order L")->capture_default_str();

  AlphaArgs alpha_args;
  auto* alpha_cmd = app.add_subcommand("alpha", "Strong-coupling coefficients alpha_0..alpha_nmax");
  alpha_cmd->add_option("--order", alpha_args.order, "Truncation order N")->capture_default_str();
  alpha_cmd->add_option("--nmax", alpha_args.n_max, "Highest coefficient index")->capture_default_str();

  Table2Args t2;
  auto* t2_cmd = app.add_subcommand("table2", "Ground-state energies from the strong-coupling series vs bounds");
  t2_cmd->add_option("--order", t2.order, "Truncation order N for alpha_n")->capture_default_str();
  t2_cmd->add_option("--g4", t2.couplings, "Couplings g/4")->delimiter(',');
  t2_cmd->add_option("--nmax", t2.n_maxes, "Series truncations n_max")->delimiter(',');

  ConvergeArgs conv;
  auto* conv_cmd = app.add_subcommand("converge", "Delta_N = |(alpha_n)_N - alpha_n| over a range of N");
  conv_cmd->add_option("--n", conv.n, "Coefficient index n")->capture_default_str();
  conv_cmd->add_option("--from", conv.from, "First order N")->capture_default_str();
  conv_cmd->add_option("--to", conv.to, "Last order N")->capture_default_str();
  conv_cmd->add_option("--reference-order", conv.reference_order, "Order of the reference alpha_n")
      ->capture_default_str();

  ConvergeArgs fit;
  auto* fit_cmd = app.add_subcommand("fit", "Fit Delta_N = exp(-kappa0 - kappa1 N^(1/3)) to the envelope");
  fit_cmd->add_option("--n", fit.n, "Coefficient index n")->capture_default_str();
  fit_cmd->add_option("--nmin", fit.order_min, "Smallest order used in the fit")->capture_default_str();
  fit_cmd->add_option("--from", fit.from, "First order N")->capture_default_str();
  fit_cmd->add_option("--to", fit.to, "Last order N")->capture_default_str();
  fit_cmd->add_option("--reference-order", fit.reference_order, "Order of the reference alpha_n")
      ->capture_default_str();

  OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Rayleigh-Ritz ground-state energy in a harmonic basis");
  oracle_cmd->add_option("--g4", oracle.g4, "Coupling g/4")->capture_default_str();
  oracle_cmd->add_option("--omega", oracle.omega, "Harmonic frequency")->capture_default_str();
  oracle_cmd->add_option("--basis", oracle.sizes, "Basis size(s), ascending")->delimiter(',');
  oracle_cmd->add_option("--basis-frequency", oracle.basis_frequency, "Basis frequency");
  oracle_cmd->add_option("--oracle-digits", oracle.digits, "Working digits of the eigen solve")
      ->capture_default_str();

  EnergyArgs energy;
  auto* energy_cmd = app.add_subcommand("energy", "Evaluate the strong-coupling series");
  energy_cmd->add_option("--g4", energy.g4, "Coupling g/4")->capture_default_str();
  energy_cmd->add_option("--omega", energy.omega, "Harmonic frequency")->capture_default_str();
  energy_cmd->add_option("--nmax", energy.n_max, "Series truncation")->capture_default_str();
  energy_cmd->add_option("--order", energy.order, "Truncation order N for alpha_n")->capture_default_str();

  WnArgs wn;
  auto* wn_cmd = app.add_subcommand("wn", "Variational energy W_N(g, Omega)");
  wn_cmd->add_option("--g", wn.g, "Quartic coupling g")->capture_default_str();
  wn_cmd->add_option("--omega", wn.omega, "Harmonic frequency")->capture_default_str();
  wn_cmd->add_option("--N", wn.order, "Order N")->capture_default_str();
  wn_cmd->add_option("--trial", wn.trial, "Trial frequency Omega (default omega)");
  wn_cmd->add_flag("--optimize", wn.optimize, "Use the optimal trial frequency");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (bw_cmd->parsed()) run_bw(config, bw);
    if (alpha_cmd->parsed()) run_alpha(config, alpha_args);
    if (t2_cmd->parsed()) run_table2(config, t2);
    if (conv_cmd->parsed()) run_converge(config, conv);
    if (fit_cmd->parsed()) run_fit(config, fit);
    if (oracle_cmd->parsed()) run_oracle(config, oracle);
    if (energy_cmd->parsed()) run_energy(config, energy);
    if (wn_cmd->parsed()) run_wn(config, wn);
  } catch (const IoError& e) {
    std::cerr << "vpt: I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const DomainError& e) {
    std::cerr << "vpt: " << e.what() << "\n";
    return kExitDomain;
  }
  return 0;
}
