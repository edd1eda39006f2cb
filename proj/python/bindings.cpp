// Python bindings. Real values cross the boundary as decimal strings so no
// digits are lost; rationals as "num/den".

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "vpt/benderwu.hpp"
#include "vpt/diagnostics.hpp"
#include "vpt/errors.hpp"
#include "vpt/evaluate.hpp"
#include "vpt/oracle.hpp"
#include "vpt/strongcoupling.hpp"
#include "vpt/vptcore.hpp"

namespace py = pybind11;
using namespace vpt;

namespace {

PrecisionContext context(int working_digits, int digits) {
  PrecisionContext ctx{working_digits, digits};
  ctx.validate();
  return ctx;
}

std::vector<std::string> coefficient_strings(const BWSeries& s) {
  std::vector<std::string> out;
  for (const auto& q : s.coefficients()) out.push_back(to_string(q));
  return out;
}

BWSeries series_from_strings(const std::vector<std::string>& items) {
  std::vector<ExactRational> q;
  q.reserve(items.size());
  for (const auto& s : items) q.push_back(parse_rational(s));
  BWSeries series(std::move(q));
  series.validate();
  return series;
}

std::vector<std::string> alpha_strings(const BWSeries& bw, int order, int n_max, int working_digits, int digits) {
  const PrecisionContext ctx = context(working_digits, digits);
  std::vector<StrongCouplingCoefficient> table;
  {
    py::gil_scoped_release release;
    table = alpha_table(bw, order, n_max, ctx);
  }
  std::vector<std::string> out;
  for (const auto& a : table) out.push_back(to_fixed(a.value, digits));
  return out;
}

std::string energy_string(const BWSeries& bw, const std::string& g4, const std::string& omega, int n_max, int order,
                          int working_digits, int digits) {
  const PrecisionContext ctx = context(working_digits, digits);
  py::gil_scoped_release release;
  const auto alphas = alpha_table(bw, order, n_max, ctx);
  const auto e = strong_energy(alphas, Real::parse(g4, working_digits), Real::parse(omega, working_digits), n_max);
  return to_fixed(e.value, digits);
}

py::dict bounds_report(const BWSeries& bw, const std::string& g4, int n_max, int order, int working_digits) {
  const PrecisionContext ctx = context(working_digits, kDefaultOutputDigits);
  const Real g = Real::parse(g4, working_digits);
  const auto bounds = reference_bounds(working_digits);
  const auto record = find_bounds(bounds, g);
  if (!record) throw DomainError("no reference bounds for g/4 = " + g4);
  const auto alphas = alpha_table(bw, order, n_max, ctx);
  const auto estimate = strong_energy(alphas, g, Real(1L, working_digits), n_max);
  const BoundsReport r = check_bounds(estimate, *record);
  py::dict d;
  d["value"] = to_fixed(estimate.value, kDefaultOutputDigits);
  d["lower"] = to_fixed(record->lower, kDefaultOutputDigits);
  d["upper"] = to_fixed(record->upper, kDefaultOutputDigits);
  d["inside"] = r.inside;
  d["signed_margin"] = to_scientific(r.signed_margin, 6);
  d["matched_digits"] = r.matched_digits;
  return d;
}

std::string variational(const BWSeries& bw, const std::string& g, const std::string& omega, const std::string& trial,
                        int order, int working_digits, int digits) {
  const int d = working_digits;
  return to_fixed(variational_energy(bw, Real::parse(g, d), Real::parse(omega, d), Real::parse(trial, d), order).value,
                  digits);
}

py::tuple optimal(const BWSeries& bw, const std::string& g, const std::string& omega, int order, int working_digits,
                  int digits) {
  const PrecisionContext ctx = context(working_digits, digits);
  const OptimalFrequency opt =
      optimal_frequency(bw, Real::parse(g, working_digits), Real::parse(omega, working_digits), order, ctx);
  return py::make_tuple(to_fixed(opt.trial_omega, digits), to_fixed(opt.energy, digits),
                        opt.kind == OptimumKind::kStationary ? "stationary" : "turning");
}

py::dict fit(const BWSeries& bw, int n, int order_min, int order_from, int order_to, int reference_order,
             int working_digits) {
  EnvelopeFit f;
  std::vector<int> used;
  {
    py::gil_scoped_release release;
    const int top = std::max(order_to, reference_order);
    const ReexpansionTables tables(bw, top, working_digits);
    const FrequencySchedule sched = FrequencySchedule::standard(working_digits);
    const Real ref = alpha(tables, reference_order, n, sched).value;
    const auto samples = convergence_series(tables, n, order_from, order_to, ref, sched);
    const auto points = envelope(samples);
    f = fit_envelope(points, order_min);
    for (const auto& p : points) {
      if (p.order >= order_min) used.push_back(p.order);
    }
  }
  py::dict d;
  d["kappa0"] = f.kappa0.to_double();
  d["kappa1"] = f.kappa1.to_double();
  d["rms_residual"] = f.rms_residual.to_double();
  d["envelope_orders"] = used;
  return d;
}

std::vector<std::pair<int, std::string>> ritz(const std::string& g4, const std::string& omega,
                                              const std::vector<int>& sizes, const std::string& basis_frequency,
                                              int working_digits, int digits) {
  RitzConfig config;
  config.working_digits = working_digits;
  config.basis_frequency = Real::parse(basis_frequency, working_digits);
  const Real g = Real::parse(g4, working_digits) * 4;
  const Real w = Real::parse(omega, working_digits);
  std::vector<std::pair<int, Real>> scan;
  {
    py::gil_scoped_release release;
    scan = ritz_convergence_scan(g, w, sizes, config);
  }
  std::vector<std::pair<int, std::string>> out;
  for (const auto& [size, e] : scan) out.emplace_back(size, to_fixed(e, digits));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Strong-coupling expansion of the quartic anharmonic oscillator";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);

  py::class_<BWSeries>(m, "BWSeries")
      .def(py::init(&series_from_strings), py::arg("coefficients"))
      .def_static(
          "generate",
          [](int order) {
            py::gil_scoped_release release;
            return generate(order);
          },
          py::arg("order"))
      .def_static("load", &load_cache, py::arg("path"))
      .def("save", [](const BWSeries& s, const std::filesystem::path& p) { save_cache(s, p); }, py::arg("path"))
      .def_property_readonly("max_order", &BWSeries::max_order)
      .def("coefficients", &coefficient_strings)
      .def("truncated", &BWSeries::truncated, py::arg("order"))
      .def("verify_head", [](const BWSeries& s) { return verify_head(s); })
      .def("__len__", [](const BWSeries& s) { return s.max_order() + 1; })
      .def("__getitem__", [](const BWSeries& s, int l) {
        if (l < 0 || l > s.max_order()) throw py::index_error();
        return to_string(s[l]);
      })
      .def("__eq__", [](const BWSeries& a, const BWSeries& b) { return a == b; });

  m.def("alpha_table", &alpha_strings, py::arg("series"), py::arg("order") = 251, py::arg("n_max") = 22,
        py::arg("working_digits") = kDefaultWorkingDigits, py::arg("digits") = kDefaultOutputDigits,
        "Strong-coupling coefficients alpha_0..alpha_nmax at truncation order N.");
  m.def("strong_energy", &energy_string, py::arg("series"), py::arg("g4"), py::arg("omega") = "1",
        py::arg("n_max") = 22, py::arg("order") = 251, py::arg("working_digits") = kDefaultWorkingDigits,
        py::arg("digits") = kDefaultOutputDigits, "Ground-state energy from the strong-coupling series.");
  m.def("bounds_report", &bounds_report, py::arg("series"), py::arg("g4"), py::arg("n_max") = 22,
        py::arg("order") = 251, py::arg("working_digits") = kDefaultWorkingDigits,
        "Series energy at omega = 1 compared with the rigorous reference bounds.");
  m.def("variational_energy", &variational, py::arg("series"), py::arg("g"), py::arg("omega"), py::arg("trial"),
        py::arg("order"), py::arg("working_digits") = 100, py::arg("digits") = kDefaultOutputDigits);
  m.def("optimal_frequency", &optimal, py::arg("series"), py::arg("g"), py::arg("omega"), py::arg("order"),
        py::arg("working_digits") = 100, py::arg("digits") = kDefaultOutputDigits,
        "(Omega_N, W_N, kind) with kind 'stationary' or 'turning'.");
  m.def("fit_envelope", &fit, py::arg("series"), py::arg("n"), py::arg("order_min") = 65,
        py::arg("order_from") = 65, py::arg("order_to") = 251, py::arg("reference_order") = 251,
        py::arg("working_digits") = kDefaultWorkingDigits);
  m.def("ritz_scan", &ritz, py::arg("g4"), py::arg("omega") = "1", py::arg("sizes") = std::vector<int>{64},
        py::arg("basis_frequency") = "2", py::arg("working_digits") = 60, py::arg("digits") = kDefaultOutputDigits,
        "Rayleigh-Ritz ground-state energies for ascending basis sizes.");
  m.def("schedule_frequency", [](const std::string& g, int order, int digits) {
    return to_fixed(schedule_frequency(Real::parse(g, digits + 20), order, FrequencySchedule::standard(digits + 20)),
                    digits);
  }, py::arg("g"), py::arg("order"), py::arg("digits") = kDefaultOutputDigits);
}
