#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "stiffpress/config.hpp"
#include "stiffpress/diagnostics.hpp"
#include "stiffpress/elliptic.hpp"
#include "stiffpress/errors.hpp"
#include "stiffpress/hyperbolic.hpp"
#include "stiffpress/io.hpp"
#include "stiffpress/run.hpp"
#include "stiffpress/selftest.hpp"
#include "stiffpress/sweep.hpp"

namespace py = pybind11;
using namespace stiffpress;

namespace {

py::array_t<double> to_array(const std::vector<double>& v) {
  return py::array_t<double>(static_cast<py::ssize_t>(v.size()), v.data());
}

Field to_field(const std::vector<double>& v) { return Field(v); }

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Porous-medium Keller-Segel solvers and incompressible-limit diagnostics";

  py::register_exception<ConfigError>(mod, "ConfigError", PyExc_ValueError);
  auto numerical = py::register_exception<NumericalError>(mod, "NumericalError", PyExc_RuntimeError);
  py::register_exception<StepRejected>(mod, "StepRejected", numerical.ptr());

  py::class_<Grid1D>(mod, "Grid1D")
      .def_readonly("x_min", &Grid1D::x_min)
      .def_readonly("x_max", &Grid1D::x_max)
      .def_readonly("n_cells", &Grid1D::n_cells)
      .def_readonly("h", &Grid1D::h)
      .def("centers", [](const Grid1D& g) { return to_array(g.centers()); })
      .def("__repr__", [](const Grid1D& g) {
        return "Grid1D(" + format_short(g.x_min) + ", " + format_short(g.x_max) + ", " +
               std::to_string(g.n_cells) + ")";
      });
  mod.def("build_grid", &build_grid, py::arg("x_min"), py::arg("x_max"), py::arg("n_cells"));

  py::class_<ModelParams>(mod, "ModelParams")
      .def(py::init<>())
      .def_readwrite("m", &ModelParams::m)
      .def_readwrite("K", &ModelParams::K)
      .def_readwrite("chi", &ModelParams::chi)
      .def_readwrite("D", &ModelParams::D)
      .def_readwrite("cfl", &ModelParams::cfl)
      .def_readwrite("dt_max_cap", &ModelParams::dt_max_cap)
      .def_readwrite("newton_tol", &ModelParams::newton_tol)
      .def_readwrite("newton_max_iter", &ModelParams::newton_max_iter)
      .def_readwrite("max_halvings", &ModelParams::max_halvings)
      .def("validate", &ModelParams::validate);

  py::class_<SimState>(mod, "SimState")
      .def_readonly("t", &SimState::t)
      .def_property_readonly("u", [](const SimState& s) { return to_array(s.u.values); })
      .def_property_readonly("c", [](const SimState& s) { return to_array(s.c.values); })
      .def_property_readonly("P", [](const SimState& s) { return to_array(s.P.values); });

  mod.def(
      "solve_chemo",
      [](const std::vector<double>& u, const Grid1D& g) {
        return to_array(solve_chemo(to_field(u), g).values);
      },
      py::arg("u"), py::arg("grid"));
  mod.def(
      "compute_pressure",
      [](const std::vector<double>& u, double m) {
        return to_array(compute_pressure(to_field(u), m).values);
      },
      py::arg("u"), py::arg("m"));
  mod.def(
      "make_state",
      [](double t, const std::vector<double>& u, const ModelParams& p, const Grid1D& g) {
        return make_state(t, to_field(u), p, g);
      },
      py::arg("t"), py::arg("u"), py::arg("params"), py::arg("grid"));
  mod.def("stable_dt", &stable_dt, py::arg("state"), py::arg("params"), py::arg("grid"));
  mod.def(
      "step_pme",
      [](const SimState& s, const ModelParams& p, const Grid1D& g, double dt) {
        return step_pme(s, p, g, dt).state;
      },
      py::arg("state"), py::arg("params"), py::arg("grid"), py::arg("dt"));
  mod.def(
      "step_hyperbolic",
      [](const SimState& s, const ModelParams& p, const Grid1D& g, double dt) {
        return step_hyperbolic(s, p, g, dt).state;
      },
      py::arg("state"), py::arg("params"), py::arg("grid"), py::arg("dt"));

  mod.def(
      "complementarity_l1",
      [](const SimState& s, const ModelParams& p, const Grid1D& g) {
        return complementarity_residual(s, p, g).l1;
      },
      py::arg("state"), py::arg("params"), py::arg("grid"));
  mod.def(
      "kinetic_metric",
      [](const std::vector<double>& u, const Grid1D& g, double K, std::size_t window) {
        return kinetic_two_valued_metric(to_field(u), g, make_kinetic_grid(K, 64, 0.05, window));
      },
      py::arg("u"), py::arg("grid"), py::arg("K"), py::arg("window_cells") = 5);
  mod.def("pressure_sup_bound", &pressure_sup_bound, py::arg("params"));

  py::enum_<SolverKind>(mod, "SolverKind")
      .value("Pme", SolverKind::Pme)
      .value("Hyperbolic", SolverKind::Hyperbolic);

  py::class_<RunConfig>(mod, "RunConfig")
      .def_readwrite("x_min", &RunConfig::x_min)
      .def_readwrite("x_max", &RunConfig::x_max)
      .def_readwrite("n_cells", &RunConfig::n_cells)
      .def_readwrite("params", &RunConfig::params)
      .def_readwrite("t_final", &RunConfig::t_final)
      .def_readwrite("snapshot_times", &RunConfig::snapshot_times)
      .def_readwrite("output_dir", &RunConfig::output_dir)
      .def_readwrite("solver", &RunConfig::solver)
      .def_readonly("warnings", &RunConfig::warnings)
      .def("grid", &RunConfig::grid);
  mod.def(
      "parse_config", [](const std::string& text) { return parse_config(text); },
      py::arg("text"));
  mod.def(
      "load_config", [](const std::string& path) { return load_config(path); }, py::arg("path"));
  mod.def("fig1_preset", [] { return std::string(fig1_preset()); });
  mod.def("fig2_preset", [] { return std::string(fig2_preset()); });

  py::class_<RunningTotals>(mod, "RunningTotals")
      .def_readonly("grad_P_energy", &RunningTotals::grad_P_energy)
      .def_readonly("excess_sat_sq", &RunningTotals::excess_sat_sq)
      .def_readonly("defect", &RunningTotals::defect)
      .def_readonly("max_P", &RunningTotals::max_P)
      .def_readonly("clipped_mass", &RunningTotals::clipped_mass)
      .def_readonly("steps", &RunningTotals::steps);

  py::class_<RunResult>(mod, "RunResult")
      .def_readonly("grid", &RunResult::grid)
      .def_readonly("params", &RunResult::params)
      .def_readonly("totals", &RunResult::totals)
      .def_readonly("initial_mass", &RunResult::initial_mass)
      .def_readonly("max_rel_mass_drift", &RunResult::max_rel_mass_drift)
      .def_readonly("max_rel_step_clip", &RunResult::max_rel_step_clip)
      .def_readonly("rejected_steps", &RunResult::rejected_steps)
      .def("states", &RunResult::states);
  // Long runs release the GIL.
  mod.def(
      "run",
      [](const RunConfig& cfg, bool keep_diagnostics) {
        py::gil_scoped_release release;
        return run(cfg, {keep_diagnostics});
      },
      py::arg("config"), py::arg("keep_diagnostics") = false);

  py::class_<SweepRow>(mod, "SweepRow")
      .def_readonly("m", &SweepRow::m)
      .def_readonly("K", &SweepRow::K)
      .def_readonly("t", &SweepRow::t)
      .def_readonly("l1_dist_to_limit", &SweepRow::l1_dist_to_limit)
      .def_readonly("grad_P_energy", &SweepRow::grad_P_energy)
      .def_readonly("comp_residual_l1", &SweepRow::comp_residual_l1)
      .def_readonly("excess_sat_total", &SweepRow::excess_sat_total)
      .def_readonly("max_P", &SweepRow::max_P)
      .def_readonly("kinetic_metric", &SweepRow::kinetic_metric)
      .def_readonly("ok", &SweepRow::ok)
      .def_readonly("error", &SweepRow::error);
  mod.def(
      "run_sweep",
      [](const RunConfig& base, const std::vector<double>& m, const std::vector<double>& K,
         unsigned threads) {
        py::gil_scoped_release release;
        SweepOptions opts;
        opts.threads = threads;
        return run_sweep(base, m, K, opts);
      },
      py::arg("config"), py::arg("m"), py::arg("K"), py::arg("threads") = 0);
  mod.def("sweep_csv", &sweep_csv, py::arg("rows"));

  mod.def("selftest", [] {
    const SelfTestReport r = selftest();
    return py::make_tuple(r.ok(), r.text());
  });
}
