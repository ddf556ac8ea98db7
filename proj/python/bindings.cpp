#include "cpforce/errors.hpp"
#include "cpforce/forces.hpp"
#include "cpforce/materials.hpp"
#include "cpforce/run_config.hpp"
#include "cpforce/shifts.hpp"
#include "cpforce/sweep.hpp"
#include "cpforce/table.hpp"
#include "cpforce/units.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace cpforce;

namespace {

py::dict table_dict(const Table& t) {
  py::dict d;
  py::dict meta;
  for (const auto& [k, v] : t.metadata) meta[py::str(k)] = v;
  d["metadata"] = meta;
  d["columns"] = t.columns;
  d["rows"] = t.rows;
  d["csv"] = to_csv(t);
  return d;
}

QuadratureSpec spec_with(double rel_tol, double epsilon_split) {
  QuadratureSpec s;
  s.rel_tol = rel_tol;
  s.epsilon_split = epsilon_split;
  s.validate();
  return s;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.attr("__version__") = kVersion;

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<UnsupportedModel>(m, "UnsupportedModel", PyExc_ValueError);
  py::register_exception<NumericError>(m, "NumericError", PyExc_RuntimeError);

  py::class_<Vacuum>(m, "Vacuum").def(py::init<>());
  py::class_<PerfectConductor>(m, "PerfectConductor").def(py::init<>());
  py::class_<Plasma>(m, "Plasma")
      .def(py::init([](double wp) { return Plasma{wp}; }), py::arg("omega_p"))
      .def_readonly("omega_p", &Plasma::omega_p);
  py::class_<Drude>(m, "Drude")
      .def(py::init([](double wp, double nu) { return Drude{wp, nu}; }), py::arg("omega_p"), py::arg("nu"))
      .def_readonly("omega_p", &Drude::omega_p)
      .def_readonly("nu", &Drude::nu);
  py::class_<TwoPlateau>(m, "TwoPlateau")
      .def(py::init([](double p1, double p2, double w1, double w2) { return TwoPlateau{p1, p2, w1, w2}; }),
           py::arg("omega_p1"), py::arg("omega_p2"), py::arg("omega_1"), py::arg("omega_2"));
  py::class_<SixOscillator>(m, "SixOscillator")
      .def_static("from_file", &read_six_oscillator, py::arg("path"))
      .def_readonly("omega_p", &SixOscillator::omega_p);
  py::class_<SuperconductorMB>(m, "Superconductor")
      .def_static("clean", [](double d, double sn) { return SuperconductorMB::clean(d, sn); },
                  py::arg("delta_omega"), py::arg("sigma_n"))
      .def_static("impure", [](double d, double sn, double tau) { return SuperconductorMB::impure(d, sn, tau); },
                  py::arg("delta_omega"), py::arg("sigma_n"), py::arg("tau"))
      .def_static("sigma_n_from_omega_sp", &SuperconductorMB::sigma_n_from_omega_sp)
      .def_property_readonly("delta_omega", &SuperconductorMB::delta_omega)
      .def_property_readonly("broadening", &SuperconductorMB::broadening)
      .def("conductivity", [](const SuperconductorMB& s, double w) {
        const auto c = s.conductivity(w);
        return py::make_tuple(c.sigma1_over_sigman, c.sigma2_over_sigman);
      });

  m.def("ev_to_angular", &ev_to_angular);
  m.def("angular_to_ev", &angular_to_ev);
  m.def("epsilon_imag_axis", &epsilon_imag_axis, py::arg("model"), py::arg("omega"));
  m.def("epsilon_real_axis", &epsilon_real_axis, py::arg("model"), py::arg("omega"));
  m.def("f_impurity", &f_impurity, py::arg("x"));
  m.def("mb_clean", [](double w) {
    const auto c = mb_clean_reduced(w);
    return py::make_tuple(c.sigma1_over_sigman, c.sigma2_over_sigman);
  }, py::arg("w"));
  m.def("mb_impure", [](double w, double b) {
    const auto c = mb_impure_reduced(w, b);
    return py::make_tuple(c.sigma1_over_sigman, c.sigma2_over_sigman);
  }, py::arg("w"), py::arg("b"));

  m.def("tilde_i", [](double x) { return tilde_i(x); }, py::arg("x"));
  m.def(
      "force_kernels",
      [](double x, const MaterialModel& model, double omega_a, double h_over_z, bool electric, double rel_tol,
         double epsilon_split) {
        return force_kernels(x, model, omega_a, h_over_z, spec_with(rel_tol, epsilon_split),
                             electric ? Coupling::Electric : Coupling::Magnetic);
      },
      py::arg("x"), py::arg("model"), py::arg("omega_a"), py::arg("h_over_z") = kInfinity,
      py::arg("electric") = false, py::arg("rel_tol") = 1e-9, py::arg("epsilon_split") = 1.0);
  m.def(
      "force",
      [](double x, const MaterialModel& model, double omega_a, std::array<double, 3> w, double h_over_z,
         bool electric) {
        const Weights wt{w[0], w[1], w[2]};
        return electric ? F_E(x, wt, model, omega_a, h_over_z) : F_M(x, wt, model, omega_a, h_over_z);
      },
      py::arg("x"), py::arg("model"), py::arg("omega_a"), py::arg("weights") = std::array<double, 3>{0.25, 0.25, 0.25},
      py::arg("h_over_z") = kInfinity, py::arg("electric") = false);
  m.def(
      "ground_shift",
      [](double z, double omega_t, const MaterialModel& model, std::array<double, 3> w) {
        return ground_shift(SlabGeometry{z, kInfinity}, {magnetic_transition(omega_t, w)}, model).delta_omega;
      },
      py::arg("z"), py::arg("omega_t"), py::arg("model"), py::arg("weights") = std::array<double, 3>{0.25, 0.25, 0.25});
  m.def(
      "spin_flip_ratio",
      [](double z, double omega, const MaterialModel& model, std::array<double, 3> w) {
        const TransitionSet ts{magnetic_transition(omega, w)};
        return spin_flip_rate(SlabGeometry{z, kInfinity}, omega, ts, model) / free_space_rate(omega, ts);
      },
      py::arg("z"), py::arg("omega"), py::arg("model"), py::arg("weights") = std::array<double, 3>{0.25, 0.25, 0.25});
  m.def(
      "regime",
      [](double x, double alpha, double nu_bar) {
        const auto p = regime_classify(x, alpha, nu_bar);
        return py::make_tuple(regime_name(p.regime), p.predicted_F_M);
      },
      py::arg("x"), py::arg("alpha"), py::arg("nu_bar") = 0.0);

  m.def(
      "sweep",
      [](const std::string& path, const std::vector<std::string>& overrides) {
        const auto out = run_sweep(load_config(path, overrides));
        return table_dict(out.table);
      },
      py::arg("config"), py::arg("overrides") = std::vector<std::string>{});
  m.def(
      "sweep_ini",
      [](const std::string& text) { return table_dict(run_sweep(config_from_tree(parse_ini_string(text))).table); },
      py::arg("text"));
  m.def("preset_names", &preset_names);
  m.def(
      "figure",
      [](const std::string& name, const std::string& out_dir, const std::string& params) {
        const auto r = run_preset(name, out_dir, params);
        return py::make_tuple(r.files, r.failures);
      },
      py::arg("preset"), py::arg("output_dir"), py::arg("params") = "");
}
