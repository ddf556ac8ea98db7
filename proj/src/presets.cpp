#include "cpforce/errors.hpp"
#include "cpforce/sweep.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace cpforce {

namespace {

KeyTree base(const std::string& model) {
  return {{"material.model", model},
          {"atom.weights", "0.25, 0.25, 0.25"},
          {"run.quantity", "force"},
          {"run.coupling", "magnetic"},
          {"sweep.variable", "x"},
          {"sweep.min", "1e-3"},
          {"sweep.max", "1e2"},
          {"sweep.points_per_decade", "20"},
          {"sweep.spacing", "log"}};
}

KeyTree with(KeyTree t, std::initializer_list<std::pair<const std::string, std::string>> kv) {
  for (const auto& [k, v] : kv) t[k] = v;
  return t;
}

KeyTree plasma_alpha(const std::string& alpha) { return with(base("plasma"), {{"material.alpha", alpha}}); }

KeyTree sapphire() {
  return with(base("two-plateau"), {{"material.omega_p1_ev", "0.16"},
                                    {"material.omega_p2_ev", "30.8"},
                                    {"material.omega_1_ev", "0.07"},
                                    {"material.omega_2_ev", "20.8"}});
}

KeyTree niobium(const std::string& broadening) {
  KeyTree t{{"material.model", "superconductor"},
            {"material.tc_k", "9.25"},
            {"material.omega_sp_ev", "2.4"},
            {"run.quantity", "sigma"},
            {"sweep.variable", "q"},
            {"sweep.min", "1e-2"},
            {"sweep.max", "1e2"},
            {"sweep.points_per_decade", "20"},
            {"sweep.spacing", "log"}};
  if (!broadening.empty()) t["material.broadening"] = broadening;
  return t;
}

} // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{"fig-alpha-sweep", "fig-drude-nu-sweep", "fig-decca",
                                              "fig-thickness",   "fig-sapphire",       "fig-sigma-mb",
                                              "fig-dual",        "fig-sapphire-dual"};
  return names;
}

std::vector<PresetCurve> preset_curves(const std::string& name, const std::string& parameter_file) {
  std::vector<PresetCurve> c;
  if (name == "fig-alpha-sweep") {
    for (const char* a : {"1", "10", "100", "1000", "10000"})
      c.push_back({std::string("alpha_") + a, plasma_alpha(a)});
    c.push_back({"alpha_inf", base("pc")});
  } else if (name == "fig-drude-nu-sweep") {
    for (const char* nu : {"0", "1", "10", "100", "1000", "10000"})
      c.push_back({std::string("nu_bar_") + nu,
                   with(base("drude"), {{"material.alpha", "1"}, {"material.nu_bar", nu}})});
  } else if (name == "fig-decca") {
    if (parameter_file.empty())
      throw ConfigError("fig-decca needs the six-oscillator (f_j, omega_j, g_j) table, which is not "
                        "published with the force data; pass it with --params <file>");
    c.push_back({"plasma", with(base("plasma"), {{"material.omega_p_ev", "8.9"}, {"atom.omega_a_ev", "8.9"}})});
    c.push_back({"six_oscillator",
                 with(base("six-oscillator"), {{"material.parameter_file", std::filesystem::absolute(parameter_file).string()},
                                               {"atom.omega_a_ev", "8.9"}})});
  } else if (name == "fig-thickness") {
    for (const char* h : {"inf", "1e-1", "1e-2", "1e-4", "1e-6"})
      c.push_back({std::string("h_over_z_") + h, with(plasma_alpha("1e4"), {{"geometry.h_over_z", h}})});
  } else if (name == "fig-sapphire") {
    c.push_back({"sapphire_560kHz", with(sapphire(), {{"atom.omega_a_hz", "560e3"}})});
    c.push_back({"sapphire_omega_p", with(sapphire(), {{"atom.omega_a_ev", "30.8"}})});
    c.push_back({"plasma_alpha_1", plasma_alpha("1")});
  } else if (name == "fig-sigma-mb") {
    c.push_back({"clean", niobium("")});
    c.push_back({"niobium_13.61", niobium("13.61")});
  } else if (name == "fig-dual") {
    c.push_back({"electric_plasma_alpha_1", with(plasma_alpha("1"), {{"run.coupling", "electric"}})});
    c.push_back({"magnetic_plasma_alpha_1", plasma_alpha("1")});
    c.push_back({"magnetic_pc", base("pc")});
    c.push_back({"electric_pc", with(base("pc"), {{"run.coupling", "electric"}})});
  } else if (name == "fig-sapphire-dual") {
    c.push_back({"sapphire_560kHz", with(sapphire(), {{"atom.omega_a_hz", "560e3"}, {"run.coupling", "electric"}})});
    c.push_back({"plasma_alpha_1", with(plasma_alpha("1"), {{"run.coupling", "electric"}})});
    c.push_back({"sapphire_9eV", with(sapphire(), {{"atom.omega_a_ev", "9.0"}, {"run.coupling", "electric"}})});
  } else {
    std::ostringstream os;
    os << "unknown preset '" << name << "'; known presets:";
    for (const auto& n : preset_names()) os << ' ' << n;
    throw ConfigError(os.str());
  }
  for (auto& p : c) p.file = name + "_" + p.file + ".csv";
  return c;
}

PresetOutcome run_preset(const std::string& name, const std::string& out_dir,
                         const std::string& parameter_file, const std::vector<std::string>& overrides) {
  const auto curves = preset_curves(name, parameter_file);
  std::filesystem::create_directories(out_dir);
  PresetOutcome out;
  for (const auto& curve : curves) {
    KeyTree t = curve.tree;
    t["run.preset"] = name;
    for (const auto& o : overrides) apply_override(t, o);
    const auto cfg = config_from_tree(t);
    const auto r = run_sweep(cfg);
    const auto path = (std::filesystem::path(out_dir) / curve.file).string();
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot write " + path);
    write_csv(f, r.table);
    out.files.push_back(path);
    if (!r.ok()) {
      std::ostringstream os;
      os << curve.file << ":";
      for (double x : r.failed) os << ' ' << x;
      out.failures.push_back(os.str());
    }
  }
  return out;
}

} // namespace cpforce
