#include "cpforce/errors.hpp"
#include "cpforce/forces.hpp"
#include "cpforce/shifts.hpp"
#include "cpforce/sweep.hpp"
#include "cpforce/units.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace cpforce;

namespace {

struct Common {
  std::string config;
  std::vector<std::string> sets;
  std::string output;
};

struct FlagSpec {
  const char* flag;
  const char* key;
  const char* help;
};

const FlagSpec kFlags[] = {
    {"--model", "material.model", "vacuum, pc, plasma, drude, six-oscillator, two-plateau, superconductor"},
    {"--alpha", "material.alpha", "omega_p / omega_A"},
    {"--omega-p-ev", "material.omega_p_ev", "plasma frequency (eV)"},
    {"--nu-ev", "material.nu_ev", "Drude relaxation frequency (eV)"},
    {"--nu-bar", "material.nu_bar", "nu / omega_A"},
    {"--params", "material.parameter_file", "six-oscillator parameter file"},
    {"--delta-ev", "material.delta_ev", "superconducting gap (eV)"},
    {"--tc-k", "material.tc_k", "critical temperature (K), sets the gap"},
    {"--omega-sp-ev", "material.omega_sp_ev", "superconductor pole frequency (eV)"},
    {"--broadening", "material.broadening", "hbar/(tau Delta)"},
    {"--omega-a-ev", "atom.omega_a_ev", "transition frequency (eV)"},
    {"--omega-a-hz", "atom.omega_a_hz", "transition frequency (Hz)"},
    {"--weights", "atom.weights", "wx,wy,wz"},
    {"--g-s", "atom.g_s", "electron g-factor"},
    {"--dipole", "atom.dipole_c_m", "electric dipole moment (C m)"},
    {"--h-over-z", "geometry.h_over_z", "slab thickness over distance (inf allowed)"},
    {"--h-m", "geometry.h_m", "slab thickness (m)"},
    {"--coupling", "run.coupling", "magnetic, electric or both"},
    {"--quantity", "run.quantity", "force, shift or sigma (sweep)"},
    {"--rel-tol", "quadrature.rel_tol", "relative tolerance"},
    {"--abs-tol", "quadrature.abs_tol", "absolute tolerance"},
    {"--epsilon-split", "quadrature.epsilon_split", "modular split point"},
};

void add_common(CLI::App* app, Common& c, std::vector<std::string>& storage) {
  app->add_option("--config", c.config, "INI configuration file");
  app->add_option("--set", c.sets, "override, section.key=value (repeatable)");
  app->add_option("--output,-o", c.output, "output file (default: standard output)");
  storage.resize(std::size(kFlags));
  for (std::size_t i = 0; i < std::size(kFlags); ++i)
    app->add_option(kFlags[i].flag, storage[i], kFlags[i].help);
}

KeyTree build_tree(const Common& c, const std::vector<std::string>& storage, CLI::App* app) {
  KeyTree t = c.config.empty() ? KeyTree{} : read_ini_file(c.config);
  for (std::size_t i = 0; i < std::size(kFlags); ++i)
    if (app->count(kFlags[i].flag) > 0) t[kFlags[i].key] = storage[i];
  for (const auto& s : c.sets) apply_override(t, s);
  return t;
}

std::string base_dir(const Common& c) {
  if (c.config.empty()) return ".";
  auto p = std::filesystem::path(c.config).parent_path().string();
  return p.empty() ? "." : p;
}

class Record {
public:
  void put(const std::string& k, double v) { os_ << k << '=' << format_value(v) << '\n'; }
  void put(const std::string& k, const std::string& v) { os_ << k << '=' << v << '\n'; }
  std::string str() const { return os_.str(); }

private:
  std::ostringstream os_;
};

void emit(const Common& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.output, std::ios::binary);
  if (!f) throw ConfigError("cannot write " + c.output);
  f << text;
}

double resolve_x(const RunConfig& cfg, const std::optional<double>& x, const std::optional<double>& z) {
  if (x && z) throw ConfigError("give either --x or --z-m, not both");
  if (x) return *x;
  if (z) {
    if (!cfg.omega_A) throw ConfigError("--z-m needs the transition frequency (--omega-a-ev or --omega-a-hz)");
    return *cfg.omega_A * *z / constants().c;
  }
  throw ConfigError("missing required argument --x (or --z-m)");
}

std::vector<Coupling> couplings(CouplingChoice c) {
  if (c == CouplingChoice::Both) return {Coupling::Magnetic, Coupling::Electric};
  return {c == CouplingChoice::Electric ? Coupling::Electric : Coupling::Magnetic};
}

std::optional<double> alpha_of(const RunConfig& cfg, double& nu_bar) {
  nu_bar = 0.0;
  const double w = cfg.omega();
  if (is_perfect_conductor(cfg.material)) return kInfinity;
  if (const auto* p = std::get_if<Plasma>(&cfg.material)) return p->omega_p / w;
  if (const auto* d = std::get_if<Drude>(&cfg.material)) {
    nu_bar = d->nu / w;
    return d->omega_p / w;
  }
  return std::nullopt;
}

// dimensionless-run default when no configuration sets the sweep grid
KeyTree with_defaults(KeyTree t) {
  t.emplace("sweep.min", "1e-3");
  t.emplace("sweep.max", "1e2");
  return t;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Casimir-Polder shifts, rates and forces near a planar slab"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  Common c;
  std::vector<std::string> storage;
  std::optional<double> x, z, omega_ev, q, kz;
  bool real_axis = false, niobium = false;
  std::string state = "ground", preset, out_dir = ".";

  auto* eps = app.add_subcommand("epsilon", "dielectric function at one frequency");
  add_common(eps, c, storage);
  eps->add_option("--omega-ev", omega_ev, "frequency (eV); imaginary axis unless --real")->required();
  eps->add_flag("--real", real_axis, "evaluate on the real frequency axis");

  auto* sig = app.add_subcommand("sigma", "Mattis-Bardeen conductivity at q = Delta/(hbar omega)");
  add_common(sig, c, storage);
  sig->add_option("--q", q, "Delta/(hbar omega)")->required();
  sig->add_flag("--niobium", niobium, "niobium defaults: Tc = 9.25 K, hbar omega_sp = 2.4 eV, hbar/(tau Delta) = 13.61");

  auto* shift = app.add_subcommand("shift", "ground or excited-state frequency shift");
  add_common(shift, c, storage);
  shift->add_option("--x", x, "k_t z");
  shift->add_option("--z-m", z, "distance (m)");
  shift->add_option("--state", state, "ground or excited (excited: perfect conductor only)")
      ->check(CLI::IsMember({"ground", "excited"}));

  auto* rate = app.add_subcommand("rate", "spin-flip (or electric-dipole) decay rate");
  add_common(rate, c, storage);
  rate->add_option("--kz", kz, "k z");
  rate->add_option("--z-m", z, "distance (m)");

  auto* force = app.add_subcommand("force", "rescaled and dimensional force at one distance");
  add_common(force, c, storage);
  force->add_option("--x", x, "k_A z");
  force->add_option("--z-m", z, "distance (m)");

  auto* sweep = app.add_subcommand("sweep", "evaluate a grid and write CSV");
  add_common(sweep, c, storage);

  auto* fig = app.add_subcommand("figure", "regenerate the datasets of a figure preset");
  fig->add_option("preset", preset, "preset name")->required();
  fig->add_option("--output-dir,-d", out_dir, "directory for the CSV files");
  fig->add_option("--params", c.config, "parameter file (fig-decca)");
  fig->add_option("--set", c.sets, "override, section.key=value (repeatable)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (fig->parsed()) {
      const auto r = run_preset(preset, out_dir, c.config, c.sets);
      for (const auto& f : r.files) std::cout << "wrote " << f << '\n';
      for (const auto& f : r.failures) std::cerr << "not converged: " << f << '\n';
      return r.ok() ? 0 : 1;
    }

    CLI::App* sub = app.get_subcommands().front();
    KeyTree tree = build_tree(c, storage, sub);
    if (sig->parsed() && niobium) {
      tree.emplace("material.model", "superconductor");
      tree.emplace("material.tc_k", "9.25");
      tree.emplace("material.omega_sp_ev", "2.4");
      tree.emplace("material.broadening", "13.61");
    }
    if (sig->parsed()) {
      tree["run.quantity"] = "sigma";
      tree.emplace("sweep.min", "1e-2");
      tree.emplace("sweep.max", "1e2");
    } else if (!sweep->parsed()) {
      tree = with_defaults(tree);
    }
    const RunConfig cfg = config_from_tree(tree, base_dir(c));

    if (sweep->parsed()) {
      const auto r = run_sweep(cfg);
      Common out = c;
      if (out.output.empty()) out.output = cfg.output;
      emit(out, to_csv(r.table));
      if (!r.ok()) {
        std::cerr << "not converged at:";
        for (double v : r.failed) std::cerr << ' ' << v;
        std::cerr << '\n';
        return 1;
      }
      return 0;
    }

    Record rec;
    rec.put("model", model_name(cfg.material));
    if (eps->parsed()) {
      const double w = ev_to_angular(*omega_ev);
      rec.put("omega_rad_s", w);
      if (real_axis) {
        const auto e = epsilon_real_axis(cfg.material, w);
        rec.put("epsilon_real", e.real());
        rec.put("epsilon_imag", e.imag());
      } else {
        rec.put("epsilon_i_omega", epsilon_imag_axis(cfg.material, w));
      }
    } else if (sig->parsed()) {
      if (!(*q > 0.0)) throw DomainError("q must be positive");
      const auto& sc = std::get<SuperconductorMB>(cfg.material);
      const auto s = sc.conductivity(sc.delta_omega() / *q);
      rec.put("q", *q);
      rec.put("broadening", sc.broadening());
      rec.put("sigma1_over_sigman", s.sigma1_over_sigman);
      rec.put("sigma2_over_sigman", s.sigma2_over_sigman);
    } else if (shift->parsed()) {
      const double xv = resolve_x(cfg, x, z);
      rec.put("x", xv);
      rec.put("regime", distance_regime(xv));
      const double hz = cfg.h_over_z;
      for (auto k : couplings(cfg.coupling)) {
        const std::string s = k == Coupling::Magnetic ? "_M" : "_E";
        std::array<double, 2> v;
        if (state == "excited") {
          if (!is_perfect_conductor(cfg.material))
            throw UnsupportedModel("excited-state shifts are available for the perfect conductor only");
          if (k != Coupling::Magnetic) throw UnsupportedModel("excited-state shift is available for magnetic transitions only");
          const auto ti = tilde_i(xv, cfg.quad);
          v = {f_parallel(xv) - ti[0], f_perp(xv) - ti[1]};
        } else if (is_perfect_conductor(cfg.material) && std::isinf(hz)) {
          v = tilde_i(xv, cfg.quad);
          if (k == Coupling::Electric) v = {-v[0], -v[1]};
        } else {
          v = reduced_i_rho(xv, cfg.omega(), cfg.material, hz, k, cfg.quad);
        }
        rec.put("i_par" + s, v[0]);
        rec.put("i_perp" + s, v[1]);
        rec.put("S" + s, cfg.weights.parallel() * v[0] + cfg.weights.perp() * v[1]);
        if (cfg.omega_A && (k == Coupling::Magnetic || cfg.dipole)) {
          Transition t;
          t.omega_t = *cfg.omega_A;
          t.weights = {cfg.weights.wx, cfg.weights.wy, cfg.weights.wz};
          t.kind = k;
          t.moment_scale = k == Coupling::Magnetic ? constants().muB * cfg.g_S : *cfg.dipole;
          SlabGeometry g{xv * constants().c / *cfg.omega_A, kInfinity};
          if (std::isfinite(hz)) g.h = hz * g.z;
          const auto r = state == "excited" ? excited_shift_pc(g, {t}, cfg.quad)
                                            : ground_shift(g, {t}, cfg.material, cfg.quad);
          rec.put("z_m", g.z);
          rec.put("delta_omega_rad_s" + s, r.delta_omega);
        }
      }
    } else if (rate->parsed()) {
      if (!cfg.omega_A) throw ConfigError("missing required argument --omega-a-ev (or --omega-a-hz)");
      double zv;
      if (kz && z) throw ConfigError("give either --kz or --z-m, not both");
      if (kz)
        zv = *kz * constants().c / *cfg.omega_A;
      else if (z)
        zv = *z;
      else
        throw ConfigError("missing required argument --kz (or --z-m)");
      TransitionSet ts;
      for (auto k : couplings(cfg.coupling)) {
        Transition t;
        t.omega_t = *cfg.omega_A;
        t.weights = {cfg.weights.wx, cfg.weights.wy, cfg.weights.wz};
        t.kind = k;
        if (k == Coupling::Electric && !cfg.dipole) throw ConfigError("missing required argument --dipole");
        t.moment_scale = k == Coupling::Magnetic ? constants().muB * cfg.g_S : *cfg.dipole;
        ts.push_back(t);
      }
      SlabGeometry g{zv, kInfinity};
      if (std::isfinite(cfg.h_over_z)) g.h = cfg.h_over_z * zv;
      if (cfg.h_m) g.h = *cfg.h_m;
      const double g0 = free_space_rate(*cfg.omega_A, ts);
      const double gam = spin_flip_rate(g, *cfg.omega_A, ts, cfg.material, cfg.quad);
      rec.put("z_m", zv);
      rec.put("kz", *cfg.omega_A * zv / constants().c);
      rec.put("gamma_rad_s", gam);
      rec.put("gamma0_rad_s", g0);
      rec.put("gamma_over_gamma0", gam / g0);
    } else if (force->parsed()) {
      const double xv = resolve_x(cfg, x, z);
      rec.put("x", xv);
      const double hz = cfg.h_m ? *cfg.h_m * *cfg.omega_A / (xv * constants().c) : cfg.h_over_z;
      for (auto k : couplings(cfg.coupling)) {
        const std::string s = k == Coupling::Magnetic ? "_M" : "_E";
        const auto v = force_kernels(xv, cfg.material, cfg.omega(), hz, cfg.quad, k);
        const double F = cfg.weights.parallel() * v[0] + cfg.weights.perp() * v[1];
        rec.put("ibar_par" + s, v[0]);
        rec.put("ibar_perp" + s, v[1]);
        rec.put("F" + s, F);
        if (cfg.omega_A) {
          const double zv = xv * constants().c / *cfg.omega_A;
          if (k == Coupling::Magnetic)
            rec.put("F_dimensional_N" + s, force_prefactor_magnetic(zv, cfg.g_S) * F);
          else if (cfg.dipole)
            rec.put("F_dimensional_N" + s, force_prefactor_electric(zv, *cfg.dipole) * F);
        }
      }
      double nu_bar = 0.0;
      if (auto a = alpha_of(cfg, nu_bar); a && std::isinf(hz)) {
        const auto p = regime_classify(xv, *a, nu_bar, cfg.weights);
        rec.put("regime", regime_name(p.regime));
        if (p.predicted_F_M) rec.put("predicted_F_M", *p.predicted_F_M);
      } else {
        rec.put("regime", regime_name(Regime::Unclassified));
      }
    }
    emit(c, rec.str());
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::bad_variant_access&) {
    std::cerr << "usage error: sigma needs material.model = superconductor (or --niobium)\n";
    return 2;
  } catch (const UnsupportedModel& e) {
    std::cerr << "unsupported: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return 2;
  } catch (const NumericError& e) {
    std::cerr << "numeric error: " << e.what() << '\n';
    return 1;
  }
}
