#include "cpforce/run_config.hpp"

#include "cpforce/errors.hpp"
#include "cpforce/table.hpp"
#include "cpforce/units.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <sstream>

namespace cpforce {

namespace pt = boost::property_tree;

namespace {

std::string trim(std::string s) {
  auto ws = [](unsigned char c) { return std::isspace(c) != 0; };
  while (!s.empty() && ws(s.back())) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && ws(s[i])) ++i;
  return s.substr(i);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

KeyTree flatten(const pt::ptree& root) {
  KeyTree out;
  for (const auto& [name, node] : root) {
    if (node.empty()) {
      out[name] = trim(node.data());
      continue;
    }
    for (const auto& [key, leaf] : node) out[name + "." + key] = trim(leaf.data());
  }
  return out;
}

const std::string* find(const KeyTree& t, const std::string& key) {
  auto it = t.find(key);
  return it == t.end() ? nullptr : &it->second;
}

std::optional<double> number(const KeyTree& t, const std::string& key) {
  if (const auto* v = find(t, key)) return parse_number(key, *v);
  return std::nullopt;
}

double required(const KeyTree& t, const std::string& key) {
  if (auto v = number(t, key)) return *v;
  throw ConfigError("missing required key '" + key + "'");
}

std::optional<double> energy(const KeyTree& t, const std::string& key) {
  if (auto v = number(t, key + "_ev")) return ev_to_angular(*v);
  return std::nullopt;
}

std::string fmt(double v) { return format_value(v); }

// omega_A from [atom]: omega_a_ev, omega_a_hz or omega_a_rad_s
std::optional<double> atom_frequency(const KeyTree& t) {
  if (auto v = number(t, "atom.omega_a_ev")) return to_angular_frequency(*v, FrequencyUnit::ElectronVolt);
  if (auto v = number(t, "atom.omega_a_hz")) return to_angular_frequency(*v, FrequencyUnit::Hertz);
  if (auto v = number(t, "atom.omega_a_rad_s")) return to_angular_frequency(*v, FrequencyUnit::RadPerSecond);
  return std::nullopt;
}

double scaled_frequency(const KeyTree& t, const std::string& ev_key, const std::string& ratio_key,
                        std::optional<double> omega_A, double omega_ref, bool allow_inf = false) {
  if (auto w = energy(t, ev_key)) return *w;
  if (auto r = number(t, ratio_key)) {
    if (std::isinf(*r) && allow_inf) return *r;
    return *r * (omega_A ? *omega_A : omega_ref);
  }
  throw ConfigError("missing required key '" + ev_key + "_ev' (or '" + ratio_key + "')");
}

} // namespace

double parse_number(const std::string& key, const std::string& value) {
  const std::string v = lower(trim(value));
  if (v == "inf" || v == "infinity" || v == "+inf") return kInfinity;
  char* end = nullptr;
  const double d = std::strtod(v.c_str(), &end);
  if (v.empty() || end == v.c_str() || *end != '\0')
    throw ConfigError("key '" + key + "': '" + value + "' is not a number");
  return d;
}

KeyTree read_ini_file(const std::string& path) {
  pt::ptree root;
  try {
    pt::read_ini(path, root);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(std::string("cannot read config: ") + e.what());
  }
  return flatten(root);
}

KeyTree parse_ini_string(const std::string& text) {
  pt::ptree root;
  std::istringstream is(text);
  try {
    pt::read_ini(is, root);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(std::string("cannot parse config: ") + e.what());
  }
  return flatten(root);
}

void apply_override(KeyTree& tree, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0)
    throw ConfigError("override '" + assignment + "' is not of the form section.key=value");
  const std::string key = trim(assignment.substr(0, eq));
  const auto dot = key.find('.');
  if (dot == std::string::npos || dot == 0 || dot + 1 == key.size())
    throw ConfigError("override '" + assignment + "' is not of the form section.key=value");
  tree[key] = trim(assignment.substr(eq + 1));
}

std::vector<double> SweepSpec::grid() const {
  validate();
  std::vector<double> g;
  if (log_spacing) {
    const double decades = std::log10(max / min);
    const int n = static_cast<int>(std::llround(decades * points_per_decade));
    const double l0 = std::log10(min);
    for (int i = 0; i <= n; ++i) g.push_back(std::pow(10.0, l0 + decades * i / std::max(n, 1)));
    g.front() = min;
    g.back() = max;
  } else {
    const int n = std::max(points, 2);
    for (int i = 0; i < n; ++i) g.push_back(min + (max - min) * i / (n - 1));
  }
  return g;
}

void SweepSpec::validate() const {
  if (!(min < max)) throw ConfigError("sweep min must be below max");
  if (log_spacing && !(min > 0.0)) throw ConfigError("log sweep needs min > 0");
  if (log_spacing && points_per_decade < 1) throw ConfigError("points_per_decade must be >= 1");
  if (!log_spacing && points < 2) throw ConfigError("linear sweep needs points >= 2");
}

SixOscillator read_six_oscillator(const std::string& path) {
  if (!std::filesystem::exists(path)) throw ConfigError("parameter file '" + path + "' not found");
  const KeyTree t = read_ini_file(path);
  SixOscillator m;
  m.omega_p = ev_to_angular(required(t, "six_oscillator.omega_p_ev"));
  for (int j = 1; j <= 6; ++j) {
    const std::string s = "six_oscillator.";
    const std::string J = std::to_string(j);
    const double ev = ev_to_angular(1.0);
    OscillatorTerm o;
    o.f = required(t, s + "f" + J + "_ev2") * ev * ev;
    o.omega = ev_to_angular(required(t, s + "omega" + J + "_ev"));
    o.g = ev_to_angular(required(t, s + "g" + J + "_ev"));
    m.terms.push_back(o);
  }
  return m;
}

MaterialModel material_from_tree(const KeyTree& t, std::optional<double> omega_A,
                                 const std::string& base_dir) {
  const auto* model = find(t, "material.model");
  if (!model) throw ConfigError("missing required key 'material.model'");
  const std::string name = lower(*model);
  const double ref = omega_A ? *omega_A : 1.0;
  MaterialModel m;
  if (name == "vacuum") {
    m = Vacuum{};
  } else if (name == "pc" || name == "perfect-conductor") {
    m = PerfectConductor{};
  } else if (name == "plasma") {
    const double wp = scaled_frequency(t, "material.omega_p", "material.alpha", omega_A, ref, true);
    if (std::isinf(wp))
      m = PerfectConductor{};
    else
      m = Plasma{wp};
  } else if (name == "drude") {
    const double wp = scaled_frequency(t, "material.omega_p", "material.alpha", omega_A, ref);
    const double nu = scaled_frequency(t, "material.nu", "material.nu_bar", omega_A, ref);
    if (nu == 0.0)
      m = Plasma{wp};
    else
      m = Drude{wp, nu};
  } else if (name == "two-plateau") {
    auto need = [&](const std::string& k) {
      if (auto w = energy(t, "material." + k)) return *w;
      throw ConfigError("missing required key 'material." + k + "_ev'");
    };
    m = TwoPlateau{need("omega_p1"), need("omega_p2"), need("omega_1"), need("omega_2")};
  } else if (name == "six-oscillator") {
    const auto* file = find(t, "material.parameter_file");
    if (!file)
      throw ConfigError("six-oscillator model needs 'material.parameter_file'; its (f_j, omega_j, g_j) "
                        "table is not built in and must be supplied by the user");
    std::filesystem::path p(*file);
    if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
    auto so = read_six_oscillator(p.string());
    if (auto wp = energy(t, "material.omega_p")) so.omega_p = *wp;
    m = so;
  } else if (name == "superconductor") {
    double delta;
    if (auto d = energy(t, "material.delta"))
      delta = *d;
    else if (auto tc = number(t, "material.tc_k"))
      delta = 3.53 * constants().kB * *tc / 2.0 / constants().hbar;
    else
      throw ConfigError("missing required key 'material.delta_ev' (or 'material.tc_k')");
    double sigma_n;
    if (auto s = number(t, "material.sigma_n_s_per_m"))
      sigma_n = *s;
    else if (auto wsp = energy(t, "material.omega_sp"))
      sigma_n = SuperconductorMB::sigma_n_from_omega_sp(*wsp, delta);
    else
      throw ConfigError("missing required key 'material.omega_sp_ev' (or 'material.sigma_n_s_per_m')");
    QuadratureSpec qs;
    if (auto b = number(t, "material.broadening")) {
      m = *b > 0.0 ? SuperconductorMB::impure(delta, sigma_n, 1.0 / (*b * delta), qs)
                   : SuperconductorMB::clean(delta, sigma_n, qs);
    } else if (auto tau = number(t, "material.tau_s")) {
      m = SuperconductorMB::impure(delta, sigma_n, *tau, qs);
    } else {
      m = SuperconductorMB::clean(delta, sigma_n, qs);
    }
  } else {
    throw ConfigError("unknown material model '" + *model + "'");
  }
  validate(m);
  return m;
}

RunConfig config_from_tree(const KeyTree& tree, const std::string& base_dir) {
  RunConfig c;
  c.tree = tree;
  c.omega_A = atom_frequency(tree);

  if (const auto* q = find(tree, "run.quantity")) {
    const std::string v = lower(*q);
    if (v == "force") c.quantity = Quantity::Force;
    else if (v == "shift") c.quantity = Quantity::Shift;
    else if (v == "sigma") c.quantity = Quantity::Sigma;
    else throw ConfigError("run.quantity must be force, shift or sigma");
  }
  if (const auto* k = find(tree, "run.coupling")) {
    const std::string v = lower(*k);
    if (v == "magnetic") c.coupling = CouplingChoice::Magnetic;
    else if (v == "electric") c.coupling = CouplingChoice::Electric;
    else if (v == "both") c.coupling = CouplingChoice::Both;
    else throw ConfigError("run.coupling must be magnetic, electric or both");
  }

  if (const auto* w = find(tree, "atom.weights")) {
    std::vector<double> v;
    std::stringstream ss(*w);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(parse_number("atom.weights", item));
    if (v.size() != 3) throw ConfigError("atom.weights needs three comma-separated values");
    c.weights = Weights{v[0], v[1], v[2]};
  }
  try {
    c.weights.validate();
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  if (auto g = number(tree, "atom.g_s")) c.g_S = *g;
  if (auto d = number(tree, "atom.dipole_c_m")) c.dipole = *d;

  if (auto h = number(tree, "geometry.h_over_z")) c.h_over_z = *h;
  if (auto h = number(tree, "geometry.h_m")) c.h_m = *h;
  if (!(c.h_over_z > 0.0)) throw ConfigError("geometry.h_over_z must be positive or inf");
  if (c.h_m && !(*c.h_m > 0.0)) throw ConfigError("geometry.h_m must be positive");

  if (const auto* v = find(tree, "sweep.variable")) c.sweep.variable = lower(*v);
  if (c.quantity == Quantity::Sigma && !find(tree, "sweep.variable")) c.sweep.variable = "q";
  if (c.sweep.variable != "x" && c.sweep.variable != "z_m" && c.sweep.variable != "q")
    throw ConfigError("sweep.variable must be x, z_m or q");
  if (auto v = number(tree, "sweep.min")) c.sweep.min = *v;
  if (auto v = number(tree, "sweep.max")) c.sweep.max = *v;
  if (auto v = number(tree, "sweep.points_per_decade")) c.sweep.points_per_decade = static_cast<int>(*v);
  if (auto v = number(tree, "sweep.points")) c.sweep.points = static_cast<int>(*v);
  if (const auto* s = find(tree, "sweep.spacing")) {
    const std::string v = lower(*s);
    if (v != "log" && v != "linear") throw ConfigError("sweep.spacing must be log or linear");
    c.sweep.log_spacing = v == "log";
  }
  c.sweep.validate();
  if (c.sweep.variable == "z_m" && !c.omega_A)
    throw ConfigError("sweeping z_m needs the atomic frequency (atom.omega_a_ev, atom.omega_a_hz or atom.omega_a_rad_s)");
  if (c.h_m && !c.omega_A) throw ConfigError("geometry.h_m needs the atomic frequency");

  if (auto v = number(tree, "quadrature.rel_tol")) c.quad.rel_tol = *v;
  if (auto v = number(tree, "quadrature.abs_tol")) c.quad.abs_tol = *v;
  if (auto v = number(tree, "quadrature.max_subdivisions")) c.quad.max_subdivisions = static_cast<int>(*v);
  if (auto v = number(tree, "quadrature.epsilon_split")) c.quad.epsilon_split = *v;
  try {
    c.quad.validate();
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }

  if (const auto* o = find(tree, "output.path")) c.output = *o;

  if (c.quantity == Quantity::Sigma) {
    c.material = material_from_tree(tree, c.omega_A, base_dir);
    if (!std::holds_alternative<SuperconductorMB>(c.material))
      throw ConfigError("run.quantity = sigma needs material.model = superconductor");
    if (c.sweep.variable != "q") throw ConfigError("sigma sweeps run over q");
  } else {
    c.material = material_from_tree(tree, c.omega_A, base_dir);
    if (c.sweep.variable == "q") throw ConfigError("q sweeps are only for run.quantity = sigma");
  }
  return c;
}

RunConfig load_config(const std::string& path, const std::vector<std::string>& overrides) {
  KeyTree t = path.empty() ? KeyTree{} : read_ini_file(path);
  for (const auto& o : overrides) apply_override(t, o);
  const std::string base = path.empty() ? "." : std::filesystem::path(path).parent_path().string();
  return config_from_tree(t, base.empty() ? "." : base);
}

std::vector<std::pair<std::string, std::string>> RunConfig::metadata() const {
  KeyTree t = tree;
  for (auto it = t.begin(); it != t.end();)
    it = it->first.rfind("output.", 0) == 0 ? t.erase(it) : std::next(it);
  t["quadrature.rel_tol"] = fmt(quad.rel_tol);
  t["quadrature.abs_tol"] = fmt(quad.abs_tol);
  t["quadrature.max_subdivisions"] = std::to_string(quad.max_subdivisions);
  t["quadrature.epsilon_split"] = fmt(quad.epsilon_split);
  t.emplace("sweep.variable", sweep.variable);
  t.emplace("sweep.min", fmt(sweep.min));
  t.emplace("sweep.max", fmt(sweep.max));
  if (sweep.log_spacing)
    t.emplace("sweep.points_per_decade", std::to_string(sweep.points_per_decade));
  else
    t.emplace("sweep.points", std::to_string(sweep.points));
  t.emplace("sweep.spacing", sweep.log_spacing ? "log" : "linear");
  t.emplace("atom.weights", fmt(weights.wx) + ", " + fmt(weights.wy) + ", " + fmt(weights.wz));
  return {t.begin(), t.end()};
}

} // namespace cpforce
