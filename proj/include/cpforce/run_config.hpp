#pragma once

#include "cpforce/forces.hpp"
#include "cpforce/materials.hpp"
#include "cpforce/quadrature.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cpforce {

// Flattened "section.key" -> value view of an INI file.
using KeyTree = std::map<std::string, std::string>;

KeyTree read_ini_file(const std::string& path);
KeyTree parse_ini_string(const std::string& text);
// "section.key=value"
void apply_override(KeyTree& tree, const std::string& assignment);

enum class Quantity { Force, Shift, Sigma };
enum class CouplingChoice { Magnetic, Electric, Both };

struct SweepSpec {
  std::string variable = "x"; // x, z_m or q
  double min = 1e-3;
  double max = 1e2;
  int points_per_decade = 20;
  bool log_spacing = true;
  int points = 0; // linear spacing only
  std::vector<double> grid() const;
  void validate() const;
};

struct RunConfig {
  KeyTree tree;
  MaterialModel material = PerfectConductor{};
  // omega_A in rad/s; absent when the run is purely dimensionless
  std::optional<double> omega_A;
  // reference frequency used to evaluate eps when omega_A is absent
  double omega_ref = 1.0;
  Weights weights;
  double g_S = 2.002319;
  std::optional<double> dipole; // C m
  double h_over_z = kInfinity;
  std::optional<double> h_m;
  Quantity quantity = Quantity::Force;
  CouplingChoice coupling = CouplingChoice::Magnetic;
  SweepSpec sweep;
  QuadratureSpec quad;
  std::string output;

  double omega() const { return omega_A ? *omega_A : omega_ref; }
  // metadata block: effective keys, sorted, without output location
  std::vector<std::pair<std::string, std::string>> metadata() const;
};

MaterialModel material_from_tree(const KeyTree& tree, std::optional<double> omega_A,
                                 const std::string& base_dir = ".");
RunConfig config_from_tree(const KeyTree& tree, const std::string& base_dir = ".");
RunConfig load_config(const std::string& path, const std::vector<std::string>& overrides = {});

// Six-oscillator parameter file: [six_oscillator] omega_p_ev, fJ_ev2, omegaJ_ev, gJ_ev.
SixOscillator read_six_oscillator(const std::string& path);

double parse_number(const std::string& key, const std::string& value);

} // namespace cpforce
