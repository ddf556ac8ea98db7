#pragma once

#include "cpforce/run_config.hpp"
#include "cpforce/table.hpp"

#include <string>
#include <vector>

namespace cpforce {

inline constexpr const char* kVersion = "0.1.0";

struct SweepOutcome {
  Table table;
  std::vector<double> failed; // grid values that did not converge
  bool ok() const { return failed.empty(); }
};

SweepOutcome run_sweep(const RunConfig& config);

struct PresetCurve {
  std::string file;
  KeyTree tree;
};

const std::vector<std::string>& preset_names();
// Throws ConfigError for an unknown name, or for fig-decca without a parameter file.
std::vector<PresetCurve> preset_curves(const std::string& name, const std::string& parameter_file = "");

struct PresetOutcome {
  std::vector<std::string> files;
  std::vector<std::string> failures; // "file: x1 x2 ..."
  bool ok() const { return failures.empty(); }
};

PresetOutcome run_preset(const std::string& name, const std::string& out_dir,
                         const std::string& parameter_file = "",
                         const std::vector<std::string>& overrides = {});

} // namespace cpforce
