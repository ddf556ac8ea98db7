#include "cpforce/sweep.hpp"

#include "cpforce/errors.hpp"
#include "cpforce/forces.hpp"
#include "cpforce/shifts.hpp"
#include "cpforce/units.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace cpforce {

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

std::vector<Coupling> couplings(CouplingChoice c) {
  switch (c) {
  case CouplingChoice::Magnetic: return {Coupling::Magnetic};
  case CouplingChoice::Electric: return {Coupling::Electric};
  case CouplingChoice::Both: return {Coupling::Magnetic, Coupling::Electric};
  }
  return {};
}

std::string tag(Coupling c) { return c == Coupling::Magnetic ? "M" : "E"; }

// moment^2 for the dimensional columns, if known
std::optional<double> moment2(const RunConfig& c, Coupling k) {
  if (k == Coupling::Magnetic) {
    const double m = constants().muB * c.g_S;
    return m * m;
  }
  if (c.dipole) return *c.dipole * *c.dipole;
  return std::nullopt;
}

SweepOutcome sigma_sweep(const RunConfig& c) {
  const auto& sc = std::get<SuperconductorMB>(c.material);
  SweepOutcome out;
  out.table.columns = {"q", "sigma1_over_sigman", "sigma2_over_sigman"};
  for (double q : c.sweep.grid()) {
    try {
      const auto s = sc.conductivity(sc.delta_omega() / q);
      out.table.rows.push_back({q, s.sigma1_over_sigman, s.sigma2_over_sigman});
    } catch (const NumericError&) {
      out.failed.push_back(q);
      out.table.rows.push_back({q, nan, nan});
    }
  }
  return out;
}

} // namespace

SweepOutcome run_sweep(const RunConfig& c) {
  SweepOutcome out;
  if (c.quantity == Quantity::Sigma) {
    out = sigma_sweep(c);
  } else {
    const auto ks = couplings(c.coupling);
    const bool dims = c.omega_A.has_value();
    const bool force = c.quantity == Quantity::Force;
    auto& cols = out.table.columns;
    cols.push_back("x");
    if (dims) cols.push_back("z_m");
    const bool suffix = ks.size() > 1;
    for (auto k : ks) {
      const std::string s = suffix ? "_" + tag(k) : "";
      if (force) {
        cols.push_back("ibar_par" + s);
        cols.push_back("ibar_perp" + s);
        cols.push_back("F_" + tag(k));
        if (dims && moment2(c, k)) cols.push_back("F_dimensional_N" + s);
      } else {
        cols.push_back("i_par" + s);
        cols.push_back("i_perp" + s);
        cols.push_back("S_" + tag(k));
        if (dims && moment2(c, k)) cols.push_back("delta_omega_rad_s" + s);
      }
    }
    const double cl = constants().c;
    const double w = c.omega();
    for (double g : c.sweep.grid()) {
      const double x = c.sweep.variable == "z_m" ? w * g / cl : g;
      const double z = x * cl / w;
      const double hz = c.h_m ? *c.h_m / z : c.h_over_z;
      std::vector<double> row{x};
      if (dims) row.push_back(z);
      bool failed = false;
      for (auto k : ks) {
        std::array<double, 2> v{nan, nan};
        try {
          if (force) {
            v = force_kernels(x, c.material, w, hz, c.quad, k);
          } else if (is_perfect_conductor(c.material) && std::isinf(hz)) {
            v = tilde_i(x, c.quad);
            if (k == Coupling::Electric) v = {-v[0], -v[1]};
          } else {
            v = reduced_i_rho(x, w, c.material, hz, k, c.quad);
          }
        } catch (const NumericError&) {
          failed = true;
        }
        const double F = c.weights.parallel() * v[0] + c.weights.perp() * v[1];
        row.insert(row.end(), {v[0], v[1], F});
        if (dims) {
          if (auto m2 = moment2(c, k)) {
            const double pi = std::numbers::pi;
            const auto& K = constants();
            if (force) {
              const double pref = k == Coupling::Magnetic ? K.mu0 * *m2 / (32.0 * pi * std::pow(z, 4))
                                                          : *m2 / (32.0 * pi * K.eps0 * std::pow(z, 4));
              row.push_back(pref * F);
            } else {
              const double pref = k == Coupling::Magnetic ? K.mu0 / (4.0 * pi * K.hbar)
                                                          : 1.0 / (4.0 * pi * K.eps0 * K.hbar);
              row.push_back(pref * *m2 * F / (8.0 * z * z * z));
            }
          }
        }
      }
      if (failed) out.failed.push_back(g);
      out.table.rows.push_back(std::move(row));
    }
  }
  auto& t = out.table;
  std::vector<std::pair<std::string, std::string>> meta;
  meta.emplace_back("generator", std::string("cpforce ") + kVersion);
  meta.emplace_back("model", model_name(c.material));
  for (auto& kv : c.metadata()) meta.push_back(kv);
  meta.emplace_back("rows", std::to_string(t.rows.size()));
  meta.emplace_back("status", out.ok() ? "converged" : "not-converged");
  t.metadata = std::move(meta);
  return out;
}

} // namespace cpforce
