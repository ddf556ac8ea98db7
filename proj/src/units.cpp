#include "cpforce/units.hpp"

#include "cpforce/errors.hpp"

#include <cmath>
#include <numbers>

namespace cpforce {

double to_angular_frequency(double value, FrequencyUnit unit) {
  if (!(value > 0.0) || !std::isfinite(value))
    throw DomainError("frequency must be positive and finite");
  switch (unit) {
  case FrequencyUnit::ElectronVolt:
    return value * constants().eV / constants().hbar;
  case FrequencyUnit::Hertz:
    return 2.0 * std::numbers::pi * value;
  case FrequencyUnit::RadPerSecond:
    return value;
  }
  throw DomainError("unknown frequency unit");
}

double ev_to_angular(double ev) { return ev * constants().eV / constants().hbar; }

double angular_to_ev(double omega) { return omega * constants().hbar / constants().eV; }

double force_prefactor_magnetic(double z, double g_S) {
  if (!(z > 0.0)) throw DomainError("distance z must be positive");
  const auto& k = constants();
  const double m = k.muB * g_S;
  const double z2 = z * z;
  return k.mu0 * m * m / (32.0 * std::numbers::pi * z2 * z2);
}

double force_prefactor_electric(double z, double dipole) {
  if (!(z > 0.0)) throw DomainError("distance z must be positive");
  const double z2 = z * z;
  return dipole * dipole / (32.0 * std::numbers::pi * constants().eps0 * z2 * z2);
}

ReducedVariables::ReducedVariables(double x_, double alpha_, double nu_bar_, double q_,
                                   double xi_)
    : x(x_), alpha(alpha_), nu_bar(nu_bar_), q(q_), xi(xi_) {
  if (!(x > 0.0)) throw DomainError("x = k_A z must be positive");
  if (!(alpha >= 0.0)) throw DomainError("alpha must be non-negative");
  if (!(nu_bar >= 0.0)) throw DomainError("nu_bar must be non-negative");
  if (!(q > 0.0)) throw DomainError("q must be positive");
  if (!(xi >= 0.0)) throw DomainError("xi must be non-negative");
}

ReducedVariables ReducedVariables::from_physical(double z, double omega_A, double omega_p,
                                                 double nu) {
  if (!(omega_A > 0.0)) throw DomainError("omega_A must be positive");
  return ReducedVariables(omega_A * z / constants().c, omega_p / omega_A, nu / omega_A);
}

} // namespace cpforce
