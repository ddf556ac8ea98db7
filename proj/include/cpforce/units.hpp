#pragma once

namespace cpforce {

struct PhysicalConstants {
  double hbar = 1.054571817e-34;   // J s
  double c = 299792458.0;          // m/s
  double mu0 = 1.25663706212e-6;   // N/A^2
  double eps0 = 1.0 / (1.25663706212e-6 * 299792458.0 * 299792458.0);
  double muB = 9.2740100783e-24;   // J/T
  double g_S = 2.002319;
  double kB = 1.380649e-23;        // J/K
  double eV = 1.602176634e-19;     // J
  double m_e = 9.1093837015e-31;   // kg

  double compton_wavelength() const { return hbar / (m_e * c); }
};

inline const PhysicalConstants& constants() {
  static const PhysicalConstants k{};
  return k;
}

enum class FrequencyUnit { ElectronVolt, Hertz, RadPerSecond };

double to_angular_frequency(double value, FrequencyUnit unit);
double ev_to_angular(double ev);
double angular_to_ev(double omega);

// mu0 (muB g_S)^2 / (32 pi z^4)
double force_prefactor_magnetic(double z, double g_S = constants().g_S);
// d^2 / (32 pi eps0 z^4), d in C m
double force_prefactor_electric(double z, double dipole);

// Dimensionless bundle: x = k_A z, alpha = omega_p/omega_A, nu_bar = nu/omega_A,
// q = Delta/(hbar omega), xi = 2 eta0 z.
struct ReducedVariables {
  double x = 1.0;
  double alpha = 0.0;
  double nu_bar = 0.0;
  double q = 1.0;
  double xi = 0.0;

  ReducedVariables() = default;
  ReducedVariables(double x, double alpha, double nu_bar = 0.0, double q = 1.0,
                   double xi = 0.0);

  static ReducedVariables from_physical(double z, double omega_A, double omega_p = 0.0,
                                        double nu = 0.0);
};

} // namespace cpforce
