#pragma once

#include "cpforce/quadrature.hpp"

#include <complex>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace cpforce {

// All frequencies in rad/s.
struct Vacuum {};
struct PerfectConductor {};

struct Plasma {
  double omega_p;
};

struct Drude {
  double omega_p;
  double nu;
};

// f_j / (w^2 + w_j^2 + g_j w); f_j in (rad/s)^2
struct OscillatorTerm {
  double f;
  double omega;
  double g;
};

struct SixOscillator {
  double omega_p;
  std::vector<OscillatorTerm> terms;
};

struct TwoPlateau {
  double omega_p1;
  double omega_p2;
  double omega_1;
  double omega_2;
};

struct ComplexConductivity {
  double sigma1_over_sigman = 0.0;
  double sigma2_over_sigman = 0.0;
  double omega = 0.0;
};

// Zero-temperature BCS superconductor. delta_omega = Delta/hbar, sigma_n in S/m,
// broadening b = hbar/(tau Delta); b = 0 means the clean limit.
class SuperconductorMB {
public:
  static SuperconductorMB clean(double delta_omega, double sigma_n,
                                const QuadratureSpec& spec = {});
  static SuperconductorMB impure(double delta_omega, double sigma_n, double tau,
                                 const QuadratureSpec& spec = {});
  // omega_sp^2 = pi sigma_n Delta / (eps0 hbar)
  static double sigma_n_from_omega_sp(double omega_sp, double delta_omega);

  double delta_omega() const { return delta_omega_; }
  double sigma_n() const { return sigma_n_; }
  bool is_clean() const { return b_ == 0.0; }
  double broadening() const { return b_; }
  double tau() const;
  double omega_sp_squared() const;
  // pole weight, reduced by (1 - f(b)) with impurities
  double pole_weight() const;

  double continuum(double omega) const;
  double epsilon_imag(double omega) const;
  ComplexConductivity conductivity(double omega) const;

private:
  struct Table;
  SuperconductorMB(double delta_omega, double sigma_n, double b, const QuadratureSpec& spec);
  double delta_omega_;
  double sigma_n_;
  double b_;
  QuadratureSpec spec_;
  std::shared_ptr<const Table> table_;
};

using MaterialModel =
    std::variant<Vacuum, PerfectConductor, Plasma, Drude, SixOscillator, TwoPlateau, SuperconductorMB>;

void validate(const MaterialModel& model);
bool is_perfect_conductor(const MaterialModel& model);
bool is_vacuum(const MaterialModel& model);
std::string model_name(const MaterialModel& model);
// largest frequency scale of the model (rad/s), 0 for parameterless models
double characteristic_frequency(const MaterialModel& model);

// epsilon(i omega) - 1, evaluated without cancellation
double susceptibility_imag_axis(const MaterialModel& model, double omega);
double epsilon_imag_axis(const MaterialModel& model, double omega);
std::complex<double> epsilon_real_axis(const MaterialModel& model, double omega);

// Reduced Mattis-Bardeen conductivity, Delta = 1, w = hbar omega / Delta.
ComplexConductivity mb_clean_reduced(double w, const QuadratureSpec& spec = {});
ComplexConductivity mb_impure_reduced(double w, double b, const QuadratureSpec& spec = {});

ComplexConductivity sigma_mb_clean(double omega, double delta, const QuadratureSpec& spec = {});
ComplexConductivity sigma_mb_impure(double omega, double delta, double tau,
                                    const QuadratureSpec& spec = {});
double f_impurity(double x);
double epsilon_superconductor(double omega, const SuperconductorMB& model);

} // namespace cpforce
