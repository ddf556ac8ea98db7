#pragma once

#include "cpforce/materials.hpp"
#include "cpforce/quadrature.hpp"
#include "cpforce/slab_green.hpp"

#include <array>
#include <complex>
#include <string>
#include <vector>

namespace cpforce {

// One transition: |omega_alpha beta|, weights |S_a|^2 (magnetic) or |d_a|^2/|d|^2
// (electric), moment_scale mu_B g_S in J/T or |d| in C m.
struct Transition {
  double omega_t = 0.0;
  std::array<double, 3> weights{0.25, 0.25, 0.25};
  double moment_scale = 0.0;
  Coupling kind = Coupling::Magnetic;

  double parallel_weight() const { return weights[0] + weights[1]; }
  double perp_weight() const { return weights[2]; }
  void validate() const;
};

using TransitionSet = std::vector<Transition>;

Transition magnetic_transition(double omega_t, std::array<double, 3> weights);

struct ShiftResult {
  double delta_omega = 0.0;
  std::vector<double> per_transition;
  std::vector<std::string> regime_tags;
};

// (2z)^3 i_rho as a function of X = k_t z; eps is sampled at omega_t zeta / X.
std::array<double, 2> reduced_i_rho(double X, double omega_t, const MaterialModel& model,
                                    double h_over_z, Coupling coupling, const QuadratureSpec& spec);

// (i_par, i_perp) in m^-3
std::array<double, 2> i_rho(double omega_t, const MaterialModel& model, const SlabGeometry& geom,
                            const QuadratureSpec& spec = {});

// perfect-conductor dimensionless integrals (parallel, perp)
std::array<double, 2> tilde_i(double x, const QuadratureSpec& spec = {});

ShiftResult ground_shift(const SlabGeometry& geom, const TransitionSet& transitions,
                         const MaterialModel& model, const QuadratureSpec& spec = {});

// Resonant-term functions of the excited-state shift above a perfect conductor.
double f_parallel(double x);
double f_perp(double x);

ShiftResult excited_shift_pc(const SlabGeometry& geom, const TransitionSet& transitions,
                             const QuadratureSpec& spec = {});

// Large-distance form of excited_shift_pc, from f_rho ~ -(2x)^2 (...) .
double excited_shift_pc_far(double z, const TransitionSet& transitions);

// Free-space spontaneous emission rate summed over the transitions, at omega.
double free_space_rate(double omega, const TransitionSet& transitions);

// Spin-flip (or electric-dipole) rate at transition frequency omega; the
// transitions supply weights and moment scales.
double spin_flip_rate(const SlabGeometry& geom, double omega, const TransitionSet& transitions,
                      const MaterialModel& model, const QuadratureSpec& spec = {});

std::complex<double> ww_amplitude(double t, double gamma, double delta_omega, std::complex<double> c0);

std::string distance_regime(double x);

} // namespace cpforce
