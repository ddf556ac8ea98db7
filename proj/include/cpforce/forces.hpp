#pragma once

#include "cpforce/materials.hpp"
#include "cpforce/quadrature.hpp"
#include "cpforce/shifts.hpp"
#include "cpforce/slab_green.hpp"

#include <array>
#include <optional>
#include <string>

namespace cpforce {

struct Weights {
  double wx = 0.25;
  double wy = 0.25;
  double wz = 0.25;

  double parallel() const { return wx + wy; }
  double perp() const { return wz; }
  void validate() const;
};

// z-differentiated, rescaled kernels (ibar_par, ibar_perp) at x = k_A z.
// eps is sampled at omega_A zeta / x, so only ratios of model frequencies to
// omega_A matter.
std::array<double, 2> force_kernels(double x, const MaterialModel& model, double omega_A,
                                    double h_over_z = kInfinity, const QuadratureSpec& spec = {},
                                    Coupling coupling = Coupling::Magnetic);

// Closed perfect-conductor form of force_kernels, ibar = 3 tilde_i - x tilde_i'.
std::array<double, 2> force_kernels_pc(double x, const QuadratureSpec& spec = {});

// Second path for plasma (nu_bar = 0) and drude media written directly in the
// wave-vector variable lambda z, with alpha^2 -> alpha^2 s/(s + nu_bar), s = omega/omega_A.
std::array<double, 2> force_kernels_plasma(double x, double alpha, double nu_bar,
                                           const QuadratureSpec& spec = {});

double F_M(double x, const Weights& w, const MaterialModel& model, double omega_A,
           double h_over_z = kInfinity, const QuadratureSpec& spec = {});
double F_E(double x, const Weights& w, const MaterialModel& model, double omega_A,
           double h_over_z = kInfinity, const QuadratureSpec& spec = {});

// Dimensional force in newtons, positive when repulsive; equals -hbar d(delta omega)/dz.
double F_dimensional(const SlabGeometry& geom, const TransitionSet& transitions,
                     const MaterialModel& model, const QuadratureSpec& spec = {});

enum class Regime { QuadraticRise, Plateau, FarField, Unclassified };

struct RegimePrediction {
  Regime regime = Regime::Unclassified;
  std::optional<double> predicted_F_M;
};

std::string regime_name(Regime r);
// alpha may be +infinity (perfect conductor)
RegimePrediction regime_classify(double x, double alpha, double nu_bar, const Weights& w = {});

// Predicted small-distance electric force for a plasma with alpha x << 1.
double electric_near_field_plasma(double alpha, const Weights& w = {});

struct ForcePoint {
  double x = 0.0;
  double ibar_parallel = 0.0;
  double ibar_perp = 0.0;
  double F = 0.0;
  std::optional<double> F_dimensional;
  RegimePrediction prediction;
};

} // namespace cpforce
