#pragma once

#include "cpforce/materials.hpp"
#include "cpforce/quadrature.hpp"

#include <array>
#include <complex>

namespace cpforce {

struct SlabGeometry {
  double z = 1e-6;
  double h = kInfinity;

  bool infinite() const { return std::isinf(h); }
  double h_over_z() const { return h / z; }
  void validate() const;
};

enum class Coupling { Magnetic, Electric };
enum class KernelOrder { Shift, Force };

struct FresnelPair {
  double r_s = 0.0;
  double r_p = 0.0;
};

struct ScatterPair {
  double C_N = 0.0;
  double C_M = 0.0;
};

// I_par, I_perp in m^-3 and the same quantities multiplied by (2z)^3
struct KernelPair {
  double parallel = 0.0;
  double perp = 0.0;
  double reduced_parallel = 0.0;
  double reduced_perp = 0.0;
};

// lambda in 1/m, omega the imaginary-axis frequency in rad/s, eps = eps(i omega)
FresnelPair fresnel_imag(double lambda, double omega, double eps);
ScatterPair scatter_coeffs(double lambda, double omega, double eps, double h);
ScatterPair scatter_coeffs(double lambda, double omega, const MaterialModel& model, double h);

// Medium as seen at one imaginary frequency: either a perfect conductor or a
// susceptibility chi = eps(i omega) - 1.
struct ReducedMedium {
  bool perfect = false;
  double chi = 0.0;
};

ReducedMedium medium_at(const MaterialModel& model, double omega);

// Scattering coefficients in reduced variables: zeta = omega z / c, u = eta0 z - zeta.
ScatterPair reduced_scatter(double u, double zeta, const ReducedMedium& m, double h_over_z);

// Inner wave-vector integrals at reduced imaginary frequency zeta, returned as
// (parallel, perp). Shift order: J with (2z)^3 I = -J. Force order: the
// z-differentiated kernels entering the rescaled force.
std::array<double, 2> reduced_kernels(double zeta, const ReducedMedium& m, double h_over_z,
                                      KernelOrder order, Coupling coupling,
                                      const QuadratureSpec& spec);

// Closed forms of reduced_kernels for C_N = 1, C_M = -1.
std::array<double, 2> pc_reduced_kernels(double zeta, KernelOrder order, Coupling coupling);

KernelPair kernels_imag_axis(double omega, const SlabGeometry& geom, const MaterialModel& model,
                             const QuadratureSpec& spec = {});

// Reduced real-frequency curl-curl scattering tensor, T = 32 pi z^3 (curl G curl)_ii,
// returned as (xx, zz). kz = omega z / c.
struct RealTensor {
  std::complex<double> xx;
  std::complex<double> zz;
  std::size_t evaluations = 0;
};

RealTensor reduced_tensor_real(double kz, const std::complex<double>& eps, bool perfect,
                               double h_over_z, Coupling coupling, const QuadratureSpec& spec);

// Diagonal (g_par, g_perp) of curl G^S curl at equal positions, in m^-3.
std::array<std::complex<double>, 2> curl_green_real(double omega, const SlabGeometry& geom,
                                                    const std::complex<double>& eps_real,
                                                    const QuadratureSpec& spec = {},
                                                    Coupling coupling = Coupling::Magnetic);
std::array<std::complex<double>, 2> curl_green_real_pc(double omega, const SlabGeometry& geom,
                                                       const QuadratureSpec& spec = {},
                                                       Coupling coupling = Coupling::Magnetic);

} // namespace cpforce
