#include "cpforce/forces.hpp"

#include "cpforce/errors.hpp"
#include "cpforce/units.hpp"

#include <cmath>
#include <numbers>

namespace cpforce {

namespace {

constexpr double pi = std::numbers::pi;

void require_x(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("x = k_A z must be positive");
}

template <class F>
std::array<double, 2> lorentz_average(F&& kernel, double x, const QuadratureSpec& spec) {
  auto r = modular_split_n<2>(kernel, x, spec);
  if (!r.converged)
    throw NumericError("imaginary-frequency force integral",
                       std::max(r.error_estimate[0], r.error_estimate[1]), spec.rel_tol);
  return r.value;
}

} // namespace

void Weights::validate() const {
  for (double w : {wx, wy, wz})
    if (!(w >= 0.0) || !std::isfinite(w)) throw DomainError("weights must be non-negative");
}

std::array<double, 2> force_kernels(double x, const MaterialModel& model, double omega_A,
                                    double hz, const QuadratureSpec& spec, Coupling coupling) {
  require_x(x);
  if (is_vacuum(model)) return {0.0, 0.0};
  if (!(omega_A > 0.0)) throw DomainError("omega_A must be positive");
  auto kernel = [&](double zeta) -> std::array<double, 2> {
    if (!(zeta > 0.0)) return {0.0, 0.0};
    return reduced_kernels(zeta, medium_at(model, omega_A * zeta / x), hz, KernelOrder::Force,
                           coupling, spec);
  };
  return lorentz_average(kernel, x, spec);
}

std::array<double, 2> force_kernels_pc(double x, const QuadratureSpec& spec) {
  require_x(x);
  auto kernel = [](double zeta) {
    return pc_reduced_kernels(zeta, KernelOrder::Force, Coupling::Magnetic);
  };
  return lorentz_average(kernel, x, spec);
}

std::array<double, 2> force_kernels_plasma(double x, double alpha, double nu_bar,
                                           const QuadratureSpec& spec) {
  require_x(x);
  if (!(alpha >= 0.0)) throw DomainError("alpha must be non-negative");
  if (!(nu_bar >= 0.0)) throw DomainError("nu_bar must be non-negative");
  if (std::isinf(alpha)) return force_kernels_pc(x, spec);
  if (alpha == 0.0) return {0.0, 0.0};
  QuadratureSpec inner = spec.tightened(0.1);
  inner.tail_policy = TailPolicy::ExponentialBound;
  inner.decay_length = 0.5;
  auto kernel = [&](double xi) -> std::array<double, 2> {
    if (!(xi > 0.0)) return {0.0, 0.0};
    const double s = xi / x;
    const double ax = alpha * x;
    const double g2 = nu_bar > 0.0 ? ax * ax * (s / (s + nu_bar)) : ax * ax;
    const double xi2 = xi * xi;
    auto integrand = [&](double y) -> std::array<double, 2> {
      const double y2 = y * y;
      const double a = std::sqrt(y2 + xi2);
      const double b = std::sqrt(g2 + xi2 + y2);
      const double e = std::exp(-2.0 * a);
      const double rs = g2 / ((a + b) * (a + b));
      const double d = (xi2 + g2) * a + xi2 * b;
      const double rp = d > 0.0 ? g2 * ((xi2 + y2) * (2.0 * xi2 + g2) - xi2 * xi2) / (d * d) : 0.0;
      return {8.0 * y * e * ((xi2 + y2) * rs + xi2 * rp), 16.0 * y2 * y * e * rs};
    };
    if (std::exp(-2.0 * xi) == 0.0) return {0.0, 0.0};
    auto r = integrate_adaptive_n<2>(integrand, 0.0, kInfinity, inner);
    if (!r.converged)
      throw NumericError("plasma wave-vector integral", std::max(r.error_estimate[0], r.error_estimate[1]),
                         inner.rel_tol);
    return r.value;
  };
  return lorentz_average(kernel, x, spec);
}

double F_M(double x, const Weights& w, const MaterialModel& model, double omega_A, double hz,
           const QuadratureSpec& spec) {
  w.validate();
  const auto k = force_kernels(x, model, omega_A, hz, spec, Coupling::Magnetic);
  return w.parallel() * k[0] + w.perp() * k[1];
}

double F_E(double x, const Weights& w, const MaterialModel& model, double omega_A, double hz,
           const QuadratureSpec& spec) {
  w.validate();
  const auto k = force_kernels(x, model, omega_A, hz, spec, Coupling::Electric);
  return w.parallel() * k[0] + w.perp() * k[1];
}

double F_dimensional(const SlabGeometry& geom, const TransitionSet& transitions,
                     const MaterialModel& model, const QuadratureSpec& spec) {
  geom.validate();
  if (transitions.empty()) throw DomainError("transition set is empty");
  const auto& k = constants();
  const double z = geom.z;
  const double z4 = z * z * z * z;
  double total = 0.0;
  for (const auto& t : transitions) {
    t.validate();
    const double x = t.omega_t * z / k.c;
    const auto ib = force_kernels(x, model, t.omega_t, geom.h_over_z(), spec, t.kind);
    const double m2 = t.moment_scale * t.moment_scale;
    const double pref = t.kind == Coupling::Magnetic ? k.mu0 * m2 / (32.0 * pi * z4)
                                                     : m2 / (32.0 * pi * k.eps0 * z4);
    total += pref * (t.parallel_weight() * ib[0] + t.perp_weight() * ib[1]);
  }
  return total;
}

std::string regime_name(Regime r) {
  switch (r) {
  case Regime::QuadraticRise: return "quadratic-rise";
  case Regime::Plateau: return "plateau";
  case Regime::FarField: return "far-field";
  case Regime::Unclassified: return "unclassified";
  }
  return "unclassified";
}

RegimePrediction regime_classify(double x, double alpha, double nu_bar, const Weights& w) {
  require_x(x);
  if (!(alpha >= 0.0) || !(nu_bar >= 0.0)) throw DomainError("alpha and nu_bar must be non-negative");
  const double a = std::isinf(alpha) ? alpha : alpha / std::sqrt(1.0 + nu_bar);
  const double ax = a * x;
  RegimePrediction p;
  if (x >= 10.0 && ax >= 10.0) {
    p.regime = Regime::FarField;
    p.predicted_F_M = (w.parallel() + w.perp()) * 8.0 / (pi * x);
  } else if (x <= 0.1 && ax >= 10.0) {
    p.regime = Regime::Plateau;
    p.predicted_F_M = 1.5 * (w.parallel() + 2.0 * w.perp());
  } else if (x <= 0.1 && ax <= 0.1) {
    p.regime = Regime::QuadraticRise;
    p.predicted_F_M =
        (w.parallel() * (0.5 + 2.0 / (2.0 + std::sqrt(2.0) * a)) + w.perp()) * ax * ax / 2.0;
  }
  return p;
}

double electric_near_field_plasma(double alpha, const Weights& w) {
  if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
  if (std::isinf(alpha)) return -(1.5 * w.parallel() + 3.0 * w.perp());
  return -(1.5 * w.parallel() + 3.0 * w.perp()) * alpha / (std::sqrt(2.0) + alpha);
}

} // namespace cpforce
