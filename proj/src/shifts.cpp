#include "cpforce/shifts.hpp"

#include "cpforce/errors.hpp"
#include "cpforce/units.hpp"

#include <cmath>
#include <numbers>
#include <optional>

namespace cpforce {

namespace {

constexpr double pi = std::numbers::pi;

double shift_prefactor(Coupling kind) {
  const auto& k = constants();
  return kind == Coupling::Magnetic ? k.mu0 / (4.0 * pi * k.hbar) : 1.0 / (4.0 * pi * k.eps0 * k.hbar);
}

void require_transitions(const TransitionSet& ts) {
  if (ts.empty()) throw DomainError("transition set is empty");
  for (const auto& t : ts) t.validate();
}

} // namespace

void Transition::validate() const {
  if (omega_t == 0.0) throw DomainError("degenerate transition (zero transition frequency)");
  if (!(omega_t > 0.0) || !std::isfinite(omega_t))
    throw DomainError("transition frequency must be positive");
  for (double w : weights)
    if (!(w >= 0.0) || !std::isfinite(w)) throw DomainError("transition weights must be non-negative");
  if (!(moment_scale >= 0.0) || !std::isfinite(moment_scale))
    throw DomainError("moment scale must be non-negative");
}

Transition magnetic_transition(double omega_t, std::array<double, 3> weights) {
  Transition t;
  t.omega_t = omega_t;
  t.weights = weights;
  t.moment_scale = constants().muB * constants().g_S;
  t.kind = Coupling::Magnetic;
  return t;
}

std::string distance_regime(double x) {
  if (x <= 0.01) return "near";
  if (x >= 10.0) return "far";
  return "intermediate";
}

std::array<double, 2> reduced_i_rho(double X, double omega_t, const MaterialModel& model,
                                    double hz, Coupling coupling, const QuadratureSpec& spec) {
  if (!(X > 0.0)) throw DomainError("k_t z must be positive");
  if (!(omega_t > 0.0)) throw DomainError("transition frequency must be positive");
  if (is_vacuum(model)) return {0.0, 0.0};
  auto F = [&](double zeta) -> std::array<double, 2> {
    if (!(zeta > 0.0)) return {0.0, 0.0};
    return reduced_kernels(zeta, medium_at(model, omega_t * zeta / X), hz, KernelOrder::Shift,
                           coupling, spec);
  };
  auto r = modular_split_n<2>(F, X, spec);
  if (!r.converged)
    throw NumericError("imaginary-frequency integral", std::max(r.error_estimate[0], r.error_estimate[1]),
                       spec.rel_tol);
  return r.value;
}

std::array<double, 2> i_rho(double omega_t, const MaterialModel& model, const SlabGeometry& geom,
                            const QuadratureSpec& spec) {
  geom.validate();
  const double X = omega_t * geom.z / constants().c;
  const auto r = reduced_i_rho(X, omega_t, model, geom.h_over_z(), Coupling::Magnetic, spec);
  const double d = 8.0 * geom.z * geom.z * geom.z;
  return {r[0] / d, r[1] / d};
}

std::array<double, 2> tilde_i(double x, const QuadratureSpec& spec) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("tilde_i requires x > 0");
  const double a2 = 4.0 * x * x;
  auto f = [a2](double xi) -> std::array<double, 2> {
    const double e = std::exp(-xi) / (a2 + xi * xi);
    return {e * (xi * xi + xi + 1.0), e * (xi + 1.0)};
  };
  std::vector<double> bp;
  for (double b : {2.0 * x, 20.0 * x})
    if (b < 40.0) bp.push_back(b);
  QuadratureSpec s = spec;
  s.tail_policy = TailPolicy::ExponentialBound;
  s.decay_length = 1.0;
  auto r = integrate_adaptive_n<2>(f, 0.0, kInfinity, s, {}, bp);
  if (!r.converged)
    throw NumericError("tilde_i integral", std::max(r.error_estimate[0], r.error_estimate[1]), s.rel_tol);
  return {2.0 * x / pi * r.value[0], 4.0 * x / pi * r.value[1]};
}

ShiftResult ground_shift(const SlabGeometry& geom, const TransitionSet& transitions,
                         const MaterialModel& model, const QuadratureSpec& spec) {
  geom.validate();
  require_transitions(transitions);
  const double z = geom.z;
  const double d = 8.0 * z * z * z;
  ShiftResult res;
  for (const auto& t : transitions) {
    const double X = t.omega_t * z / constants().c;
    std::array<double, 2> r{0.0, 0.0};
    if (is_perfect_conductor(model)) {
      r = tilde_i(X, spec);
      if (t.kind == Coupling::Electric) r = {-r[0], -r[1]};
    } else if (!is_vacuum(model)) {
      r = reduced_i_rho(X, t.omega_t, model, geom.h_over_z(), t.kind, spec);
    }
    const double m2 = t.moment_scale * t.moment_scale;
    const double c = shift_prefactor(t.kind) * m2 *
                     (t.parallel_weight() * r[0] + t.perp_weight() * r[1]) / d;
    res.per_transition.push_back(c);
    res.regime_tags.push_back(distance_regime(X));
    res.delta_omega += c;
  }
  return res;
}

double f_parallel(double x) {
  const double y = 2.0 * x;
  const double c = std::cos(y);
  return -y * y * (c + 0.5) + y * std::sin(y) + c - 1.0 + (y + 1.0) * std::exp(-y);
}

double f_perp(double x) {
  const double y = 2.0 * x;
  return 2.0 * f_parallel(x) - 2.0 * y * y * std::cos(y);
}

ShiftResult excited_shift_pc(const SlabGeometry& geom, const TransitionSet& transitions,
                             const QuadratureSpec& spec) {
  geom.validate();
  require_transitions(transitions);
  const double z = geom.z;
  const double d = 8.0 * z * z * z;
  ShiftResult res;
  for (const auto& t : transitions) {
    if (t.kind != Coupling::Magnetic)
      throw UnsupportedModel("excited-state shift is available for magnetic transitions only");
    const double X = t.omega_t * z / constants().c;
    const auto ti = tilde_i(X, spec);
    const double m2 = t.moment_scale * t.moment_scale;
    const double c = shift_prefactor(t.kind) * m2 / d *
                     (t.parallel_weight() * (f_parallel(X) - ti[0]) +
                      t.perp_weight() * (f_perp(X) - ti[1]));
    res.per_transition.push_back(c);
    res.regime_tags.push_back(distance_regime(X));
    res.delta_omega += c;
  }
  return res;
}

double excited_shift_pc_far(double z, const TransitionSet& transitions) {
  if (!(z > 0.0)) throw DomainError("distance z must be positive");
  require_transitions(transitions);
  const auto& k = constants();
  double sum = 0.0;
  for (const auto& t : transitions) {
    const double kt = t.omega_t / k.c;
    const double c = std::cos(2.0 * kt * z);
    const double m2 = t.moment_scale * t.moment_scale;
    sum += -k.mu0 / (8.0 * pi * k.hbar) * kt * kt / z * m2 *
           (t.parallel_weight() * (c + 0.5) + t.perp_weight() * (4.0 * c + 1.0));
  }
  return sum;
}

double free_space_rate(double omega, const TransitionSet& transitions) {
  if (!(omega > 0.0)) throw DomainError("omega must be positive");
  const auto& k = constants();
  double g = 0.0;
  for (const auto& t : transitions) {
    const double m2 = t.moment_scale * t.moment_scale;
    const double wsum = t.weights[0] + t.weights[1] + t.weights[2];
    const double coupling = t.kind == Coupling::Magnetic ? k.mu0 : 1.0 / k.eps0;
    g += coupling * m2 * omega * omega * omega * wsum / (3.0 * pi * k.hbar * k.c * k.c * k.c);
  }
  return g;
}

double spin_flip_rate(const SlabGeometry& geom, double omega, const TransitionSet& transitions,
                      const MaterialModel& model, const QuadratureSpec& spec) {
  geom.validate();
  if (!(omega > 0.0)) throw DomainError("omega must be positive");
  require_transitions(transitions);
  const double gamma0 = free_space_rate(omega, transitions);
  if (is_vacuum(model)) return gamma0;

  const bool perfect = is_perfect_conductor(model);
  std::complex<double> eps(1.0, 0.0);
  if (!perfect) {
    if (!std::holds_alternative<Drude>(model))
      throw UnsupportedModel("spin-flip rates need a lossy real-frequency response (drude) or a perfect conductor");
    eps = epsilon_real_axis(model, omega);
  }
  const auto& k = constants();
  const double z = geom.z;
  const double kz = omega * z / k.c;
  std::optional<RealTensor> tm, te;
  double gamma = gamma0;
  for (const auto& t : transitions) {
    auto& T = t.kind == Coupling::Magnetic ? tm : te;
    if (!T) T = reduced_tensor_real(kz, eps, perfect, geom.h_over_z(), t.kind, spec);
    const double pref = t.kind == Coupling::Magnetic ? 2.0 * k.mu0 / k.hbar : 2.0 / (k.hbar * k.eps0);
    const double m2 = t.moment_scale * t.moment_scale;
    gamma += pref * m2 * (t.parallel_weight() * T->xx.imag() + t.perp_weight() * T->zz.imag()) /
             (32.0 * pi * z * z * z);
  }
  return gamma;
}

std::complex<double> ww_amplitude(double t, double gamma, double delta_omega, std::complex<double> c0) {
  if (!(t >= 0.0)) throw DomainError("time must be non-negative");
  if (!(gamma >= 0.0)) throw DomainError("decay rate must be non-negative");
  return c0 * std::exp(-0.5 * gamma * t) * std::exp(std::complex<double>(0.0, -delta_omega * t));
}

} // namespace cpforce
