#include "cpforce/slab_green.hpp"

#include "cpforce/errors.hpp"
#include "cpforce/units.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace cpforce {

namespace {

using cplx = std::complex<double>;

constexpr double kHugeChi = 1e100;

double slab_factor(double r, double eta_h) {
  if (std::isinf(eta_h)) return r;
  const double E = std::exp(-2.0 * eta_h);
  const double one_minus_E = -std::expm1(-2.0 * eta_h);
  return r * one_minus_E / (1.0 - r * r * E);
}

cplx one_minus_exp(const cplx& w) {
  if (std::abs(w) < 1e-3) return -(w * (1.0 + w * (0.5 + w * (1.0 / 6.0 + w / 24.0))));
  return 1.0 - std::exp(w);
}

cplx slab_factor_real(const cplx& r, const cplx& eta, double hz) {
  if (std::isinf(hz)) return r;
  const cplx w = cplx(0.0, 2.0) * eta * hz;
  const cplx E = std::exp(w);
  return r * one_minus_exp(w) / (1.0 - r * r * E);
}

void require_lambda_omega(double lambda, double omega) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) throw DomainError("lambda must be non-negative");
  if (!(omega > 0.0) || !std::isfinite(omega)) throw DomainError("omega must be positive");
}

} // namespace

void SlabGeometry::validate() const {
  if (!(z > 0.0) || !std::isfinite(z)) throw DomainError("atom-surface distance z must be positive");
  if (!(h > 0.0)) throw DomainError("slab thickness h must be positive or infinite");
}

FresnelPair fresnel_imag(double lambda, double omega, double eps) {
  require_lambda_omega(lambda, omega);
  if (!(eps >= 1.0)) throw DomainError("eps(i omega) must be >= 1");
  const double k = omega / constants().c;
  const double chi = eps - 1.0;
  if (chi == 0.0) return {0.0, 0.0};
  const double l2 = lambda * lambda;
  const double k2 = k * k;
  const double eta0 = std::sqrt(k2 + l2);
  const double eta = std::sqrt(k2 * eps + l2);
  if (chi > kHugeChi || !std::isfinite(eta)) {
    const double rs = std::isfinite(eta) ? (eta0 - eta) / (eta0 + eta) : -1.0;
    return {rs, 1.0 - 2.0 * eta / (eps * eta0 + eta)};
  }
  const double rs = -k2 * chi / ((eta0 + eta) * (eta0 + eta));
  const double d = eps * eta0 + eta;
  const double rp = chi * ((eps + 1.0) * l2 + eps * k2) / (d * d);
  return {rs, rp};
}

ScatterPair scatter_coeffs(double lambda, double omega, double eps, double h) {
  if (!(h > 0.0)) throw DomainError("slab thickness h must be positive or infinite");
  const auto r = fresnel_imag(lambda, omega, eps);
  if (std::isinf(h)) return {r.r_p, r.r_s};
  const double k = omega / constants().c;
  const double eta = std::sqrt(k * k * eps + lambda * lambda);
  return {slab_factor(r.r_p, eta * h), slab_factor(r.r_s, eta * h)};
}

ScatterPair scatter_coeffs(double lambda, double omega, const MaterialModel& model, double h) {
  if (is_perfect_conductor(model)) {
    require_lambda_omega(lambda, omega);
    return {1.0, -1.0};
  }
  return scatter_coeffs(lambda, omega, epsilon_imag_axis(model, omega), h);
}

ReducedMedium medium_at(const MaterialModel& model, double omega) {
  if (is_perfect_conductor(model)) return {true, 0.0};
  return {false, susceptibility_imag_axis(model, omega)};
}

ScatterPair reduced_scatter(double u, double zeta, const ReducedMedium& m, double hz) {
  if (m.perfect) return {1.0, -1.0};
  const double chi = m.chi;
  if (chi == 0.0) return {0.0, 0.0};
  const double eta0 = u + zeta;
  const double l2 = u * (u + 2.0 * zeta);
  const double z2 = zeta * zeta;
  const double eps = 1.0 + chi;
  double rs, rp, eta;
  if (!std::isfinite(chi) || chi > kHugeChi) {
    eta = std::sqrt(eta0 * eta0 + z2 * chi);
    if (!std::isfinite(eta)) return {1.0, -1.0};
    rs = (eta0 - eta) / (eta0 + eta);
    rp = 1.0 - 2.0 * eta / (eps * eta0 + eta);
  } else {
    eta = std::sqrt(eta0 * eta0 + z2 * chi);
    const double s = eta0 + eta;
    rs = -z2 * chi / (s * s);
    const double d = eps * eta0 + eta;
    rp = d > 0.0 ? chi * ((eps + 1.0) * l2 + eps * z2) / (d * d) : 0.0;
  }
  if (std::isinf(hz)) return {rp, rs};
  return {slab_factor(rp, eta * hz), slab_factor(rs, eta * hz)};
}

std::array<double, 2> reduced_kernels(double zeta, const ReducedMedium& m, double hz,
                                      KernelOrder order, Coupling coupling,
                                      const QuadratureSpec& spec) {
  if (!m.perfect && m.chi == 0.0) return {0.0, 0.0};
  const double pre = std::exp(-2.0 * zeta);
  if (pre == 0.0) return {0.0, 0.0};
  const bool force = order == KernelOrder::Force;
  const bool electric = coupling == Coupling::Electric;
  auto integrand = [&](double u) -> std::array<double, 2> {
    const ScatterPair c = reduced_scatter(u, zeta, m, hz);
    const double cn = electric ? c.C_M : c.C_N;
    const double cm = electric ? c.C_N : c.C_M;
    const double e = std::exp(-2.0 * u);
    const double eta0 = u + zeta;
    const double l2 = u * (u + 2.0 * zeta);
    double perp = 8.0 * l2 * (-cm) * e;
    double par = 4.0 * (zeta * zeta * cn - eta0 * eta0 * cm) * e;
    if (force) {
      perp *= 2.0 * eta0;
      par *= 2.0 * eta0;
    }
    return {par, perp};
  };
  QuadratureSpec inner = spec.tightened(0.1);
  inner.tail_policy = TailPolicy::ExponentialBound;
  inner.decay_length = 0.5;
  auto r = integrate_adaptive_n<2>(integrand, 0.0, kInfinity, inner);
  if (!r.converged)
    throw NumericError("wave-vector integral", std::max(r.error_estimate[0], r.error_estimate[1]),
                       inner.rel_tol);
  return {pre * r.value[0], pre * r.value[1]};
}

std::array<double, 2> pc_reduced_kernels(double zeta, KernelOrder order, Coupling coupling) {
  const double pre = std::exp(-2.0 * zeta);
  const double s = coupling == Coupling::Electric ? -1.0 : 1.0;
  if (order == KernelOrder::Shift)
    return {s * pre * (4.0 * zeta * zeta + 2.0 * zeta + 1.0), s * pre * 2.0 * (1.0 + 2.0 * zeta)};
  const double z2 = zeta * zeta;
  return {s * pre * (3.0 + 6.0 * zeta + 8.0 * z2 + 8.0 * z2 * zeta),
          s * pre * 2.0 * (3.0 + 6.0 * zeta + 4.0 * z2)};
}

KernelPair kernels_imag_axis(double omega, const SlabGeometry& geom, const MaterialModel& model,
                             const QuadratureSpec& spec) {
  if (!(omega > 0.0)) throw DomainError("omega must be positive");
  geom.validate();
  KernelPair k;
  if (is_vacuum(model)) return k;
  const double zeta = omega * geom.z / constants().c;
  const auto J = reduced_kernels(zeta, medium_at(model, omega), geom.h_over_z(), KernelOrder::Shift,
                                 Coupling::Magnetic, spec);
  const double z3 = geom.z * geom.z * geom.z;
  k.reduced_parallel = -J[0];
  k.reduced_perp = -J[1];
  k.parallel = -J[0] / (8.0 * z3);
  k.perp = -J[1] / (8.0 * z3);
  return k;
}

RealTensor reduced_tensor_real(double kz, const cplx& eps, bool perfect, double hz,
                               Coupling coupling, const QuadratureSpec& spec) {
  if (!(kz > 0.0) || !std::isfinite(kz)) throw DomainError("k z must be positive");
  if (!perfect && eps.imag() < 0.0) throw DomainError("passive medium requires Im eps >= 0");
  RealTensor T;
  if (!perfect && eps == cplx(1.0, 0.0)) return T;
  const double kap = kz;
  const double k2 = kap * kap;
  const cplx chi = eps - 1.0;
  const bool electric = coupling == Coupling::Electric;
  const cplx I(0.0, 1.0);

  auto coeffs = [&](const cplx& eta0, double l2) -> std::pair<cplx, cplx> {
    if (perfect) return {1.0, -1.0};
    const cplx eta = std::sqrt(eps * k2 - l2);
    const cplx s = eta0 + eta;
    const cplx rs = -k2 * chi / (s * s);
    const cplx d = eps * eta0 + eta;
    const cplx rp = chi * (eps * k2 - (eps + 1.0) * l2) / (d * d);
    return {slab_factor_real(rp, eta, hz), slab_factor_real(rs, eta, hz)};
  };

  auto prop = [&](double u) -> std::array<double, 4> {
    const double l2 = (kap - u) * (kap + u);
    auto [cn, cm] = coeffs(cplx(u, 0.0), l2);
    if (electric) std::swap(cn, cm);
    const cplx ph = I * std::exp(cplx(0.0, 2.0 * u));
    const cplx xx = 4.0 * ph * (k2 * cn - u * u * cm);
    const cplx zz = 8.0 * ph * l2 * cm;
    return {xx.real(), xx.imag(), zz.real(), zz.imag()};
  };
  auto evan = [&](double v) -> std::array<double, 4> {
    const double l2 = k2 + v * v;
    auto [cn, cm] = coeffs(cplx(0.0, v), l2);
    if (electric) std::swap(cn, cm);
    const double e = std::exp(-2.0 * v);
    const cplx xx = 4.0 * e * (k2 * cn + v * v * cm);
    const cplx zz = 8.0 * e * l2 * cm;
    return {xx.real(), xx.imag(), zz.real(), zz.imag()};
  };

  QuadratureSpec s = spec;
  // free-space reference (16/3) kappa^3 corresponds to the vacuum rate
  s.abs_tol = std::max(spec.abs_tol * std::max(1.0, k2), spec.rel_tol * 16.0 / 3.0 * k2 * kap);
  std::vector<double> half_periods;
  const double hp = 0.5 * std::numbers::pi;
  for (double u = hp; u < kap; u += hp) half_periods.push_back(u);
  auto rp = integrate_adaptive_n<4>(prop, 0.0, kap, s, {}, half_periods);
  if (!rp.converged)
    throw NumericError("oscillatory propagating-wave integral",
                       *std::max_element(rp.error_estimate.begin(), rp.error_estimate.end()), s.rel_tol);
  QuadratureSpec se = s;
  se.tail_policy = TailPolicy::ExponentialBound;
  se.decay_length = 0.5;
  auto re = integrate_adaptive_n<4>(evan, 0.0, kInfinity, se);
  if (!re.converged)
    throw NumericError("evanescent-wave integral",
                       *std::max_element(re.error_estimate.begin(), re.error_estimate.end()), se.rel_tol);
  T.xx = cplx(rp.value[0] + re.value[0], rp.value[1] + re.value[1]);
  T.zz = cplx(rp.value[2] + re.value[2], rp.value[3] + re.value[3]);
  T.evaluations = rp.evaluations + re.evaluations;
  return T;
}

std::array<cplx, 2> curl_green_real(double omega, const SlabGeometry& geom, const cplx& eps_real,
                                    const QuadratureSpec& spec, Coupling coupling) {
  if (!(omega > 0.0)) throw DomainError("omega must be positive");
  geom.validate();
  const double z = geom.z;
  const auto T = reduced_tensor_real(omega * z / constants().c, eps_real, false, geom.h_over_z(),
                                     coupling, spec);
  const double n = 32.0 * std::numbers::pi * z * z * z;
  return {T.xx / n, T.zz / n};
}

std::array<cplx, 2> curl_green_real_pc(double omega, const SlabGeometry& geom,
                                       const QuadratureSpec& spec, Coupling coupling) {
  if (!(omega > 0.0)) throw DomainError("omega must be positive");
  geom.validate();
  const double z = geom.z;
  const auto T = reduced_tensor_real(omega * z / constants().c, cplx(1.0, 0.0), true,
                                     geom.h_over_z(), coupling, spec);
  const double n = 32.0 * std::numbers::pi * z * z * z;
  return {T.xx / n, T.zz / n};
}

} // namespace cpforce
