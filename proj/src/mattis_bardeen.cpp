#include "cpforce/errors.hpp"
#include "cpforce/materials.hpp"
#include "cpforce/units.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <numbers>

namespace cpforce {

namespace {

using cplx = std::complex<double>;
using Arr2 = std::array<double, 2>;

// Point inside a panel [a,b] known both as x and by its exact distances
// t = x - a and s = b - x.
struct PanelPoint {
  double x, t, s;
};

// Integrates h over [a,b] where h(p) already carries the sqrt(t s) factor that
// cancels inverse square roots at both ends. Each half is mapped by a square-root
// substitution measured from its own endpoint.
template <class H>
QuadratureResultN<2> sqrt_panel(H&& h, double a, double b, const QuadratureSpec& spec) {
  const double L = b - a;
  const double half = 0.5 * L;
  std::vector<double> bp;
  for (double d = 1.0; d < half; d *= 2.0) bp.push_back(std::sqrt(d));
  auto left = [&](double sg) -> Arr2 {
    const double t = sg * sg;
    const double s = L - t;
    Arr2 v = h(PanelPoint{a + t, t, s});
    const double j = 2.0 / std::sqrt(s);
    return {v[0] * j, v[1] * j};
  };
  auto right = [&](double sg) -> Arr2 {
    const double s = sg * sg;
    const double t = L - s;
    Arr2 v = h(PanelPoint{b - s, t, s});
    const double j = 2.0 / std::sqrt(t);
    return {v[0] * j, v[1] * j};
  };
  const double sh = std::sqrt(half);
  auto r = integrate_adaptive_n<2>(left, 0.0, sh, spec, {}, bp);
  r += integrate_adaptive_n<2>(right, 0.0, sh, spec, {}, bp);
  return r;
}

// Factors of u1 u2 = sqrt(|x-1||x+1||x-(1-w)||x-(-1-w)|) for a panel whose
// endpoints are roots of that product.
struct Roots {
  double w;
  std::array<double, 4> r;
  explicit Roots(double w_) : w(w_), r{1.0, -1.0, 1.0 - w_, -1.0 - w_} {}
};

struct Factors {
  double u1mag;   // sqrt(|x-1||x+1|)
  double u2;      // sqrt(|x+w-1||x+w+1|)
  double wfac;    // sqrt(t s) / (u1mag u2)
  double N;       // x^2 + w x + 1
};

Factors factors(const Roots& R, double a, double b, const PanelPoint& p) {
  std::array<double, 4> d{};
  int ka = 0, kb = 0;
  double rest = 1.0;
  for (int i = 0; i < 4; ++i) {
    const double r = R.r[i];
    if (r == a) {
      d[i] = p.t;
      ++ka;
    } else if (r == b) {
      d[i] = p.s;
      ++kb;
    } else {
      d[i] = r < a ? (a - r) + p.t : (r - b) + p.s;
      rest *= d[i];
    }
  }
  Factors f{};
  f.u1mag = std::sqrt(d[0] * d[1]);
  f.u2 = std::sqrt(d[2] * d[3]);
  double wf = 1.0 / std::sqrt(rest);
  if (ka == 0) wf *= std::sqrt(p.t);
  if (ka == 2) wf /= std::sqrt(p.t);
  if (kb == 0) wf *= std::sqrt(p.s);
  if (kb == 2) wf /= std::sqrt(p.s);
  f.wfac = wf;
  const double w = R.w;
  if (p.t <= p.s)
    f.N = (a * a + w * a + 1.0) + (2.0 * a + w) * p.t + p.t * p.t;
  else
    f.N = (b * b + w * b + 1.0) - (2.0 * b + w) * p.s + p.s * p.s;
  return f;
}

struct PanelDef {
  double a, b;
  bool below;  // x < -1: u1 real and negative; otherwise |x| < 1, u1 imaginary
};

std::vector<PanelDef> finite_panels(double w) {
  if (w > 2.0) return {{1.0 - w, -1.0, true}, {-1.0, 1.0, false}};
  return {{1.0 - w, 1.0, false}};
}

void check(const QuadratureResultN<2>& r, const QuadratureSpec& spec, const char* what) {
  if (!r.converged)
    throw NumericError(what, std::max(r.error_estimate[0], r.error_estimate[1]), spec.rel_tol);
}

void check_w(double w) {
  if (!(w > 0.0) || !std::isfinite(w)) throw DomainError("hbar omega / Delta must be positive");
}

} // namespace

ComplexConductivity mb_clean_reduced(double w, const QuadratureSpec& spec) {
  check_w(w);
  const Roots R(w);
  QuadratureResultN<2> total;
  for (const auto& pd : finite_panels(w)) {
    auto h = [&](const PanelPoint& p) -> Arr2 {
      const Factors f = factors(R, pd.a, pd.b, p);
      // g sqrt(ts): real and -N wfac below -1, i N wfac inside the gap
      if (pd.below) return {-f.N * f.wfac, 0.0};
      return {0.0, f.N * f.wfac};
    };
    total += sqrt_panel(h, pd.a, pd.b, spec);
  }
  check(total, spec, "clean Mattis-Bardeen integral");
  ComplexConductivity c;
  c.sigma1_over_sigman = total.value[0] / w;
  c.sigma2_over_sigman = total.value[1] / w;
  if (w <= 2.0) c.sigma1_over_sigman = 0.0;
  return c;
}

ComplexConductivity mb_impure_reduced(double w, double b, const QuadratureSpec& spec) {
  check_w(w);
  if (!(b > 0.0) || !std::isfinite(b)) throw DomainError("hbar/(tau Delta) must be positive");
  const Roots R(w);
  const cplx ib(0.0, b);

  QuadratureResultN<2> finite;
  for (const auto& pd : finite_panels(w)) {
    auto h = [&](const PanelPoint& p) -> Arr2 {
      const Factors f = factors(R, pd.a, pd.b, p);
      const double rts = std::sqrt(p.t) * std::sqrt(p.s);
      cplx u1, G;
      if (pd.below) {
        u1 = cplx(-f.u1mag, 0.0);
        G = cplx(-f.N * f.wfac, 0.0);
      } else {
        u1 = cplx(0.0, -f.u1mag);
        G = cplx(0.0, f.N * f.wfac);
      }
      const cplx u2(f.u2, 0.0);
      const cplx v = (G + rts) / (u2 - u1 + ib) - (G - rts) / (u2 + u1 - ib);
      return {v.real(), v.imag()};
    };
    finite += sqrt_panel(h, pd.a, pd.b, spec);
  }

  // (g-1) 2(u1+u2)/((u1+u2)^2+b^2) on [1, inf); g - 1 = (2x+w)^2/((N+u1u2) u1u2)
  auto tail_term = [w, b](double x, double t, double jac_u1) {
    const double xp = x + 1.0;
    const double u2 = std::sqrt((t + w) * (x + w + 1.0));
    const double u1 = std::sqrt(t * xp);
    const double N = x * x + w * x + 1.0;
    const double y = u1 + u2;
    const double q = (2.0 * x + w);
    // jac_u1 replaces 1/u1 when the sqrt(t) is absorbed by the substitution
    return q * q / ((N + u1 * u2) * u2) * jac_u1 * 2.0 * y / (y * y + b * b);
  };
  QuadratureSpec near = spec;
  auto head = [&](double sg) -> std::array<double, 1> {
    const double t = sg * sg;
    // dx = 2 sg dsg, 1/u1 = 1/(sg sqrt(x+1))
    return {tail_term(1.0 + t, t, 2.0 / std::sqrt(2.0 + t))};
  };
  auto r_head = integrate_adaptive_n<1>(head, 0.0, 1.0, near);
  QuadratureSpec far = spec;
  far.tail_policy = TailPolicy::PowerBound;
  far.power_bound = 4.0 * std::min(1.0 / b, 2.0);
  far.decay_length = 1.0;
  auto body = [&](double x) -> std::array<double, 1> {
    const double t = x - 1.0;
    return {tail_term(x, t, 1.0 / std::sqrt(t * (x + 1.0)))};
  };
  auto r_body = integrate_adaptive_n<1>(body, 2.0, kInfinity, far);
  if (!r_head.converged || !r_body.converged)
    throw NumericError("impure Mattis-Bardeen tail integral",
                       r_head.error_estimate[0] + r_body.error_estimate[0], spec.rel_tol);
  check(finite, spec, "impure Mattis-Bardeen finite integral");

  const double pref = b / (2.0 * w);
  const cplx rhs = pref * (cplx(finite.value[0], finite.value[1]) - (r_head.value[0] + r_body.value[0]));
  ComplexConductivity c;
  c.sigma2_over_sigman = rhs.real();
  c.sigma1_over_sigman = -rhs.imag();
  if (w <= 2.0) c.sigma1_over_sigman = 0.0;
  return c;
}

ComplexConductivity sigma_mb_clean(double omega, double delta, const QuadratureSpec& spec) {
  if (!(omega > 0.0)) throw DomainError("omega must be positive");
  if (!(delta > 0.0)) throw DomainError("gap Delta must be positive");
  auto c = mb_clean_reduced(constants().hbar * omega / delta, spec);
  c.omega = omega;
  return c;
}

ComplexConductivity sigma_mb_impure(double omega, double delta, double tau,
                                    const QuadratureSpec& spec) {
  if (!(omega > 0.0)) throw DomainError("omega must be positive");
  if (!(delta > 0.0)) throw DomainError("gap Delta must be positive");
  if (!(tau > 0.0)) throw DomainError("relaxation time tau must be positive");
  const double hbar = constants().hbar;
  auto c = mb_impure_reduced(hbar * omega / delta, hbar / (tau * delta), spec);
  c.omega = omega;
  return c;
}

double f_impurity(double x) {
  if (!(x > 0.0)) throw DomainError("f(x) requires x > 0");
  const double y = 0.5 * x;
  const double e = y - 1.0;
  double r;
  if (std::abs(e) < 1e-4)
    r = 1.0 - e / 3.0 + 2.0 * e * e / 15.0;
  else if (y > 1.0)
    r = std::acosh(y) / std::sqrt((y - 1.0) * (y + 1.0));
  else
    r = std::acos(y) / std::sqrt((1.0 - y) * (1.0 + y));
  return 2.0 * r / std::numbers::pi;
}

} // namespace cpforce
