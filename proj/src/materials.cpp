#include "cpforce/materials.hpp"

#include "cpforce/errors.hpp"
#include "cpforce/units.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <cmath>
#include <numbers>
#include <sstream>

namespace cpforce {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) throw DomainError(std::string(name) + " must be positive");
}

void require_omega(double omega) {
  if (!(omega > 0.0) || !std::isfinite(omega))
    throw DomainError("frequency omega must be positive and finite");
}

} // namespace

// s1(y) sampled on a fixed rule in log(y - 2), y = hbar omega / Delta.
struct SuperconductorMB::Table {
  std::vector<double> y;
  std::vector<double> wdy;
  std::vector<double> s1;
  double y_max = 0.0;
  double s1_max = 0.0;
};

SuperconductorMB::SuperconductorMB(double delta_omega, double sigma_n, double b,
                                   const QuadratureSpec& spec)
    : delta_omega_(delta_omega), sigma_n_(sigma_n), b_(b), spec_(spec) {
  require_positive(delta_omega, "gap frequency Delta/hbar");
  if (!(sigma_n >= 0.0) || !std::isfinite(sigma_n))
    throw DomainError("normal-state conductivity must be non-negative");
  if (!(b >= 0.0) || !std::isfinite(b)) throw DomainError("hbar/(tau Delta) must be non-negative");
  auto table = std::make_shared<Table>();
  using GL = boost::math::quadrature::gauss<double, 16>;
  const auto& xs = GL::abscissa();
  const auto& ws = GL::weights();
  const double ln10 = std::log(10.0);
  for (int dec = -10; dec < 8; ++dec) {
    const double lo = dec * ln10;
    const double hh = 0.5 * ln10;
    const double c = lo + hh;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (int sgn : {-1, 1}) {
        if (xs[i] == 0.0 && sgn > 0) continue;
        const double v = c + sgn * hh * xs[i];
        const double ev = std::exp(v);
        const double y = 2.0 + ev;
        const auto cond = b_ == 0.0 ? mb_clean_reduced(y, spec_) : mb_impure_reduced(y, b_, spec_);
        table->y.push_back(y);
        table->wdy.push_back(hh * ws[i] * ev);
        table->s1.push_back(cond.sigma1_over_sigman);
      }
    }
  }
  table->y_max = 2.0 + 1e8;
  const auto last = b_ == 0.0 ? mb_clean_reduced(table->y_max, spec_)
                              : mb_impure_reduced(table->y_max, b_, spec_);
  table->s1_max = last.sigma1_over_sigman;
  table_ = std::move(table);
}

SuperconductorMB SuperconductorMB::clean(double delta_omega, double sigma_n,
                                         const QuadratureSpec& spec) {
  return SuperconductorMB(delta_omega, sigma_n, 0.0, spec);
}

SuperconductorMB SuperconductorMB::impure(double delta_omega, double sigma_n, double tau,
                                          const QuadratureSpec& spec) {
  require_positive(tau, "relaxation time tau");
  require_positive(delta_omega, "gap frequency Delta/hbar");
  return SuperconductorMB(delta_omega, sigma_n, 1.0 / (tau * delta_omega), spec);
}

double SuperconductorMB::sigma_n_from_omega_sp(double omega_sp, double delta_omega) {
  require_positive(omega_sp, "omega_sp");
  require_positive(delta_omega, "gap frequency Delta/hbar");
  return constants().eps0 * omega_sp * omega_sp / (std::numbers::pi * delta_omega);
}

double SuperconductorMB::tau() const {
  return b_ == 0.0 ? kInfinity : 1.0 / (b_ * delta_omega_);
}

double SuperconductorMB::omega_sp_squared() const {
  return std::numbers::pi * sigma_n_ * delta_omega_ / constants().eps0;
}

double SuperconductorMB::pole_weight() const {
  const double w = omega_sp_squared();
  return b_ == 0.0 ? w : w * (1.0 - f_impurity(b_));
}

double SuperconductorMB::continuum(double omega) const {
  require_omega(omega);
  if (sigma_n_ == 0.0) return 0.0;
  const double W = omega / delta_omega_;
  const double W2 = W * W;
  const auto& t = *table_;
  double sum = 0.0;
  for (std::size_t i = 0; i < t.y.size(); ++i) sum += t.wdy[i] * t.s1[i] / (t.y[i] * t.y[i] + W2);
  const double r = W / t.y_max;
  const double tail = r < 1e-8 ? 1.0 / t.y_max : std::atan(r) / W;
  sum += t.s1_max * tail;
  const double pi = std::numbers::pi;
  return 2.0 * omega_sp_squared() / (pi * pi * delta_omega_ * delta_omega_) * sum;
}

double SuperconductorMB::epsilon_imag(double omega) const {
  require_omega(omega);
  return 1.0 + pole_weight() / (omega * omega) + continuum(omega);
}

ComplexConductivity SuperconductorMB::conductivity(double omega) const {
  require_omega(omega);
  const double w = omega / delta_omega_;
  auto c = b_ == 0.0 ? mb_clean_reduced(w, spec_) : mb_impure_reduced(w, b_, spec_);
  c.omega = omega;
  return c;
}

double epsilon_superconductor(double omega, const SuperconductorMB& model) {
  return model.epsilon_imag(omega);
}

void validate(const MaterialModel& model) {
  std::visit(overloaded{
                 [](const Vacuum&) {},
                 [](const PerfectConductor&) {},
                 [](const Plasma& m) { require_positive(m.omega_p, "plasma frequency"); },
                 [](const Drude& m) {
                   require_positive(m.omega_p, "plasma frequency");
                   require_positive(m.nu, "relaxation frequency");
                 },
                 [](const SixOscillator& m) {
                   require_positive(m.omega_p, "plasma frequency");
                   if (m.terms.empty()) throw DomainError("oscillator model needs at least one term");
                   for (const auto& o : m.terms) {
                     require_positive(o.f, "oscillator strength f_j");
                     require_positive(o.omega, "oscillator frequency omega_j");
                     require_positive(o.g, "oscillator damping g_j");
                   }
                 },
                 [](const TwoPlateau& m) {
                   require_positive(m.omega_p1, "omega_p1");
                   require_positive(m.omega_p2, "omega_p2");
                   require_positive(m.omega_1, "omega_1");
                   require_positive(m.omega_2, "omega_2");
                 },
                 [](const SuperconductorMB&) {},
             },
             model);
}

bool is_perfect_conductor(const MaterialModel& model) {
  return std::holds_alternative<PerfectConductor>(model);
}

bool is_vacuum(const MaterialModel& model) { return std::holds_alternative<Vacuum>(model); }

std::string model_name(const MaterialModel& model) {
  return std::visit(overloaded{
                        [](const Vacuum&) { return std::string("vacuum"); },
                        [](const PerfectConductor&) { return std::string("perfect-conductor"); },
                        [](const Plasma&) { return std::string("plasma"); },
                        [](const Drude&) { return std::string("drude"); },
                        [](const SixOscillator&) { return std::string("six-oscillator"); },
                        [](const TwoPlateau&) { return std::string("two-plateau"); },
                        [](const SuperconductorMB&) { return std::string("superconductor"); },
                    },
                    model);
}

double characteristic_frequency(const MaterialModel& model) {
  return std::visit(overloaded{
                        [](const Vacuum&) { return 0.0; },
                        [](const PerfectConductor&) { return 0.0; },
                        [](const Plasma& m) { return m.omega_p; },
                        [](const Drude& m) { return std::max(m.omega_p, m.nu); },
                        [](const SixOscillator& m) {
                          double w = m.omega_p;
                          for (const auto& o : m.terms)
                            w = std::max({w, o.omega, o.g, std::sqrt(o.f)});
                          return w;
                        },
                        [](const TwoPlateau& m) {
                          return std::max({m.omega_p1, m.omega_p2, m.omega_1, m.omega_2});
                        },
                        [](const SuperconductorMB& m) {
                          return std::max(m.sigma_n() / constants().eps0, m.delta_omega());
                        },
                    },
                    model);
}

double susceptibility_imag_axis(const MaterialModel& model, double omega) {
  require_omega(omega);
  return std::visit(
      overloaded{
          [](const Vacuum&) { return 0.0; },
          [](const PerfectConductor&) -> double {
            throw UnsupportedModel("perfect conductor has no finite dielectric function");
          },
          [omega](const Plasma& m) {
            const double r = m.omega_p / omega;
            return r * r;
          },
          [omega](const Drude& m) { return m.omega_p * m.omega_p / (omega * (omega + m.nu)); },
          [omega](const SixOscillator& m) {
            const double r = m.omega_p / omega;
            double chi = r * r;
            for (const auto& o : m.terms) chi += o.f / (omega * omega + o.omega * o.omega + o.g * omega);
            return chi;
          },
          [omega](const TwoPlateau& m) {
            const double w2 = omega * omega;
            return m.omega_p1 * m.omega_p1 / (w2 + m.omega_1 * m.omega_1) +
                   m.omega_p2 * m.omega_p2 / (w2 + m.omega_2 * m.omega_2);
          },
          [omega](const SuperconductorMB& m) {
            return m.pole_weight() / (omega * omega) + m.continuum(omega);
          },
      },
      model);
}

double epsilon_imag_axis(const MaterialModel& model, double omega) {
  return 1.0 + susceptibility_imag_axis(model, omega);
}

std::complex<double> epsilon_real_axis(const MaterialModel& model, double omega) {
  require_omega(omega);
  using cplx = std::complex<double>;
  const cplx I(0.0, 1.0);
  return std::visit(
      overloaded{
          [](const Vacuum&) { return cplx(1.0, 0.0); },
          [](const PerfectConductor&) -> cplx {
            throw UnsupportedModel("perfect conductor has no finite dielectric function");
          },
          [omega](const Plasma& m) {
            const double r = m.omega_p / omega;
            return cplx(1.0 - r * r, 0.0);
          },
          [omega, I](const Drude& m) {
            return 1.0 - m.omega_p * m.omega_p / (omega * (omega + I * m.nu));
          },
          [omega, I](const SixOscillator& m) {
            const double r = m.omega_p / omega;
            cplx e = 1.0 - r * r;
            for (const auto& o : m.terms) e += o.f / (o.omega * o.omega - omega * omega - I * o.g * omega);
            return e;
          },
          [omega](const TwoPlateau& m) {
            const double w2 = omega * omega;
            return cplx(1.0 + m.omega_p1 * m.omega_p1 / (m.omega_1 * m.omega_1 - w2) +
                            m.omega_p2 * m.omega_p2 / (m.omega_2 * m.omega_2 - w2),
                        0.0);
          },
          [omega](const SuperconductorMB& m) {
            const auto c = m.conductivity(omega);
            const double s = m.sigma_n() / (constants().eps0 * omega);
            return cplx(1.0 - s * c.sigma2_over_sigman, s * c.sigma1_over_sigman);
          },
      },
      model);
}

} // namespace cpforce
