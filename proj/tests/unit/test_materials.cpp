#include "cpforce/errors.hpp"
#include "cpforce/materials.hpp"
#include "cpforce/run_config.hpp"
#include "cpforce/units.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace cpforce;
using doctest::Approx;

namespace {

const double pi = std::numbers::pi;

SuperconductorMB niobium(double b) {
  const double d = 3.53 * constants().kB * 9.25 / 2.0 / constants().hbar;
  const double sn = SuperconductorMB::sigma_n_from_omega_sp(ev_to_angular(2.4), d);
  return b > 0.0 ? SuperconductorMB::impure(d, sn, 1.0 / (b * d)) : SuperconductorMB::clean(d, sn);
}

TwoPlateau sapphire() {
  return {ev_to_angular(0.16), ev_to_angular(30.8), ev_to_angular(0.07), ev_to_angular(20.8)};
}

std::vector<MaterialModel> all_models() {
  const double wp = ev_to_angular(9.0);
  return {Plasma{wp},
          Drude{wp, ev_to_angular(0.035)},
          read_six_oscillator(std::string(CPFORCE_DATA_DIR) + "/six_oscillator_gold_sample.ini"),
          sapphire(),
          niobium(0.0),
          niobium(13.61)};
}

} // namespace

TEST_CASE("plasma and drude on the imaginary axis") {
  const double wp = ev_to_angular(9.0);
  CHECK(epsilon_imag_axis(Plasma{wp}, wp) == Approx(2.0).epsilon(1e-15));
  const double nu = ev_to_angular(0.035);
  const double w = 0.3 * wp;
  CHECK(epsilon_imag_axis(Drude{wp, nu}, w) == Approx(1.0 + wp * wp / (w * (w + nu))).epsilon(1e-14));
  CHECK(epsilon_imag_axis(Drude{wp, nu}, 1e8 * wp) == Approx(1.0).epsilon(1e-12));
  CHECK(epsilon_imag_axis(Vacuum{}, 1.0) == 1.0);
}

TEST_CASE("sapphire static limit") {
  const double e0 = 1.0 + std::pow(0.16 / 0.07, 2) + std::pow(30.8 / 20.8, 2);
  CHECK(e0 == Approx(8.418).epsilon(1e-4));
  CHECK(epsilon_imag_axis(sapphire(), 1e-6) == Approx(e0).epsilon(1e-12));
}

TEST_CASE("invalid inputs") {
  CHECK_THROWS_AS(epsilon_imag_axis(PerfectConductor{}, 1.0), UnsupportedModel);
  CHECK_THROWS_AS(epsilon_imag_axis(Plasma{1.0}, 0.0), DomainError);
  CHECK_THROWS_AS(epsilon_imag_axis(Plasma{1.0}, -2.0), DomainError);
  CHECK_THROWS_AS(validate(Plasma{-1.0}), DomainError);
  CHECK_THROWS_AS(validate(Drude{1.0, 0.0}), DomainError);
  CHECK_THROWS_AS(validate(TwoPlateau{1.0, 1.0, 0.0, 1.0}), DomainError);
  CHECK_THROWS_AS(sigma_mb_clean(0.0, 1e-22), DomainError);
  CHECK_THROWS_AS(f_impurity(0.0), DomainError);
}

TEST_CASE("eps(i w) is >= 1 and decreasing for every model") {
  for (const auto& m : all_models()) {
    CAPTURE(model_name(m));
    const double wc = characteristic_frequency(m);
    double prev = kInfinity;
    for (double r = 1e-6; r < 1e6; r *= 1.9) {
      const double e = epsilon_imag_axis(m, r * wc);
      CHECK(e >= 1.0);
      CHECK(e <= prev);
      if (prev > 1.0 + 1e-12) CHECK(e < prev);
      prev = e;
    }
    CHECK(std::abs(epsilon_imag_axis(m, 1e6 * wc) - 1.0) < 1e-4);
  }
}

TEST_CASE("real-axis drude is lossy") {
  const double wp = ev_to_angular(9.0);
  const auto e = epsilon_real_axis(Drude{wp, ev_to_angular(0.035)}, 0.5 * wp);
  CHECK(e.imag() > 0.0);
  CHECK(e.real() < 0.0);
}

TEST_CASE("f function") {
  CHECK(std::abs(f_impurity(2.0) - 2.0 / pi) < 1e-9);
  CHECK(f_impurity(2.0 - 1e-9) == Approx(2.0 / pi).epsilon(1e-8));
  CHECK(f_impurity(2.0 + 1e-9) == Approx(2.0 / pi).epsilon(1e-8));
  // direct complex evaluation of the log/sqrt form
  CHECK(f_impurity(13.61) == Approx(0.24641130050985705).epsilon(1e-12));
  CHECK(std::abs(f_impurity(13.61) - 0.2464) < 1e-3);
  CHECK(f_impurity(1e12) < 1e-10);
  for (double x = 0.05; x < 100.0; x *= 1.3) {
    CHECK(f_impurity(x) > 0.0);
    CHECK(f_impurity(x) < 1.0);
  }
}

TEST_CASE("clean Mattis-Bardeen") {
  // q = 1
  CHECK(mb_clean_reduced(1.0).sigma1_over_sigman == 0.0);
  // q = 100
  CHECK(mb_clean_reduced(0.01).sigma2_over_sigman == Approx(100.0 * pi).epsilon(0.01));
  for (double q = 0.5; q < 100.0; q *= 1.7) CHECK(mb_clean_reduced(1.0 / q).sigma1_over_sigman == 0.0);
  for (double w = 0.1; w < 100.0; w *= 1.3) CHECK(mb_clean_reduced(w).sigma1_over_sigman >= 0.0);
  // gap edge
  const auto at = mb_clean_reduced(2.0);
  CHECK(at.sigma1_over_sigman == 0.0);
  const auto lo = mb_clean_reduced(2.0 - 1e-9), hi = mb_clean_reduced(2.0 + 1e-9);
  CHECK(std::abs(lo.sigma2_over_sigman - hi.sigma2_over_sigman) < 1e-6);
  CHECK(std::abs(hi.sigma1_over_sigman) < 1e-6);
  // independent adaptive evaluation of the same integrals
  CHECK(mb_clean_reduced(2.5).sigma1_over_sigman == Approx(0.29760).epsilon(1e-4));
  CHECK(mb_clean_reduced(2.5).sigma2_over_sigman == Approx(0.55804).epsilon(1e-4));
  CHECK(mb_clean_reduced(4.0).sigma1_over_sigman == Approx(0.67193).epsilon(1e-4));
  CHECK(mb_clean_reduced(10.0).sigma1_over_sigman == Approx(0.92986).epsilon(1e-4));
}

TEST_CASE("impure Mattis-Bardeen") {
  const double b = 13.61;
  const auto s = mb_impure_reduced(0.01, b);
  CHECK(s.sigma2_over_sigman == Approx(100.0 * pi * (1.0 - f_impurity(b))).epsilon(0.01));
  CHECK(s.sigma1_over_sigman == 0.0);
  for (double w = 0.1; w < 1e3; w *= 2.1) CHECK(mb_impure_reduced(w, b).sigma1_over_sigman >= 0.0);
  // strong broadening reproduces the clean result
  const auto c = mb_clean_reduced(5.0);
  const auto i = mb_impure_reduced(5.0, 1e6);
  CHECK(i.sigma1_over_sigman == Approx(c.sigma1_over_sigman).epsilon(1e-4));
  CHECK(i.sigma2_over_sigman == Approx(c.sigma2_over_sigman).epsilon(1e-4));
  // weak broadening suppresses the conductivity
  CHECK(std::abs(mb_impure_reduced(5.0, 1e-5).sigma2_over_sigman) < 1e-4);
  // high frequency
  auto mag = [&](double w) {
    const auto r = mb_impure_reduced(w, b);
    return std::hypot(r.sigma1_over_sigman, r.sigma2_over_sigman);
  };
  CHECK(mag(1e3) < 0.1);
  CHECK(mag(2e3) < mag(1e3));
  for (double q : {50.0, 80.0, 200.0})
    CHECK(std::abs(mb_impure_reduced(1.0 / q, b).sigma2_over_sigman - pi * q * (1.0 - f_impurity(b))) <
          0.01 * pi * q);
}

TEST_CASE("dimensional conductivity wrappers") {
  const double delta = 1.5e-3 * constants().eV;
  const double w = 0.2 * delta / constants().hbar;
  const auto d = sigma_mb_clean(w, delta);
  const auto r = mb_clean_reduced(0.2);
  CHECK(d.sigma2_over_sigman == Approx(r.sigma2_over_sigman).epsilon(1e-12));
  CHECK(d.omega == w);
  const double tau = constants().hbar / (13.61 * delta);
  CHECK(sigma_mb_impure(w, delta, tau).sigma2_over_sigman ==
        Approx(mb_impure_reduced(0.2, 13.61).sigma2_over_sigman).epsilon(1e-9));
}

TEST_CASE("superconductor eps(i w)") {
  const auto nb = niobium(13.61);
  CHECK(nb.omega_sp_squared() == Approx(std::pow(ev_to_angular(2.4), 2)).epsilon(1e-12));
  CHECK(nb.pole_weight() == Approx(nb.omega_sp_squared() * (1.0 - f_impurity(13.61))).epsilon(1e-12));
  CHECK(niobium(0.0).pole_weight() == niobium(0.0).omega_sp_squared());
  // pole / continuum at hbar w = Delta/100; brute-force reference 168239.6242
  const double w = nb.delta_omega() / 100.0;
  const double ratio = nb.pole_weight() / (w * w) / nb.continuum(w);
  CHECK(ratio == Approx(168239.6242).epsilon(1e-6));
  CHECK(epsilon_superconductor(w, nb) == Approx(1.0 + nb.pole_weight() / (w * w) + nb.continuum(w)));
  const auto empty = SuperconductorMB::clean(nb.delta_omega(), 0.0);
  for (double r : {1e-3, 1.0, 1e3}) CHECK(epsilon_superconductor(r * nb.delta_omega(), empty) == 1.0);
}
