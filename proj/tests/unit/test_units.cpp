#include "cpforce/errors.hpp"
#include "cpforce/units.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace cpforce;
using doctest::Approx;

TEST_CASE("constants are positive and consistent") {
  const auto& k = constants();
  for (double v : {k.hbar, k.c, k.mu0, k.eps0, k.muB, k.g_S, k.kB, k.eV, k.m_e}) CHECK(v > 0.0);
  CHECK(std::abs(k.eps0 * k.mu0 * k.c * k.c - 1.0) < 1e-12);
  CHECK(k.g_S == 2.002319);
  CHECK(k.compton_wavelength() == Approx(3.8615926796e-13).epsilon(1e-9));
}

TEST_CASE("energy and frequency conversions") {
  // 9 eV * e / hbar, evaluated once from the constants
  CHECK(to_angular_frequency(9.0, FrequencyUnit::ElectronVolt) ==
        Approx(1.3673407039285594e16).epsilon(1e-14));
  CHECK(to_angular_frequency(560e3, FrequencyUnit::Hertz) ==
        Approx(2.0 * std::numbers::pi * 5.6e5).epsilon(1e-15));
  CHECK(to_angular_frequency(3.0, FrequencyUnit::RadPerSecond) == 3.0);
  CHECK_THROWS_AS(to_angular_frequency(0.0, FrequencyUnit::ElectronVolt), DomainError);
  CHECK_THROWS_AS(to_angular_frequency(-1.0, FrequencyUnit::Hertz), DomainError);
  CHECK(angular_to_ev(ev_to_angular(2.4)) == Approx(2.4).epsilon(1e-15));
}

TEST_CASE("conversions are linear and monotone") {
  for (auto u : {FrequencyUnit::ElectronVolt, FrequencyUnit::Hertz}) {
    double prev = 0.0;
    for (double v = 1e-3; v < 1e3; v *= 3.7) {
      const double w = to_angular_frequency(v, u);
      CHECK(w > prev);
      CHECK(w / v == Approx(to_angular_frequency(1.0, u)).epsilon(1e-14));
      prev = w;
    }
  }
}

TEST_CASE("magnetic force prefactor") {
  CHECK(force_prefactor_magnetic(1e-6) == Approx(4.310341472685261e-30).epsilon(1e-12));
  CHECK(force_prefactor_magnetic(2e-6) == Approx(force_prefactor_magnetic(1e-6) / 16.0).epsilon(1e-14));
  const double ref = force_prefactor_magnetic(1e-6) * 1e-24;
  for (double z : {1e-9, 3e-7, 1e-3, 0.2}) {
    const double z4 = z * z * z * z;
    CHECK(std::abs(force_prefactor_magnetic(z) * z4 / ref - 1.0) < 1e-12);
  }
  CHECK_THROWS_AS(force_prefactor_magnetic(0.0), DomainError);
  CHECK_THROWS_AS(force_prefactor_magnetic(-1e-6), DomainError);
  CHECK_THROWS_AS(force_prefactor_electric(0.0, 1e-29), DomainError);
}

TEST_CASE("electric prefactor uses 1/eps0") {
  const double d = 1e-29, z = 1e-7;
  const double expect = d * d / (32.0 * std::numbers::pi * constants().eps0 * std::pow(z, 4));
  CHECK(force_prefactor_electric(z, d) == Approx(expect).epsilon(1e-14));
}

TEST_CASE("reduced variables") {
  ReducedVariables r(0.5, 10.0, 1e-3);
  CHECK(r.x == 0.5);
  CHECK_THROWS_AS(ReducedVariables(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(ReducedVariables(1.0, -1.0), DomainError);
  CHECK_THROWS_AS(ReducedVariables(1.0, 1.0, -1.0), DomainError);
  CHECK_THROWS_AS(ReducedVariables(1.0, 1.0, 0.0, 0.0), DomainError);
  const double wA = ev_to_angular(1.0);
  const auto p = ReducedVariables::from_physical(1e-7, wA, 9.0 * wA, 0.01 * wA);
  CHECK(p.x == Approx(wA * 1e-7 / constants().c));
  CHECK(p.alpha == Approx(9.0));
  CHECK(p.nu_bar == Approx(0.01));
}
