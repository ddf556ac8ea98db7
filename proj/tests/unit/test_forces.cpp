#include "cpforce/errors.hpp"
#include "cpforce/forces.hpp"
#include "cpforce/shifts.hpp"
#include "cpforce/units.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace cpforce;
using doctest::Approx;

namespace {

const double pi = std::numbers::pi;
const double wA = 1e6;
const Weights eq{0.25, 0.25, 0.25};

double fm_plasma(double x, double alpha, double hz = kInfinity) {
  return F_M(x, eq, Plasma{alpha * wA}, wA, hz);
}

TwoPlateau sapphire() {
  return {ev_to_angular(0.16), ev_to_angular(30.8), ev_to_angular(0.07), ev_to_angular(20.8)};
}

} // namespace

TEST_CASE("perfect conductor kernels") {
  // 3 i - x i' with a central difference of tilde_i
  QuadratureSpec tight;
  tight.rel_tol = 1e-12;
  for (double x : {1e-2, 0.5, 3.0, 20.0}) {
    const double h = 1e-4 * x;
    const auto p = tilde_i(x + h, tight), m = tilde_i(x - h, tight), c = tilde_i(x, tight);
    const auto k = force_kernels_pc(x);
    for (int r = 0; r < 2; ++r) {
      const double d = (p[r] - m[r]) / (2.0 * h);
      CHECK(k[r] == Approx(3.0 * c[r] - x * d).epsilon(1e-6));
    }
    const auto g = force_kernels(x, PerfectConductor{}, wA);
    CHECK(g[0] == Approx(k[0]).epsilon(1e-8));
    CHECK(g[1] == Approx(k[1]).epsilon(1e-8));
  }
  const auto n = force_kernels_pc(1e-4);
  CHECK(n[0] == Approx(1.5).epsilon(1e-3));
  CHECK(n[1] == Approx(3.0).epsilon(1e-3));
}

TEST_CASE("two plasma paths agree") {
  for (double alpha : {0.3, 1.0, 100.0})
    for (double x : {1e-3, 0.1, 5.0}) {
      const auto a = force_kernels(x, Plasma{alpha * wA}, wA);
      const auto b = force_kernels_plasma(x, alpha, 0.0);
      CHECK(a[0] == Approx(b[0]).epsilon(1e-7));
      CHECK(a[1] == Approx(b[1]).epsilon(1e-7));
    }
  for (double nu : {1.0, 100.0}) {
    const auto a = force_kernels(0.05, Drude{10.0 * wA, nu * wA}, wA);
    const auto b = force_kernels_plasma(0.05, 10.0, nu);
    CHECK(a[0] == Approx(b[0]).epsilon(1e-7));
    CHECK(a[1] == Approx(b[1]).epsilon(1e-7));
  }
  const auto pc = force_kernels_plasma(0.3, kInfinity, 0.0);
  CHECK(pc[0] == Approx(force_kernels_pc(0.3)[0]).epsilon(1e-12));
  CHECK(force_kernels_plasma(0.3, 0.0, 0.0)[0] == 0.0);
  CHECK_THROWS_AS(force_kernels_plasma(0.0, 1.0, 0.0), DomainError);
  CHECK_THROWS_AS(force_kernels_plasma(1.0, -1.0, 0.0), DomainError);
}

TEST_CASE("plateau, quadratic rise and far field") {
  CHECK(fm_plasma(0.01, 1e4) == Approx(1.5).epsilon(0.05));
  const double q = fm_plasma(0.01, 1.0);
  const double pq = (0.5 * (0.5 + 2.0 / (2.0 + std::sqrt(2.0))) + 0.25) * 1e-4 / 2.0;
  CHECK(q == Approx(pq).epsilon(0.05));
  CHECK(fm_plasma(20.0, 1e4) * pi * 20.0 / 8.0 == Approx(0.75).epsilon(0.05));
  // predictions from the classifier
  const auto p = regime_classify(0.01, 1.0, 0.0, eq);
  CHECK(p.regime == Regime::QuadraticRise);
  CHECK(*p.predicted_F_M == Approx(pq).epsilon(1e-14));
  CHECK(regime_classify(0.01, 1e4, 0.0, eq).regime == Regime::Plateau);
  CHECK(*regime_classify(0.01, 1e4, 0.0, eq).predicted_F_M == Approx(1.5));
  CHECK(regime_classify(20.0, 1e4, 0.0, eq).regime == Regime::FarField);
  CHECK(regime_classify(1.0, 1e4, 0.0, eq).regime == Regime::Unclassified);
  CHECK_FALSE(regime_classify(1.0, 1e4, 0.0, eq).predicted_F_M);
  CHECK(regime_classify(0.01, kInfinity, 0.0, eq).regime == Regime::Plateau);
  CHECK(regime_name(Regime::FarField) == "far-field");
  CHECK(regime_name(Regime::QuadraticRise) == "quadratic-rise");
}

TEST_CASE("perfect-conductor limit of the plasma force") {
  for (double x : {1e-2, 1.0, 30.0}) {
    const double pc = F_M(x, eq, PerfectConductor{}, wA);
    CHECK(fm_plasma(x, 1e6) == Approx(pc).epsilon(2e-3));
  }
}

TEST_CASE("gold is practically a perfect conductor") {
  const Drude gold{3.9e9 * wA, 1.5e7 * wA};
  for (double x : {1e-3, 1e-1, 1.0, 10.0}) {
    const double pc = F_M(x, eq, PerfectConductor{}, wA);
    CHECK(std::abs(F_M(x, eq, gold, wA) - pc) / pc < 0.01);
  }
}

TEST_CASE("electric force") {
  const double pred = electric_near_field_plasma(1.0, eq);
  CHECK(pred == Approx(-1.5 / (std::sqrt(2.0) + 1.0)));
  CHECK(F_E(1e-3, eq, Plasma{wA}, wA) == Approx(pred).epsilon(0.03));
  for (double x : {1e-2, 0.3, 4.0}) CHECK(F_E(x, eq, Plasma{wA}, wA) < 0.0);
  for (double x : {1e-2, 0.3, 4.0}) CHECK(F_M(x, eq, Plasma{wA}, wA) > 0.0);
}

TEST_CASE("perfect-conductor duality") {
  for (int i = 0; i < 10; ++i) {
    const double x = 1e-2 * std::pow(1e4, i / 9.0);
    const double m = F_M(x, eq, PerfectConductor{}, wA);
    CHECK(std::abs(std::abs(F_E(x, eq, PerfectConductor{}, wA)) - m) / m < 0.01);
  }
}

TEST_CASE("finite thickness") {
  const double inf = fm_plasma(0.1, 1e4);
  CHECK(std::abs(fm_plasma(0.1, 1e4, 1.0) - inf) / inf < 0.05);
  double prev = 0.0;
  for (double hz : {1e-6, 1e-4, 1e-2, 1.0}) {
    const double f = fm_plasma(0.1, 1e4, hz);
    CHECK(f > prev);
    prev = f;
  }
  CHECK(prev < inf * (1.0 + 1e-9));
}

TEST_CASE("sapphire near-field slope") {
  const double w = 2.0 * pi * 560e3;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const int n = 6;
  for (int i = 0; i < n; ++i) {
    const double x = 1e-3 * std::pow(10.0, i / double(n - 1));
    const double lx = std::log(x), ly = std::log(F_M(x, eq, sapphire(), w));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  CHECK(slope == Approx(1.0).epsilon(0.1));
}

TEST_CASE("force is minus the distance derivative of the shift") {
  QuadratureSpec tight;
  tight.rel_tol = 1e-12;
  tight.abs_tol = 1e-300;
  const double w = 2.0 * pi * 560e3;
  const TransitionSet ts{magnetic_transition(w, {0.2, 0.3, 0.5})};
  const auto& k = constants();
  auto check = [&](const MaterialModel& m, double X) {
    const double z = X * k.c / w;
    const double h = 1e-3 * z;
    auto S = [&](double zz) { return ground_shift(SlabGeometry{zz, kInfinity}, ts, m, tight).delta_omega; };
    const double d = (-S(z + 2 * h) + 8 * S(z + h) - 8 * S(z - h) + S(z - 2 * h)) / (12.0 * h);
    const double F = F_dimensional(SlabGeometry{z, kInfinity}, ts, m, tight);
    CHECK(F == Approx(-k.hbar * d).epsilon(1e-5));
  };
  check(PerfectConductor{}, 0.01);
  check(PerfectConductor{}, 2.0);
  check(Drude{1e3 * w, 10.0 * w}, 0.1);
  check(sapphire(), 0.005);
}

TEST_CASE("modular split invariance") {
  QuadratureSpec base;
  const Drude drude{1e3 * wA, 10.0 * wA};
  for (double x : {1e-3, 1e-2, 0.3, 3.0, 30.0}) {
    const auto ref_pc = force_kernels(x, PerfectConductor{}, wA, kInfinity, base);
    const auto ref_d = force_kernels(x, drude, wA, kInfinity, base);
    for (double e : {0.5, 2.0}) {
      QuadratureSpec s = base;
      s.epsilon_split = e;
      const auto pc = force_kernels(x, PerfectConductor{}, wA, kInfinity, s);
      const auto d = force_kernels(x, drude, wA, kInfinity, s);
      for (int r = 0; r < 2; ++r) {
        CHECK(std::abs(pc[r] - ref_pc[r]) <= 10.0 * base.rel_tol * std::abs(ref_pc[r]));
        CHECK(std::abs(d[r] - ref_d[r]) <= 10.0 * base.rel_tol * std::abs(ref_d[r]));
      }
    }
  }
}

TEST_CASE("dimensional prefactors") {
  const double w = 1e7;
  const double z = 1e-6;
  const auto& k = constants();
  const TransitionSet ts{magnetic_transition(w, {0.25, 0.25, 0.25})};
  const double x = w * z / k.c;
  CHECK(F_dimensional(SlabGeometry{z, kInfinity}, ts, PerfectConductor{}) ==
        Approx(force_prefactor_magnetic(z) * F_M(x, eq, PerfectConductor{}, w)).epsilon(1e-10));
  Transition e;
  e.omega_t = w;
  e.weights = {0.25, 0.25, 0.25};
  e.moment_scale = 1e-29;
  e.kind = Coupling::Electric;
  CHECK(F_dimensional(SlabGeometry{z, kInfinity}, {e}, Plasma{w}) ==
        Approx(force_prefactor_electric(z, 1e-29) * F_E(x, eq, Plasma{w}, w)).epsilon(1e-10));
  CHECK(F_M(x, eq, Vacuum{}, w) == 0.0);
  CHECK_THROWS_AS(F_M(-1.0, eq, PerfectConductor{}, w), DomainError);
  CHECK_THROWS_AS(F_M(1.0, Weights{-1.0, 0.0, 0.0}, PerfectConductor{}, w), DomainError);
}
