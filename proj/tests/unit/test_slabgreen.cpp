#include "cpforce/errors.hpp"
#include "cpforce/materials.hpp"
#include "cpforce/slab_green.hpp"
#include "cpforce/units.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace cpforce;
using doctest::Approx;

namespace {
const double pi = std::numbers::pi;
const double c0 = constants().c;
} // namespace

TEST_CASE("fresnel limits") {
  const double k = 1e6;
  const double w = k * c0;
  auto r = fresnel_imag(2e6, w, 1.0);
  CHECK(r.r_s == 0.0);
  CHECK(r.r_p == 0.0);
  for (double eps : {1.5, 10.0, 1e4}) {
    for (double lam : {0.0, 1e5, 1e6, 1e8}) {
      const auto f = fresnel_imag(lam, w, eps);
      CHECK(f.r_s <= 0.0);
      CHECK(f.r_s >= -1.0);
      CHECK(f.r_p >= 0.0);
      CHECK(f.r_p <= 1.0);
      // textbook forms
      const double e0 = std::sqrt(k * k + lam * lam);
      const double e1 = std::sqrt(eps * k * k + lam * lam);
      CHECK(f.r_s == Approx((e0 - e1) / (e0 + e1)).epsilon(1e-12));
      CHECK(f.r_p == Approx((eps * e0 - e1) / (eps * e0 + e1)).epsilon(1e-12));
    }
    // normal incidence
    const auto n = fresnel_imag(0.0, w, eps);
    CHECK(n.r_p == Approx(-n.r_s).epsilon(1e-13));
  }
  const auto big = fresnel_imag(1e6, w, 1e30);
  CHECK(big.r_s == Approx(-1.0).epsilon(1e-10));
  CHECK(big.r_p == Approx(1.0).epsilon(1e-10));
  // eps - 1 tiny: no cancellation
  const auto tiny = fresnel_imag(1e6, w, 1.0 + 1e-12);
  CHECK(tiny.r_s < 0.0);
  CHECK(tiny.r_s == Approx(-1e-12 / (4.0 * 2.0)).epsilon(1e-6));
}

TEST_CASE("fresnel domain") {
  CHECK_THROWS_AS(fresnel_imag(-1.0, 1.0, 2.0), DomainError);
  CHECK_THROWS_AS(fresnel_imag(1.0, 0.0, 2.0), DomainError);
  CHECK_THROWS_AS(fresnel_imag(1.0, 1.0, 0.5), DomainError);
  CHECK_THROWS_AS(scatter_coeffs(1.0, 1.0, 2.0, 0.0), DomainError);
  SlabGeometry g{0.0, kInfinity};
  CHECK_THROWS_AS(g.validate(), DomainError);
}

TEST_CASE("slab scattering coefficients") {
  const double w = 1e6 * c0;
  const double lam = 3e5;
  const double eps = 20.0;
  const auto half = fresnel_imag(lam, w, eps);
  const auto thick = scatter_coeffs(lam, w, eps, 1.0);
  CHECK(thick.C_N == Approx(half.r_p).epsilon(1e-12));
  CHECK(thick.C_M == Approx(half.r_s).epsilon(1e-12));
  const auto inf = scatter_coeffs(lam, w, eps, kInfinity);
  CHECK(inf.C_N == half.r_p);
  const auto thin = scatter_coeffs(lam, w, eps, 1e-15);
  CHECK(std::abs(thin.C_N) < 1e-6);
  CHECK(std::abs(thin.C_M) < 1e-6);
  // Airy sum with explicit round trip
  const double h = 2e-7;
  const double eta = std::sqrt(eps * 1e12 + lam * lam);
  const double E = std::exp(-2.0 * eta * h);
  const auto s = scatter_coeffs(lam, w, eps, h);
  CHECK(s.C_N == Approx(half.r_p * (1.0 - E) / (1.0 - half.r_p * half.r_p * E)).epsilon(1e-12));
  CHECK(s.C_M == Approx(half.r_s * (1.0 - E) / (1.0 - half.r_s * half.r_s * E)).epsilon(1e-12));
  const auto pc = scatter_coeffs(lam, w, PerfectConductor{}, kInfinity);
  CHECK(pc.C_N == 1.0);
  CHECK(pc.C_M == -1.0);
}

TEST_CASE("perfect conductor kernel identity") {
  // I_par - I_perp/2 + (k^2/2z) exp(-2kz) = 0
  double worst = 0.0;
  for (double k : {1e4, 1e5, 1e6, 1e7, 1e8})
    for (double z : {1e-8, 1e-7, 1e-6, 1e-5}) {
      const auto K = kernels_imag_axis(k * c0, SlabGeometry{z, kInfinity}, PerfectConductor{});
      const double res = K.parallel - 0.5 * K.perp + k * k / (2.0 * z) * std::exp(-2.0 * k * z);
      worst = std::max(worst, std::abs(res) / std::abs(K.perp));
    }
  CHECK(worst < 1e-8);
}

TEST_CASE("reduced kernels against closed forms") {
  const ReducedMedium pc{true, 0.0};
  for (double zeta : {1e-3, 0.1, 1.0, 4.0}) {
    for (auto order : {KernelOrder::Shift, KernelOrder::Force})
      for (auto cp : {Coupling::Magnetic, Coupling::Electric}) {
        const auto n = reduced_kernels(zeta, pc, kInfinity, order, cp, QuadratureSpec{});
        const auto c = pc_reduced_kernels(zeta, order, cp);
        CHECK(n[0] == Approx(c[0]).epsilon(1e-10));
        CHECK(n[1] == Approx(c[1]).epsilon(1e-10));
      }
    // huge susceptibility approaches the conductor
    const auto m = reduced_kernels(zeta, ReducedMedium{false, 1e20}, kInfinity, KernelOrder::Shift,
                                   Coupling::Magnetic, QuadratureSpec{});
    const auto c = pc_reduced_kernels(zeta, KernelOrder::Shift, Coupling::Magnetic);
    CHECK(m[0] == Approx(c[0]).epsilon(1e-4));
    CHECK(m[1] == Approx(c[1]).epsilon(1e-4));
  }
  const auto z = reduced_kernels(1.0, ReducedMedium{false, 0.0}, kInfinity, KernelOrder::Shift,
                                 Coupling::Magnetic, QuadratureSpec{});
  CHECK(z[0] == 0.0);
  CHECK(z[1] == 0.0);
}

TEST_CASE("dielectric kernels have definite sign") {
  for (double chi : {0.1, 5.0, 1e3})
    for (double zeta : {0.01, 0.5, 3.0}) {
      const ReducedMedium m{false, chi};
      const auto mag = reduced_kernels(zeta, m, kInfinity, KernelOrder::Shift, Coupling::Magnetic, {});
      const auto el = reduced_kernels(zeta, m, kInfinity, KernelOrder::Shift, Coupling::Electric, {});
      CHECK(mag[1] > 0.0);
      CHECK(el[1] < 0.0);
      CHECK(el[0] < 0.0);
    }
}

TEST_CASE("finite thickness interpolates") {
  const ReducedMedium m{false, 50.0};
  const double zeta = 0.3;
  const auto inf = reduced_kernels(zeta, m, kInfinity, KernelOrder::Force, Coupling::Magnetic, {});
  double prev = 0.0;
  for (double hz : {1e-4, 1e-2, 1.0, 1e2}) {
    const auto k = reduced_kernels(zeta, m, hz, KernelOrder::Force, Coupling::Magnetic, {});
    CHECK(k[1] > prev);
    CHECK(k[1] <= inf[1] * (1.0 + 1e-12));
    prev = k[1];
  }
  CHECK(prev == Approx(inf[1]).epsilon(1e-8));
}

TEST_CASE("real-axis tensor for a perfect conductor") {
  // dense trapezoid reference at kz = 1
  const auto T = reduced_tensor_real(1.0, {1.0, 0.0}, true, kInfinity, Coupling::Magnetic, {});
  CHECK(T.xx.imag() == Approx(1.8955986073823896).epsilon(1e-9));
  CHECK(T.zz.imag() == Approx(-3.4831821998400714).epsilon(1e-9));
  // closed forms with s = 2kz
  for (double kz : {0.05, 0.7, 3.0, 25.0}) {
    const double s = 2.0 * kz;
    const double sn = std::sin(s), cs = std::cos(s);
    const double zz = -2.0 * (sn - s * cs);
    const double xx = (s * s - 1.0) * sn + s * cs;
    const auto t = reduced_tensor_real(kz, {1.0, 0.0}, true, kInfinity, Coupling::Magnetic, {});
    CHECK(t.xx.imag() == Approx(xx).epsilon(1e-7));
    CHECK(t.zz.imag() == Approx(zz).epsilon(1e-7));
    const auto e = reduced_tensor_real(kz, {1.0, 0.0}, true, kInfinity, Coupling::Electric, {});
    CHECK(e.xx.imag() == Approx(-xx).epsilon(1e-7));
    CHECK(e.zz.imag() == Approx(-zz).epsilon(1e-7));
  }
  // small kz: parallel magnetic term doubles the vacuum rate, perpendicular cancels it
  const double kz = 1e-3;
  const auto t = reduced_tensor_real(kz, {1.0, 0.0}, true, kInfinity, Coupling::Magnetic, {});
  const double vac = 16.0 / 3.0 * kz * kz * kz;
  CHECK(t.xx.imag() == Approx(vac).epsilon(1e-4));
  CHECK(t.zz.imag() == Approx(-vac).epsilon(1e-4));
}

TEST_CASE("dimensional curl tensor") {
  const double z = 1e-6, w = 2.0 * c0 / z;
  const auto g = curl_green_real_pc(w, SlabGeometry{z, kInfinity});
  const auto T = reduced_tensor_real(2.0, {1.0, 0.0}, true, kInfinity, Coupling::Magnetic, {});
  CHECK(g[0].imag() == Approx(T.xx.imag() / (32.0 * pi * z * z * z)).epsilon(1e-12));
  // a good conductor approaches the perfect one
  const auto d = curl_green_real(w, SlabGeometry{z, kInfinity}, {1.0, 1e12});
  CHECK(d[0].imag() == Approx(g[0].imag()).epsilon(1e-3));
  CHECK(d[1].imag() == Approx(g[1].imag()).epsilon(1e-3));
}
