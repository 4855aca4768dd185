#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "plasmitm/errors.hpp"
#include "plasmitm/physics.hpp"

using namespace plasmitm;

TEST_CASE("derived triple identities and idempotence") {
  const PhysicalParams p = unit_params();
  CHECK(p.sigma0 == p.raw.D0 * p.raw.tau);
  CHECK(p.eta == 0.5 * p.raw.mu0 * p.sigma0 * p.raw.c);
  CHECK(p.ell0 == p.eta * p.raw.c * p.raw.tau);
  CHECK(p.gamma == 1.0 - p.eta * p.eta);
  const PhysicalParams q = derive_params(p.raw);
  CHECK(q.sigma0 == p.sigma0);
  CHECK(q.eta == p.eta);
  CHECK(q.ell0 == p.ell0);
  CHECK(q.gamma == p.gamma);
}

TEST_CASE("experimental parameter set lands in the expected regime") {
  RawParams raw;
  raw.D0 = 6.0e9;  // sigma0 = 6e-4 S
  raw.tau = 1e-13;
  raw.c = 1.5e8;   // mu0 c = 60 pi Ohm
  raw.mu0 = 4e-7 * 3.141592653589793;
  const PhysicalParams p = derive_params(raw);
  CHECK(p.sigma0 == doctest::Approx(6e-4).epsilon(1e-12));
  CHECK(std::abs(p.eta - 0.1) < 0.05);        // eta ~ 0.1
  CHECK(std::abs(p.gamma - 0.99) < 0.01);     // gamma ~ 0.99
  CHECK(p.ell0 > 0.7e-6);                     // ell0 ~ 1e-6 m
  CHECK(p.ell0 < 1.3e-6);
}

TEST_CASE("parameter validation") {
  RawParams raw = unit_params().raw;
  raw.D0 = 0.0;
  CHECK_THROWS_AS((void)derive_params(raw), ConfigError);  // degenerate sheet
  raw.D0 = -1.0;
  CHECK_THROWS_AS((void)derive_params(raw), ConfigError);
  // eta >= 1 rejected unless explicitly allowed
  raw = unit_params().raw;
  raw.D0 *= 12.0;  // eta = 1.2
  CHECK_THROWS_AS((void)derive_params(raw), RegimeError);
  const PhysicalParams p = derive_params(raw, /*allow_gamma_nonpositive=*/true);
  CHECK(p.gamma < 0.0);
}

TEST_CASE("conductivity limits and symmetries") {
  const PhysicalParams p = unit_params();
  CHECK(conductivity(p, 0.0) == Complex(p.sigma0, 0.0));
  const Complex at_inv_tau = conductivity(p, 1.0 / p.tau());
  CHECK(rel_err(at_inv_tau, p.sigma0 * Complex(0.5, -0.5)) < 1e-15);

  std::mt19937 rng(7);
  std::uniform_real_distribution<double> w(-50.0, 50.0);
  for (int i = 0; i < 200; ++i) {
    const double omega = w(rng);
    const Complex s = conductivity(p, omega);
    CHECK(rel_err(conductivity(p, -omega), std::conj(s)) < 1e-15);
    CHECK(std::abs(s) <= p.sigma0 * (1.0 + 1e-14));
    CHECK(s.real() > 0.0);
  }
  // pole
  CHECK_THROWS_AS((void)conductivity(p, Complex(0.0, 1.0 / p.tau())), RegimeError);
  // pinned: sigma(0.3/tau)/sigma0
  CHECK(rel_err(conductivity(p, 0.3 / p.tau()) / p.sigma0,
                Complex(0.91743119266055046, -0.27522935779816514)) < 1e-14);
  // pinned: sigma(i s+/tau)/sigma0 = 1/(1-s+) at gamma=0.99, u=1
  const Complex splus(0.49750624980682229, 0.86458799829473722);
  CHECK(rel_err(conductivity(p, Complex(0.0, 1.0) * splus / p.tau()) / p.sigma0,
                Complex(0.50248753151878650, 0.86457729847759149)) < 1e-13);
}

TEST_CASE("transmission limits, pins and conjugation") {
  const PhysicalParams p = unit_params();
  CHECK(transmission(p, 1.3, 0.0) == Complex(1.0, 0.0));  // no sheet interaction

  // transparent sheet: sigma0 -> 0
  const PhysicalParams p0 = unit_params(1e-14);
  for (double kz : {-2.0, 0.3, 5.0})
    CHECK(rel_err(transmission(p0, 0.7, kz), Complex(1.0, 0.0)) < 1e-12);

  // pinned values at omega = c|K| on the working parameter set
  {
    const double k = 2.0 * kUc099, kz = 1.0;
    const Complex t = transmission(p, p.c() * std::sqrt(k * k + kz * kz), kz);
    CHECK(rel_err(t, Complex(1.000654654097154, -0.0080097344749930659)) < 1e-12);
  }
  {
    const double k = 1.0, kz = -0.7;
    const Complex t = transmission(p, p.c() * std::sqrt(k * k + kz * kz), kz);
    CHECK(rel_err(t, Complex(0.99959608552811314, 0.004662999029561024)) < 1e-12);
  }

  std::mt19937 rng(11);
  std::uniform_real_distribution<double> w(-5.0, 5.0);
  for (int i = 0; i < 200; ++i) {
    const double omega = w(rng), kz = w(rng);
    if (std::abs(omega) < 1e-3) continue;
    CHECK(rel_err(transmission(p, -omega, -kz),
                  std::conj(transmission(p, omega, kz))) < 1e-13);
  }
  CHECK_THROWS_AS((void)transmission(p, 0.0, 1.0), RegimeError);
}

TEST_CASE("vertical wavenumber branch") {
  const PhysicalParams p = unit_params();
  const double k = 0.8;
  // pure evanescence
  CHECK(rel_err(beta(p, 0.0, k), Complex(0.0, k)) < 1e-15);
  // branch point
  CHECK(std::abs(beta(p, p.c() * k, k)) == 0.0);
  // sign lock on both half-lines (limit from below the real axis)
  CHECK(rel_err(beta(p, 2.0 * p.c() * k, k), Complex(-std::sqrt(3.0) * k, 0.0)) < 1e-15);
  CHECK(rel_err(beta(p, -2.0 * p.c() * k, k), Complex(std::sqrt(3.0) * k, 0.0)) < 1e-15);

  // Im beta >= 0 everywhere; the cut value is approached from below
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> w(-4.0, 4.0);
  for (int i = 0; i < 300; ++i) {
    const Complex omega(w(rng), w(rng));
    CHECK(beta(p, omega, k).imag() >= -1e-15);
  }
  for (double wr : {1.7, 3.0, -2.2, -0.9}) {
    const Complex lim = beta(p, Complex(wr, -1e-9), k);
    CHECK(std::abs(lim - beta(p, wr, k)) < 1e-5);
  }
}
