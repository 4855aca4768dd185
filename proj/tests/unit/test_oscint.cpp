#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "plasmitm/dispersion.hpp"
#include "plasmitm/errors.hpp"
#include "plasmitm/oscint.hpp"

using namespace plasmitm;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

TEST_CASE("geometry factors") {
  const PhysicalParams p = unit_params();
  // z = z0 -> delta_phi = 0
  const Geometry g0 = geometry(p, {50.0, 10.0, 10.0, 0.0});
  CHECK(g0.delta_phi == 0.0);
  // z -> 0+: C -> 0 (z^2 prefactor)
  const Geometry gz = geometry(p, {50.0, 1e-8, 10.0, 0.0});
  CHECK(std::abs(gz.C) < 1e-8);
  // pinned at z0 = 10 l0, cT = 5 z0, z = 12 l0
  const Geometry g = geometry(p, {50.0, 12.0, 10.0, 0.0});
  CHECK(g.phi_z == doctest::Approx(0.970772887961).epsilon(1e-11));
  CHECK(g.phi_z0 == doctest::Approx(0.979795897113).epsilon(1e-11));
  CHECK(g.delta_phi == doctest::Approx(-0.00902300915234).epsilon(1e-9));
  CHECK(g.C == doctest::Approx(0.00618478310325).epsilon(1e-10));
  CHECK_THROWS_AS((void)geometry(p, {50.0, 51.0, 10.0, 0.0}), RegimeError);
  CHECK_THROWS_AS((void)geometry(p, {0.5, 0.1, 10.0, 0.0}), RegimeError);
}

TEST_CASE("plasmon propagator") {
  const PhysicalParams p = unit_params();
  const Complex sp(0.49750624980682229, 0.86458799829473722);
  // t = 0, z = 0: exponentials are one
  const Complex g00 = plasmon_propagator(p, 0.0, 0.0, sp);
  CHECK(rel_err(g00, 4.0 * Complex(0.0, 1.0) * kPi * (1.0 - sp) / pprime(p, sp)) <
        1e-14);
  // conjugation: G(t,z,s*) = -G(t,z,s)*
  std::mt19937 rng(2);
  std::uniform_real_distribution<double> w(0.05, 1.5);
  for (int i = 0; i < 50; ++i) {
    const Complex s(w(rng), w(rng));
    const Complex a = plasmon_propagator(p, 3.0, 2.0, s);
    const Complex b = plasmon_propagator(p, 3.0, 2.0, std::conj(s));
    CHECK(rel_err(b, -std::conj(a)) < 1e-13);
  }
  // pinned value at s+(0.99, 1), t = tau, z = ell0
  CHECK(rel_err(plasmon_propagator(p, p.tau(), p.ell0, sp),
                Complex(0.27221866588163555, 0.76371270676471136)) < 1e-12);
  // decay in t for Re s > 0, and in z when Re(s(1-s)) > 0
  CHECK(std::abs(plasmon_propagator(p, 20.0, 1.0, sp)) <
        std::abs(plasmon_propagator(p, 10.0, 1.0, sp)));
  CHECK(std::abs(plasmon_propagator(p, 10.0, 2.0, sp)) <
        std::abs(plasmon_propagator(p, 10.0, 1.0, sp)));
}

TEST_CASE("h_exact pinned values") {
  const PhysicalParams p = unit_params();
  const double k2uc = 2.0 * kUc099;
  struct Pin {
    double T, k, z;
    Weight w;
    Complex v;
  };
  const Pin pins[] = {
      {50.0, k2uc, 10.0, Weight::Unity, {-0.09437712333489, 0.0375617607521089}},
      {50.0, k2uc, 10.0, Weight::SigmaOverSigma0,
       {0.00474792129154811, 0.0194585724702435}},
      {50.0, 2.0, 12.0, Weight::SigmaOverSigma0,
       {0.00141324004599207, -0.00260088564796473}},
      {20.0, 1.0, 0.0, Weight::SigmaOverSigma0,
       {2.58724234385267e-5, 7.75298228662075e-6}},
  };
  for (const Pin& pin : pins) {
    const HResult h = h_exact(p, pin.T, pin.k, pin.z, pin.w);
    CHECK(rel_err(h.value, pin.v) < 1e-7);
  }
  // transparent sheet reference (T == 1 inside the integral)
  const PhysicalParams p0 = unit_params(1e-14);
  const HResult hf = h_exact(p0, 30.0, 1.0, 5.0, Weight::Unity);
  CHECK(rel_err(hf.value, Complex(-0.0356517208991218, 0.067849335519765)) < 1e-7);
}

TEST_CASE("h_exact domain and diagnostics") {
  const PhysicalParams p = unit_params();
  CHECK_THROWS_AS((void)h_exact(p, 50.0, -1.0, 1.0, Weight::Unity), RegimeError);
  CHECK_THROWS_AS((void)h_exact(p, 50.0, 1.0, 50.0, Weight::Unity), RegimeError);
  CHECK_THROWS_AS((void)h_exact(p, 0.0, 1.0, 1.0, Weight::Unity), RegimeError);
  // budget exhaustion carries the partial value
  QuadratureSpec tight;
  tight.rel_tol = 1e-15;
  tight.max_subdivisions = 2;
  CHECK_THROWS_AS((void)h_exact(p, 50.0, 2.0, 10.0, Weight::Unity, tight),
                  QuadratureError);
  try {
    (void)h_exact(p, 50.0, 2.0, 10.0, Weight::Unity, tight);
  } catch (const QuadratureError& e) {
    CHECK(std::isfinite(e.partial().real()));
    CHECK(e.estimate() > 0.0);
  }
}

TEST_CASE("h_exact parity structure at z = 0") {
  // transparent sheet: the integrand is odd in kz, so H vanishes
  const PhysicalParams p0 = unit_params(1e-14);
  const HResult h0 = h_exact(p0, 20.0, 1.0, 0.0, Weight::Unity);
  CHECK(std::abs(h0.value) < 1e-10);

  // with a sheet: H(T,k,0,g) equals twice the half-line integral of the
  // kz-odd part of T (cosine weight at z = 0)
  const PhysicalParams p = unit_params();
  const double T = 20.0, k = 1.0;
  const HResult h = h_exact(p, T, k, 0.0, Weight::SigmaOverSigma0);

  auto todd_int = [&](Complex x) -> Complex {
    const Complex root = std::sqrt(1.0 + x * x);
    const Complex omega = p.c() * k * root;
    const Complex g = 1.0 / (1.0 + Complex(0, 1) * omega * p.tau());
    const Complex tp = transmission(p, omega, k * x);
    const Complex tm = transmission(p, omega, -k * x);
    return std::exp(Complex(0, 1) * (p.c() * T * k) * root) * 0.5 * (tp - tm) *
           g * x / (1.0 + x * x);
  };
  QuadratureSpec spec;
  spec.rel_tol = 1e-10;
  spec.abs_tol = 1e-14;
  const double X = 12.0;
  std::vector<double> pts = quad::phase_panels(
      0.0, X, [&](double x) { return p.c() * T * k * x / std::sqrt(1 + x * x); },
      1.0);
  QuadResult central = quad::adaptive([&](double x) { return todd_int(Complex(x, 0.0)); },
                                      pts, spec);
  // vertical leg at X (decay rate ~ cTk)
  std::vector<double> lp;
  for (double y = 0.0, st = 0.02; y < 4.0; y += st, st *= 1.6) lp.push_back(y);
  lp.push_back(4.0);
  QuadResult leg = quad::adaptive(
      [&](double y) { return todd_int(Complex(X, y)); }, lp, spec);
  const Complex half_line = central.value + Complex(0, 1) * leg.value;
  CHECK(rel_err(h.value, 2.0 * half_line) < 1e-6);
}

TEST_CASE("stationary phase form") {
  const PhysicalParams p = unit_params();
  // endpoints degenerate
  CHECK_THROWS_AS((void)h_stationary(p, 50.0, 1.0, 0.0, Weight::Unity), RegimeError);
  CHECK_THROWS_AS((void)h_stationary(p, 50.0, 1.0, 50.0, Weight::Unity), RegimeError);
  // regime warning below cTk = 10
  CHECK(h_stationary(p, 50.0, 0.1, 10.0, Weight::Unity).regime_warning);
  CHECK(!h_stationary(p, 50.0, 1.0, 10.0, Weight::Unity).regime_warning);

  // T0 -> 1 for a transparent sheet and nearly 1 on the working set
  const PhysicalParams p0 = unit_params(1e-14);
  CHECK(rel_err(transmission_t0(p0, 50.0, 1.0, 10.0), Complex(1.0, 0.0)) < 1e-12);
  for (double z : {5.0, 10.0, 25.0, 45.0})
    CHECK(std::abs(transmission_t0(p, 50.0, 2.0 * kUc099, z) - 1.0) < 0.02);

  // agreement with h_exact within 10% once cTk >= 50, both weights,
  // and decreasing along cTk
  for (Weight w : {Weight::Unity, Weight::SigmaOverSigma0}) {
    double prev = 1.0;
    for (double k : {1.0, 2.0, 4.0, 8.0}) {
      const Complex e = h_exact(p, 50.0, k, 10.0, w).value;
      const Complex s = h_stationary(p, 50.0, k, 10.0, w).value;
      const double err = std::abs(e - s) / std::abs(e);
      CHECK(err <= 0.10);
      CHECK(err < prev);
      prev = err;
    }
  }
}

TEST_CASE("h_exact error estimates are self-consistent") {
  const PhysicalParams p = unit_params();
  struct Pt { double T, k, z; } pts[] = {{50.0, 1.0, 10.0},
                                         {50.0, 2.0 * kUc099, 10.0},
                                         {20.0, 1.0, 3.0}};
  for (const auto& pt : pts) {
    QuadratureSpec spec;
    spec.rel_tol = 1e-6;
    const HResult coarse = h_exact(p, pt.T, pt.k, pt.z, Weight::SigmaOverSigma0, spec);
    spec.rel_tol = 0.5e-6;
    const HResult fine = h_exact(p, pt.T, pt.k, pt.z, Weight::SigmaOverSigma0, spec);
    CHECK(std::abs(coarse.value - fine.value) <=
          std::max(coarse.error, 1e-12 * std::abs(coarse.value)) * 4.0);
  }
}
