#include <doctest.h>

#include <cmath>
#include <complex>

#include "plasmitm/errors.hpp"
#include "plasmitm/physics.hpp"
#include "plasmitm/quadrature.hpp"
#include "plasmitm/specfun.hpp"

using namespace plasmitm;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

// independent oracle: the defining power series in long double
long double j0_series_ld(long double x) {
  const long double q = 0.25L * x * x;
  long double term = 1.0L, sum = 1.0L;
  for (int n = 1; n < 200; ++n) {
    term *= -q / (static_cast<long double>(n) * n);
    sum += term;
    if (std::fabs((double)term) < 1e-22 * (1.0 + std::fabs((double)sum))) break;
  }
  return sum;
}
}  // namespace

TEST_CASE("bessel kernel basics") {
  CHECK(bessel_kernel(0.0) == doctest::Approx(2.0 * kPi).epsilon(1e-15));
  // first zero of J0
  CHECK(std::abs(bessel_kernel(2.404826)) <= 1e-5);
  CHECK(std::abs(bessel_j0(2.4048255576957727686)) <= 1e-13);
}

TEST_CASE("bessel matches the power series on [0, 10]") {
  for (int i = 0; i <= 400; ++i) {
    const double x = 10.0 * i / 400.0;
    const double ref = static_cast<double>(j0_series_ld(x));
    CHECK(std::abs(bessel_j0(x) - ref) <= 1e-10);
  }
}

TEST_CASE("bessel reference values across the crossover") {
  // mpmath besselj(0, x), 17 digits
  CHECK(bessel_j0(1.0) == doctest::Approx(0.76519768655796655).epsilon(1e-12));
  CHECK(bessel_j0(5.0) == doctest::Approx(-0.17759677131433830).epsilon(1e-11));
  CHECK(bessel_j0(11.99) == doctest::Approx(0.045451560352858604).epsilon(1e-8));
  CHECK(bessel_j0(12.01) == doctest::Approx(0.049920430319825354).epsilon(1e-8));
  CHECK(bessel_j0(100.0) == doctest::Approx(0.019985850304223122).epsilon(1e-8));
  CHECK(std::abs(bessel_j0(1000.0) - 0.024786686152420175) <= 1e-10);
  CHECK(std::abs(bessel_j0(10000.0) - (-0.0070961603533888015)) <= 1e-10);
}

TEST_CASE("large-argument asymptotic form within 1% beyond x = 20") {
  for (double x : {20.0, 35.0, 60.0, 123.0, 500.0}) {
    const double env = 2.0 * kPi * std::sqrt(2.0 / (kPi * x));
    const double asym = env * std::cos(x - kPi / 4.0);
    CHECK(std::abs(bessel_kernel(x) - asym) <= 0.01 * env);
  }
}

TEST_CASE("chi profiles: mass, parity, support") {
  QuadratureSpec spec;
  spec.rel_tol = 1e-12;
  for (auto prof : {ChiProfile::RaisedCosine, ChiProfile::Box, ChiProfile::Triangle}) {
    auto f = [&](double v) { return Complex(chi(prof, v), 0.0); };
    const auto mass = quad::adaptive(f, {-0.5, -0.25, 0.0, 0.25, 0.5}, spec);
    CHECK(mass.value.real() == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(chi(prof, 0.31) == chi(prof, -0.31));
    CHECK(chi(prof, 0.51) == 0.0);
    CHECK(chi(prof, -3.0) == 0.0);
  }
}

TEST_CASE("chi_hat closed forms") {
  for (auto prof : {ChiProfile::RaisedCosine, ChiProfile::Box, ChiProfile::Triangle}) {
    CHECK(chi_hat(prof, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
  }
  CHECK(std::abs(chi_hat(ChiProfile::Box, 2.0 * kPi)) <= 1e-14);
  // raised cosine at u = 5 (independent quadrature oracle)
  CHECK(chi_hat(ChiProfile::RaisedCosine, 5.0) ==
        doctest::Approx(0.65274352143).epsilon(1e-9));
  // removable point of the raised cosine at u = 2 pi
  const double at = chi_hat(ChiProfile::RaisedCosine, 2.0 * kPi);
  CHECK(at == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(chi_hat(ChiProfile::RaisedCosine, 2.0 * kPi - 1e-7) ==
        doctest::Approx(at).epsilon(1e-6));
  CHECK(chi_hat(ChiProfile::RaisedCosine, 2.0 * kPi + 1e-7) ==
        doctest::Approx(at).epsilon(1e-6));
}

TEST_CASE("chi_hat equals the defining transform and is bounded by one") {
  QuadratureSpec spec;
  spec.rel_tol = 1e-12;
  spec.abs_tol = 1e-13;
  for (auto prof : {ChiProfile::RaisedCosine, ChiProfile::Box, ChiProfile::Triangle}) {
    for (double u = 0.0; u <= 100.0; u += 3.7) {
      // chi even: transform reduces to the cosine integral
      auto f = [&](double v) { return Complex(std::cos(u * v) * chi(prof, v), 0.0); };
      std::vector<double> pts;
      for (double x = -0.5; x < 0.5; x += 0.025) pts.push_back(x);
      pts.push_back(0.5);
      const double ref = quad::adaptive(f, pts, spec).value.real();
      CHECK(std::abs(chi_hat(prof, u) - ref) <= 1e-8);
      CHECK(std::abs(chi_hat(prof, u)) <= 1.0 + 1e-12);
      CHECK(chi_hat(prof, u) == chi_hat(prof, -u));  // even
    }
  }
}

TEST_CASE("profile names round-trip") {
  for (auto prof : {ChiProfile::RaisedCosine, ChiProfile::Box, ChiProfile::Triangle})
    CHECK(chi_profile_from_string(to_string(prof)) == prof);
  CHECK_THROWS_AS((void)chi_profile_from_string("hann"), ConfigError);
}
