#include "plasmitm/specfun.hpp"

#include <cmath>
#include <complex>

#include "plasmitm/errors.hpp"

namespace plasmitm {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Crossover between the power series and the Hankel expansion. At x = 12 the
// series loses ~4 digits to cancellation and the asymptotic chain bottoms out
// near 1e-11, so both sides meet the 1e-10 budget.
constexpr double kSeriesCut = 12.0;

double j0_series(double x) {
  const double q = 0.25 * x * x;
  double term = 1.0;
  double sum = 1.0;
  for (int n = 1; n < 64; ++n) {
    term *= -q / (static_cast<double>(n) * n);
    sum += term;
    if (std::abs(term) < 1e-18 * (1.0 + std::abs(sum))) break;
  }
  return sum;
}

// Hankel expansion via H0^(1)(x) ~ sqrt(2/(pi x)) e^{i(x - pi/4)} sum_m i^m a_m / x^m,
// a_m = prod_{j=1..m} (-(2j-1)^2) / (m! 8^m); J0 = Re H0^(1).
double j0_asymptotic(double x) {
  std::complex<double> sum(1.0, 0.0);
  double am_over_xm = 1.0;
  const std::complex<double> minus_i(0.0, -1.0);  // i^m (-1)^m
  std::complex<double> ipow(1.0, 0.0);
  for (int m = 1; m <= 17; ++m) {
    const double f = (2.0 * m - 1.0) * (2.0 * m - 1.0) / (8.0 * m * x);
    am_over_xm *= f;
    ipow *= minus_i;
    sum += ipow * am_over_xm;
    if (am_over_xm < 1e-17) break;
  }
  const double chi_ph = x - 0.25 * kPi;
  const std::complex<double> lead =
      std::sqrt(2.0 / (kPi * x)) *
      std::complex<double>(std::cos(chi_ph), std::sin(chi_ph));
  return (lead * sum).real();
}

}  // namespace

double bessel_j0(double x) {
  x = std::abs(x);
  if (x < kSeriesCut) return j0_series(x);
  return j0_asymptotic(x);
}

double bessel_kernel(double x) { return 2.0 * kPi * bessel_j0(x); }

ChiProfile chi_profile_from_string(const std::string& name) {
  if (name == "raised_cosine") return ChiProfile::RaisedCosine;
  if (name == "box") return ChiProfile::Box;
  if (name == "triangle") return ChiProfile::Triangle;
  throw ConfigError("unknown chi_profile '" + name +
                    "' (expected raised_cosine, box or triangle)");
}

std::string to_string(ChiProfile p) {
  switch (p) {
    case ChiProfile::RaisedCosine: return "raised_cosine";
    case ChiProfile::Box: return "box";
    case ChiProfile::Triangle: return "triangle";
  }
  return "?";
}

double chi(ChiProfile profile, double v) {
  if (std::abs(v) > 0.5) return 0.0;
  switch (profile) {
    case ChiProfile::RaisedCosine: return 1.0 + std::cos(2.0 * kPi * v);
    case ChiProfile::Box: return 1.0;
    case ChiProfile::Triangle: return 2.0 * (1.0 - 2.0 * std::abs(v));
  }
  return 0.0;
}

namespace {

// sin(u/2)/(u/2), stable near 0.
double half_sinc(double u) {
  const double h = 0.5 * u;
  if (std::abs(h) < 1e-4) {
    const double h2 = h * h;
    return 1.0 - h2 / 6.0 + h2 * h2 / 120.0;
  }
  return std::sin(h) / h;
}

}  // namespace

double chi_hat(ChiProfile profile, double u) {
  u = std::abs(u);
  switch (profile) {
    case ChiProfile::Box:
      return half_sinc(u);
    case ChiProfile::Triangle: {
      // convolution square of a width-1/2 box
      const double h = 0.25 * u;
      double s;
      if (std::abs(h) < 1e-4) {
        const double h2 = h * h;
        s = 1.0 - h2 / 6.0 + h2 * h2 / 120.0;
      } else {
        s = std::sin(h) / h;
      }
      return s * s;
    }
    case ChiProfile::RaisedCosine: {
      // 8 pi^2 sin(u/2) / (u (4 pi^2 - u^2)); removable points at u = 0, 2 pi.
      const double tp = 2.0 * kPi;
      if (std::abs(u - tp) < 1e-3) {
        // sin(u/2) = -sin(d/2) with d = u - 2 pi, cancel the (2 pi - u) factor
        const double d = u - tp;
        const double h = 0.5 * d;
        const double sinc_h =
            std::abs(h) < 1e-6 ? 1.0 - h * h / 6.0 : std::sin(h) / h;
        return 4.0 * kPi * kPi * sinc_h / (u * (4.0 * kPi + d));
      }
      if (u < 1e-4) {
        // chi_hat = 1 - m2 u^2/2 + ..., m2 = 1/12 - 1/(2 pi^2)
        const double m2 = 1.0 / 12.0 - 1.0 / (2.0 * kPi * kPi);
        return 1.0 - 0.5 * m2 * u * u;
      }
      return 8.0 * kPi * kPi * std::sin(0.5 * u) /
             (u * (4.0 * kPi * kPi - u * u));
    }
  }
  return 0.0;
}

}  // namespace plasmitm
