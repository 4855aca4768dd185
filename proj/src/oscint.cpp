#include "plasmitm/oscint.hpp"

#include <algorithm>
#include <cmath>

#include "plasmitm/dispersion.hpp"
#include "plasmitm/errors.hpp"

namespace plasmitm {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
using C = Complex;
const C kI(0.0, 1.0);
}  // namespace

double phi_of(double z, double cT) {
  if (!(z >= 0.0) || !(z < cT))
    throw RegimeError("phi(z) requires 0 <= z < cT (z = " + std::to_string(z) +
                      ", cT = " + std::to_string(cT) + ")");
  const double q = z / cT;
  return std::sqrt(1.0 - q * q);
}

Geometry geometry(const PhysicalParams& p, const GeometryFrame& f) {
  const double cT = p.c() * f.T;
  if (!(cT > f.z0))
    throw RegimeError("geometry requires cT > z0");
  Geometry g;
  g.phi_z = phi_of(f.z, cT);
  g.phi_z0 = phi_of(f.z0, cT);
  g.delta_phi = g.phi_z - g.phi_z0;
  g.C = 2.0 * kPi * f.z * f.z0 /
        (cT * cT * cT * std::sqrt(g.phi_z * g.phi_z0));
  return g;
}

namespace {

// Integrand of H in the rescaled variable x = kz/k (possibly complex):
//   e^{i a sqrt(1+x^2)} e^{i b x} T(ck sqrt(1+x^2), k x) g(...) x/(1+x^2)
// with a = cTk, b = zk. The principal sqrt stays off its cut on the real
// axis and on the vertical legs used below (Im(1+x^2) is sign-definite).
struct HIntegrand {
  const PhysicalParams& p;
  double k;
  double a;  // cTk
  double b;  // zk
  Weight weight;

  C operator()(C x) const {
    const C one_px2 = 1.0 + x * x;
    const C root = std::sqrt(one_px2);
    const C omega = p.c() * k * root;
    C g(1.0, 0.0);
    if (weight == Weight::SigmaOverSigma0)
      g = 1.0 / (1.0 + kI * omega * p.tau());
    const C t = 1.0 / (1.0 - p.mu0() * (p.sigma0 / (1.0 + kI * omega * p.tau())) *
                                 (k * x) * p.c() * p.c() / (2.0 * omega));
    return std::exp(kI * (a * root + b * x)) * t * g * x / one_px2;
  }
};

double leg_rate(double a, double b, bool left, bool up) {
  // asymptotic decay rate of |integrand| along a vertical leg
  if (!left) return a + b;
  return up ? (b - a) : (a - b);
}

}  // namespace

HResult h_exact(const PhysicalParams& p, double T, double k, double z,
                Weight weight, const QuadratureSpec& spec) {
  if (!(k > 0.0)) throw RegimeError("h_exact requires k > 0");
  if (!(z >= 0.0)) throw RegimeError("h_exact requires z >= 0");
  if (!(T > 0.0)) throw RegimeError("h_exact requires T > 0");

  const double a = p.c() * T * k;
  const double b = z * k;
  if (std::abs(a - b) < 1e-12 * (a + b))
    throw RegimeError("h_exact degenerate at z = cT");

  // The transmission poles sit near the imaginary x-axis: |Re x_pole| =
  // s_i |2 s_r - 1| / u <= sqrt(u - u_c)/u <= 1/sqrt(u_c) ~ 2 for any
  // admissible u (and exactly 0 below the cutoff). X = 12 clears them with
  // margin; the stationary point sets the other scale.
  double xs = 0.0;
  if (b < a) xs = -(b / a) / std::sqrt(1.0 - (b / a) * (b / a));
  const double X = std::max(12.0, 3.0 * std::abs(xs) + 3.0);

  HIntegrand f{p, k, a, b, weight};

  // central sweep with phase-aware panels
  auto freq = [&](double x) {
    return a * x / std::sqrt(1.0 + x * x) + b;  // d/dx phase
  };
  std::vector<double> pts = quad::phase_panels(-X, X, freq, 0.25 * X);
  if (xs > -X && xs < X) {
    pts.push_back(xs);
    std::sort(pts.begin(), pts.end());
  }
  QuadratureSpec cspec = spec;
  cspec.abs_tol = std::max(spec.abs_tol, 1e-14);
  QuadResult central =
      quad::adaptive([&](double x) { return f(C(x, 0.0)); }, pts, cspec);

  // vertical legs: right always up; left down if z < cT, else up.
  const bool left_up = (b > a);
  const double r_rate = leg_rate(a, b, false, true);
  const double l_rate = leg_rate(a, b, true, left_up);
  if (!(r_rate > 0.0) || !(l_rate > 0.0))
    throw NumericError("h_exact leg decay rates invalid");

  // Closing the real-axis tails against vertical rays (Cauchy on the swept
  // quadrant rectangles):
  //   int_X^inf f dx      = +i int_0^inf f(X + iy) dy
  //   int_-inf^-X f dx    = +i int_0^inf f(-X - iy) dy   (rotating down)
  //   int_-inf^-X f dx    = -i int_0^inf f(-X + iy) dy   (rotating up)
  auto leg = [&](bool left) {
    const double rate = left ? l_rate : r_rate;
    const double ymax = 60.0 / rate;
    std::vector<double> lp;
    double y = 0.0;
    double st = std::min(0.5 / rate, ymax / 8.0);
    while (y < ymax) {
      lp.push_back(y);
      y += st;
      st *= 1.7;
    }
    lp.push_back(ymax);
    const double sx = left ? -X : X;
    const double sy = left ? (left_up ? 1.0 : -1.0) : 1.0;
    QuadResult q = quad::adaptive(
        [&](double yy) { return f(C(sx, sy * yy)); }, lp, cspec);
    const double orientation = left ? -sy : sy;
    q.value *= kI * orientation;
    return q;
  };
  QuadResult right = leg(false);
  QuadResult leftq = leg(true);

  HResult out;
  out.value = central.value + right.value + leftq.value;
  out.error = central.error + right.error + leftq.error;
  out.evaluations = central.evaluations + right.evaluations + leftq.evaluations;
  return out;
}

Complex transmission_t0(const PhysicalParams& p, double T, double k, double z) {
  const double cT = p.c() * T;
  const double ph = phi_of(z, cT);
  return 1.0 / (1.0 + p.mu0() * p.sigma0 * z /
                          (2.0 * T * (1.0 + kI * p.c() * p.tau() * k / ph)));
}

HResult h_stationary(const PhysicalParams& p, double T, double k, double z,
                     Weight weight) {
  if (!(k > 0.0)) throw RegimeError("h_stationary requires k > 0");
  const double cT = p.c() * T;
  if (!(z > 0.0) || !(z < cT))
    throw RegimeError("h_stationary requires 0 < z < cT (stationary point "
                      "degenerates at the endpoints)");
  const double ph = phi_of(z, cT);
  const double a = cT * k;

  C g(1.0, 0.0);
  if (weight == Weight::SigmaOverSigma0) {
    const double om = p.c() * k / ph;
    g = 1.0 / (1.0 + kI * om * p.tau());
  }
  const double amp = std::sqrt(2.0 * kPi * z * z / (k * cT * cT * cT * ph));
  const C phase = std::exp(kI * (a * ph));
  const C quarter = -std::exp(kI * (kPi / 4.0));

  HResult out;
  out.value = quarter * amp * phase * transmission_t0(p, T, k, z) * g;
  out.regime_warning = (a < 10.0);
  return out;
}

Complex plasmon_propagator(const PhysicalParams& p, double t, double z, Complex s) {
  if (!(z >= 0.0)) throw RegimeError("plasmon_propagator requires z >= 0");
  const C dp = pprime(p, s);
  if (std::abs(dp) < 1e-300)
    throw RegimeError("plasmon_propagator undefined: P'(s) = 0");
  return 4.0 * kI * kPi * (1.0 - s) / dp *
         std::exp(-s * (t / p.tau())) * std::exp(-s * (1.0 - s) * (z / p.ell0));
}

}  // namespace plasmitm
