#include "plasmitm/dispersion.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <vector>

#include "plasmitm/errors.hpp"

namespace plasmitm {

double discriminant(double gamma, double u) {
  const double g = gamma, u2 = u * u;
  return 16.0 * u2 *
         (-16.0 * u2 * u2 + (36.0 * g - 27.0 - 8.0 * g * g) * u2 +
          g * g * g * (1.0 - g));
}

double critical_u(double gamma) {
  if (!(gamma > 0.0) || gamma > 1.0)
    throw RegimeError("critical_u requires gamma in (0, 1], got " +
                      std::to_string(gamma));
  const double g = gamma;
  const double b = 36.0 * g - 27.0 - 8.0 * g * g;
  const double uc2 =
      (b + std::sqrt(b * b + 64.0 * g * g * g * (1.0 - g))) / 32.0;
  return std::sqrt(uc2);
}

namespace {

Complex quartic_value(double gamma, double u, Complex s) {
  // Horner on s^4 - 2 s^3 + gamma s^2 - u^2
  return (((s - 2.0) * s + gamma) * s) * s - u * u;
}

Complex quartic_derivative(double gamma, Complex s) {
  return ((4.0 * s - 6.0) * s + 2.0 * gamma) * s;
}

double residual_scale(double gamma, double u, Complex s) {
  const double a = std::abs(s);
  return a * a * a * a + 2.0 * a * a * a + gamma * a * a + u * u;
}

}  // namespace

DispersionRoots solve_dispersion(double gamma, double u,
                                 const SolveOptions& opts) {
  const double uc = critical_u(gamma);
  if (!(u > uc)) throw NoPropagatingModeError(u, uc);

  // companion matrix of s^4 - 2 s^3 + gamma s^2 + 0 s - u^2
  Eigen::Matrix4d comp = Eigen::Matrix4d::Zero();
  comp(0, 3) = u * u;       // -(-u^2)
  comp(1, 3) = 0.0;         // -0
  comp(2, 3) = -gamma;
  comp(3, 3) = 2.0;
  comp(1, 0) = comp(2, 1) = comp(3, 2) = 1.0;
  Eigen::EigenSolver<Eigen::Matrix4d> es(comp, /*computeEigenvectors=*/false);

  std::vector<Complex> roots;
  for (int i = 0; i < 4; ++i) {
    Complex s(es.eigenvalues()[i].real(), es.eigenvalues()[i].imag());
    // one Newton polish step (a second one costs nothing and guards
    // ill-conditioned clusters near u = u_c)
    for (int it = 0; it < 2; ++it) {
      const Complex d = quartic_derivative(gamma, s);
      if (std::abs(d) < 1e-300) break;
      s -= quartic_value(gamma, u, s) / d;
    }
    roots.push_back(s);
  }

  DispersionRoots out;
  out.u = u;
  out.gamma = gamma;
  out.near_degenerate = std::abs(u - uc) < opts.degenerate_margin;

  std::vector<Complex> cplx, real;
  for (const Complex& s : roots) {
    if (std::abs(s.imag()) > 1e-8 * std::max(1.0, std::abs(s)))
      cplx.push_back(s);
    else
      real.push_back(s);
  }
  if (cplx.size() != 2 || real.size() != 2)
    throw NumericError("root classification failed at gamma = " +
                       std::to_string(gamma) + ", u = " + std::to_string(u) +
                       " (u - u_c = " + std::to_string(u - uc) + ")");

  out.s_plus = (cplx[0].imag() > 0.0) ? cplx[0] : cplx[1];
  out.s_minus = std::conj(out.s_plus);
  const double r0 = real[0].real(), r1 = real[1].real();
  out.r_pos = std::max(r0, r1);
  out.r_neg = std::min(r0, r1);
  if (!(out.s_plus.real() > 0.0) || !(out.r_pos > 0.0) || !(out.r_neg < 0.0))
    throw NumericError("root signs violate the expected classification");

  const Complex rs[4] = {out.s_plus, out.s_minus, Complex(out.r_pos, 0.0),
                         Complex(out.r_neg, 0.0)};
  for (int i = 0; i < 4; ++i) {
    out.residuals[i] =
        std::abs(quartic_value(gamma, u, rs[i])) / residual_scale(gamma, u, rs[i]);
    if (out.residuals[i] > opts.residual_tol)
      throw NumericError("root residual above tolerance");
  }
  return out;
}

Complex asymptotic_root(double gamma, double u) {
  const double uc = critical_u(gamma);
  if (!(u > uc)) throw NoPropagatingModeError(u, uc);
  return Complex(0.5 + (gamma - 1.0) / (4.0 * u), std::sqrt(u - uc));
}

Complex pprime(double eta2, Complex s) {
  if (std::abs(s - 1.0) < 1e-300) throw RegimeError("pprime pole at s = 1");
  return 2.0 - 4.0 * s - 2.0 * eta2 / (1.0 - s);
}

Complex pprime(const PhysicalParams& p, Complex s) {
  return pprime(p.eta * p.eta, s);
}

}  // namespace plasmitm
