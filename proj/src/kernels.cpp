#include "plasmitm/kernels.hpp"

#include <cmath>

#include "plasmitm/errors.hpp"

namespace plasmitm {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

double kernel_p_exact(const PhysicalParams& p, double T, double k, double z,
                      double z0) {
  if (!(z >= 0.0) || !(z0 >= 0.0))
    throw RegimeError("kernel_p_exact requires z, z0 >= 0");
  const double u = k * p.ell0;
  const DispersionRoots roots = solve_dispersion(p.gamma, u);
  const double sr = roots.s_r(), si = roots.s_i();
  const Complex one_ms = 1.0 - roots.s_plus;
  const Complex phase =
      std::exp(Complex(0.0, si * (2.0 * sr - 1.0) * (z0 - z) / p.ell0));
  const double dp2 = std::norm(pprime(p, roots.s_plus));
  return (one_ms * phase).real() / dp2 * 16.0 * kPi * kPi *
         std::exp(-2.0 * sr * T / p.tau()) *
         std::exp(-(sr - sr * sr + si * si) * (z + z0) / p.ell0);
}

double kernel_p_asymptotic(const PhysicalParams& p, double T, double k,
                           double z, double z0) {
  const double u = k * p.ell0;
  const double uc = critical_u(p.gamma);
  if (!(u > uc)) throw NoPropagatingModeError(u, uc);
  const double rho = (z + z0) / p.ell0;
  return 16.0 * kPi * kPi * std::exp(-T / p.tau()) * std::exp(-rho / 4.0) *
         std::exp(-(u - uc) * rho) / (32.0 * (u - uc));
}

Complex scattered_product(const PhysicalParams& p, double T, double k, double z,
                          double z0, KernelMethod method,
                          const QuadratureSpec& spec) {
  HResult h0, hz;
  if (method == KernelMethod::Exact) {
    h0 = h_exact(p, T, k, z0, Weight::Unity, spec);
    hz = h_exact(p, T, k, z, Weight::SigmaOverSigma0, spec);
  } else {
    h0 = h_stationary(p, T, k, z0, Weight::Unity);
    hz = h_stationary(p, T, k, z, Weight::SigmaOverSigma0);
  }
  return std::conj(h0.value) * hz.value;
}

double kernel_s(const PhysicalParams& p, double T, double k, double z,
                double z0, KernelMethod method, const QuadratureSpec& spec) {
  if (!(k > 0.0)) throw RegimeError("kernel_s requires k > 0");
  return scattered_product(p, T, k, z, z0, method, spec).real();
}

double kernel_p_regularized(const PhysicalParams& p, double T, double k,
                            double z, double z0, double dt, ChiProfile profile) {
  if (!(dt >= 0.0)) throw ConfigError("dt must be >= 0");
  const double u = k * p.ell0;
  const DispersionRoots roots = solve_dispersion(p.gamma, u);
  return kernel_p_exact(p, T, k, z, z0) *
         chi_hat(profile, 2.0 * dt * roots.s_i() / p.tau());
}

double kernel_s_regularized(const PhysicalParams& p, double T, double k,
                            double z, double z0, double dt, ChiProfile profile,
                            KernelMethod method, const QuadratureSpec& spec) {
  if (!(dt >= 0.0)) throw ConfigError("dt must be >= 0");
  const double cT = p.c() * T;
  const double arg = p.c() * dt * k * (phi_of(z, cT) + phi_of(z0, cT));
  return kernel_s(p, T, k, z, z0, method, spec) * chi_hat(profile, arg);
}

}  // namespace plasmitm
