#include "plasmitm/fields.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "plasmitm/dispersion.hpp"
#include "plasmitm/errors.hpp"

namespace plasmitm {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
const Complex kI(0.0, 1.0);

double fhat(const SourceConfig& src, const PhysicalParams& p, double k) {
  const double kc = critical_u(p.gamma) / p.ell0;
  return (k > src.xi * kc) ? 1.0 : 0.0;
}
}  // namespace

double a1_prefactor(const PhysicalParams& p) {
  return p.c() * p.c() * p.mu0() * p.raw.U / (4.0 * kPi);
}

double a0_prefactor(const PhysicalParams& p) {
  const double mu0c2 = p.mu0() * p.c() * p.c();
  return 2.0 * p.raw.alpha * mu0c2 * mu0c2 * p.raw.U / (16.0 * kPi * kPi);
}

Complex unperturbed_pole_field(const PhysicalParams& p, const SourceConfig& src,
                               double T, double k) {
  const double u = k * p.ell0;
  const DispersionRoots roots = solve_dispersion(p.gamma, u);
  const Complex g = plasmon_propagator(p, T, src.z0, roots.s_plus);
  return 2.0 * kI * a1_prefactor(p) * fhat(src, p, k) * g.imag();
}

Complex unperturbed_branch_field(const PhysicalParams& p,
                                 const SourceConfig& src, double T, double k,
                                 const QuadratureSpec& spec) {
  const HResult h = h_exact(p, T, k, src.z0, Weight::Unity, spec);
  return -2.0 * kI * a1_prefactor(p) * fhat(src, p, k) * h.value.imag();
}

PerturbedComponents perturbed_components(const PhysicalParams& p,
                                         const SourceConfig& src, double T,
                                         double k, double z,
                                         const QuadratureSpec& spec) {
  if (!(z >= 0.0)) throw RegimeError("perturbed components require z >= 0");
  const double u = k * p.ell0;
  const DispersionRoots roots = solve_dispersion(p.gamma, u);
  const Complex sp = roots.s_plus;

  const Complex g0 = plasmon_propagator(p, T, src.z0, sp);
  const Complex gz = plasmon_propagator(p, T, z, sp);
  const Complex sig_p = conductivity(p, kI / p.tau() * sp);  // sigma(i s+/tau)
  const Complex h0 = h_exact(p, T, k, src.z0, Weight::Unity, spec).value;
  // H(T,k,z,sigma) = sigma0 * H(T,k,z,sigma/sigma0)
  const Complex hz =
      p.sigma0 * h_exact(p, T, k, z, Weight::SigmaOverSigma0, spec).value;

  const double a0k2f = a0_prefactor(p) * k * k * fhat(src, p, k);
  PerturbedComponents out;
  out.p = a0k2f * (sig_p * std::conj(g0) * gz).real();
  out.s = a0k2f * (std::conj(h0) * hz).real();
  out.f = -a0k2f *
          ((std::conj(g0) + h0) * (std::conj(sig_p) * std::conj(gz) + hz)).real();
  out.m = a0k2f * (g0 * hz + sig_p * gz * h0).real();
  return out;
}

MixedWaveLocation mixed_wave_locator(const PhysicalParams& p, double T,
                                     const std::vector<double>& k_grid,
                                     double w) {
  if (k_grid.empty()) throw ConfigError("mixed_wave_locator needs a k grid");
  const double cT = p.c() * T;
  const double uc = critical_u(p.gamma);
  const double ph = phi_of(w, cT);

  MixedWaveLocation out;
  out.radius_limit = cT * ph;
  // the plasmonic envelope decays in u, so the smallest admissible grid
  // wavenumber dominates the mixed wave
  double umin = std::numeric_limits<double>::infinity();
  for (double k : k_grid) {
    const double u = k * p.ell0;
    if (u > uc) umin = std::min(umin, u);
  }
  if (!std::isfinite(umin))
    throw NoPropagatingModeError(k_grid.front() * p.ell0, uc);
  out.u_dominant = umin;
  out.radius = cT * (ph - p.eta / (2.0 * std::sqrt(umin - uc)));
  return out;
}

}  // namespace plasmitm
