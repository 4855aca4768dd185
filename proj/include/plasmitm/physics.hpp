#pragma once

#include <complex>

namespace plasmitm {

using Complex = std::complex<double>;

// Raw constitutive inputs, SI units throughout.
struct RawParams {
  double D0 = 0.0;     // Drude weight (S/s)
  double tau = 0.0;    // relaxation time (s)
  double c = 0.0;      // background light speed (m/s)
  double mu0 = 0.0;    // permeability (H/m)
  double U = 1.0;      // pulse amplitude (A m s)
  double alpha = 0.0;  // mirror strength (s)
};

// Raw inputs plus the derived triple (sigma0, eta, ell0) and gamma.
// Derived fields are always recomputed from the raw ones by derive_params.
struct PhysicalParams {
  RawParams raw;
  double sigma0 = 0.0;  // sheet conductance D0*tau (S)
  double eta = 0.0;     // mu0*sigma0*c/2, dimensionless
  double ell0 = 0.0;    // attenuation length eta*c*tau (m)
  double gamma = 0.0;   // 1 - eta^2

  double c() const { return raw.c; }
  double tau() const { return raw.tau; }
  double mu0() const { return raw.mu0; }
};

// Source spectrum: the indicator of k > xi*k_c (xi > 1).
struct SourceConfig {
  double z0 = 0.0;  // source height (m), > 0
  double xi = 2.0;  // spectral cutoff multiplier, > 1
};

// Derives (sigma0, eta, ell0, gamma) and validates the regime. Inputs must be
// strictly positive; eta >= 1 (gamma <= 0) is rejected unless
// allow_gamma_nonpositive is set, since the propagating-mode analysis used by
// the default pipeline requires gamma in (0,1).
PhysicalParams derive_params(const RawParams& raw,
                             bool allow_gamma_nonpositive = false);

// sigma(omega) = sigma0 / (1 + i omega tau); domain error at omega = i/tau.
Complex conductivity(const PhysicalParams& p, Complex omega);

// T(omega, kz) = 1 / (1 - mu0 sigma(omega) kz c^2 / (2 omega)).
// Reports a plasmon pole (vanishing denominator) distinctly from overflow.
Complex transmission(const PhysicalParams& p, Complex omega, Complex kz);

// Vertical wavenumber beta(omega, k): the square root of omega^2/c^2 - k^2
// with Im >= 0; on the real-axis branch cuts (|omega| >= ck) the value is the
// limit from below the real omega axis, i.e. -sign(omega) sqrt(omega^2/c^2 - k^2).
Complex beta(const PhysicalParams& p, Complex omega, double k);

}  // namespace plasmitm
