#pragma once

#include <complex>

#include "plasmitm/physics.hpp"
#include "plasmitm/quadrature.hpp"

namespace plasmitm {

// Spectral weight g(c|K|) inside the branch-cut integral: only the two
// weights used by the kernels are public.
enum class Weight { Unity, SigmaOverSigma0 };

// Mirror-time geometry. phi(z) = sqrt(1 - (z/cT)^2) requires 0 <= z < cT;
// the emitted wave must have reached the sheet: cT > z0.
struct GeometryFrame {
  double T = 0.0;   // mirror time (s)
  double z = 0.0;   // field height (m)
  double z0 = 0.0;  // source height (m)
  double r = 0.0;   // horizontal radius (m)
};

struct Geometry {
  double phi_z = 0.0;
  double phi_z0 = 0.0;
  double delta_phi = 0.0;  // phi(z) - phi(z0)
  double C = 0.0;          // ((2pi)^2 z^2 z0^2 / ((cT)^6 phi(z) phi(z0)))^{1/2}
};

Geometry geometry(const PhysicalParams& p, const GeometryFrame& frame);

double phi_of(double z, double cT);

struct HResult {
  Complex value{0.0, 0.0};
  double error = 0.0;      // quadrature estimate (abs)
  int evaluations = 0;
  bool regime_warning = false;  // attached when cTk < 10 (stationary form only)
};

// The branch-cut integral
//   H(T,k,z,g) = int_R e^{i c T |K|} e^{i kz z} T(c|K|, kz) g(c|K|) kz dkz/|K|^2
// over kz in R, |K|^2 = k^2 + kz^2. Evaluated after rescaling kz -> k x by a
// central phase-panelled sweep plus exact vertical contour legs (the
// integrand is analytic and exponentially decaying along them), so no
// truncation of the conditionally convergent tails is involved.
HResult h_exact(const PhysicalParams& p, double T, double k, double z,
                Weight weight, const QuadratureSpec& spec = {});

// Stationary-phase approximation of H for 0 < z < cT:
//   -e^{i pi/4} sqrt(2 pi z^2/(k (cT)^3 phi(z))) e^{i cT k phi(z)} T0(k,z) g(ck/phi(z)).
// The constant -e^{i pi/4} comes out of the standard stationary-phase step
// and is required for agreement with h_exact (not only in modulus).
HResult h_stationary(const PhysicalParams& p, double T, double k, double z,
                     Weight weight);

// T0(k,z) = 1 / (1 + mu0 sigma0 z / (2T [1 + i c tau k/phi(z)])).
Complex transmission_t0(const PhysicalParams& p, double T, double k, double z);

// Plasmonic propagator G(t,z,s) = 4 i pi (1-s)/P'(s) e^{-s t/tau} e^{-s(1-s) z/ell0}.
Complex plasmon_propagator(const PhysicalParams& p, double t, double z, Complex s);

}  // namespace plasmitm
