#pragma once

#include "plasmitm/dispersion.hpp"
#include "plasmitm/oscint.hpp"
#include "plasmitm/physics.hpp"
#include "plasmitm/quadrature.hpp"
#include "plasmitm/specfun.hpp"

namespace plasmitm {

enum class KernelMethod { Exact, Stationary };

struct KernelSample {
  double k = 0.0;     // horizontal wavenumber (1/m)
  double z = 0.0;     // height (m)
  double value = 0.0;
  KernelMethod method = KernelMethod::Exact;
  double dt = 0.0;    // regularization duration, 0 when unregularized
};

// K_P(k,z) = Re{(1-s+) e^{i s_i (2 s_r - 1)(z0-z)/ell0}} / |P'(s+)|^2
//            * 16 pi^2 e^{-2 s_r T/tau} e^{-(s_r - s_r^2 + s_i^2)(z+z0)/ell0}.
double kernel_p_exact(const PhysicalParams& p, double T, double k, double z,
                      double z0);

// Small-eta form with the complex exponential set to one:
// 16 pi^2 e^{-T/tau} e^{-(z+z0)/4 ell0} e^{-(u-u_c)(z+z0)/ell0} / (32 (u-u_c)).
// Diverges (integrably) as u -> u_c from above.
double kernel_p_asymptotic(const PhysicalParams& p, double T, double k,
                           double z, double z0);

// Complex conjugate product H*(T,k,z0,1) H(T,k,z,sigma/sigma0); K_S is its
// real part. Exposed because the stationary-phase accuracy statement applies
// to the product, while Re{.} may be cancellation-dominated.
Complex scattered_product(const PhysicalParams& p, double T, double k, double z,
                          double z0, KernelMethod method,
                          const QuadratureSpec& spec = {});

double kernel_s(const PhysicalParams& p, double T, double k, double z,
                double z0, KernelMethod method, const QuadratureSpec& spec = {});

// Finite-duration mirror: K_P(k,z) * chi_hat(2 dt s_i(k)/tau).
double kernel_p_regularized(const PhysicalParams& p, double T, double k,
                            double z, double z0, double dt, ChiProfile profile);

// Finite-duration mirror: K_S(k,z) * chi_hat(c dt k (phi(z)+phi(z0))).
double kernel_s_regularized(const PhysicalParams& p, double T, double k,
                            double z, double z0, double dt, ChiProfile profile,
                            KernelMethod method,
                            const QuadratureSpec& spec = {});

}  // namespace plasmitm
