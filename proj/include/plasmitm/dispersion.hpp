#pragma once

#include <array>
#include <complex>

#include "plasmitm/physics.hpp"

namespace plasmitm {

// Roots of s^4 - 2 s^3 + gamma s^2 - u^2 = 0 for u > u_c(gamma):
// one conjugate complex pair (the plasmonic modes) and two real roots of
// opposite signs (discarded by the field formulas).
struct DispersionRoots {
  double u = 0.0;
  double gamma = 0.0;
  Complex s_plus;        // Im > 0
  Complex s_minus;       // conjugate of s_plus
  double r_pos = 0.0;    // positive real root
  double r_neg = 0.0;    // negative real root
  std::array<double, 4> residuals{};  // |P(s)| / (|s|^4 + 2|s|^3 + g|s|^2 + u^2)
                                      // in order s_plus, s_minus, r_pos, r_neg
  bool near_degenerate = false;  // |u - u_c| below the degeneracy margin

  double s_r() const { return s_plus.real(); }
  double s_i() const { return s_plus.imag(); }
};

// Discriminant of the quartic: 16 u^2 (-16 u^4 + (36g - 27 - 8g^2) u^2 + g^3 (1-g)).
// Negative exactly when u > u_c(gamma) for gamma in (0, 1].
double discriminant(double gamma, double u);

// Smallest wavenumber (in units of 1/ell0) with propagating plasmonic modes.
double critical_u(double gamma);

struct SolveOptions {
  double residual_tol = 1e-12;
  double degenerate_margin = 1e-6;  // NearDegenerate flag when |u-u_c| below
};

// Companion-matrix eigenvalues with one Newton polish per root.
// Throws NoPropagatingModeError for u <= u_c.
DispersionRoots solve_dispersion(double gamma, double u,
                                 const SolveOptions& opts = {});

// s_+ ~ 1/2 + (gamma-1)/(4u) + i sqrt(u - u_c), valid for eta^2 << 1.
Complex asymptotic_root(double gamma, double u);

// P'(s) = 2 - 4 s - 2 eta^2/(1 - s); pole at s = 1 reported.
Complex pprime(const PhysicalParams& p, Complex s);
Complex pprime(double eta2, Complex s);

}  // namespace plasmitm
