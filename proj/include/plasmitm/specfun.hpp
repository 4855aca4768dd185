#pragma once

#include <string>

namespace plasmitm {

// J0, Bessel function of the first kind of order zero.
// Power series below the crossover, Hankel asymptotic expansion above.
// Absolute error <= 1e-10 over [0, 1e4].
double bessel_j0(double x);

// The radial kernel J(x) = 2*pi*J0(x) used by all Hankel-type reductions.
double bessel_kernel(double x);

// Mirror smoothing profiles: even, unit mass, supported in [-1/2, 1/2].
enum class ChiProfile { RaisedCosine, Box, Triangle };

ChiProfile chi_profile_from_string(const std::string& name);
std::string to_string(ChiProfile p);

// chi(v) itself (used by tests and by direct quadrature cross-checks).
double chi(ChiProfile profile, double v);

// Fourier transform chi_hat(u) = int e^{-i u v} chi(v) dv. Real and even;
// chi_hat(0) = 1. Closed form per profile, series near removable points.
double chi_hat(ChiProfile profile, double u);

}  // namespace plasmitm
