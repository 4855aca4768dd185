#pragma once

#include <cmath>
#include <complex>

#include "plasmitm/physics.hpp"

// Scale-free parameter set used throughout the tests: ell0 = 1, tau = 10,
// c = 1, eta = 0.1, gamma = 0.99. Time unit: tau = 10, so T = tau means 10.
inline plasmitm::PhysicalParams unit_params(double eta = 0.1) {
  plasmitm::RawParams raw;
  raw.c = 1.0;
  raw.mu0 = 1.0;
  raw.tau = 10.0;
  raw.D0 = 2.0 * eta / (raw.mu0 * raw.c) / raw.tau;  // sigma0 = 2 eta
  raw.U = 1.0;
  raw.alpha = 1.0;
  return plasmitm::derive_params(raw);
}

inline double rel_err(double a, double b) {
  return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}

inline double rel_err(std::complex<double> a, std::complex<double> b) {
  return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}

// u_c(0.99) to full precision, shared by several tests
inline constexpr double kUc099 = 0.24504903356934457;
