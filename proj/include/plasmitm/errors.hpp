#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace plasmitm {

// Error hierarchy. The CLI maps these onto exit codes:
//   ConfigError -> 2, RegimeError -> 3, NumericError -> 4.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class ConfigError : public Error {
public:
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

// Inputs outside the physical regime handled by the main pipeline
// (e.g. eta >= 1, wavenumber below the plasmonic cutoff).
class RegimeError : public Error {
public:
  explicit RegimeError(const std::string& msg) : Error(msg) {}
};

class NoPropagatingModeError : public RegimeError {
public:
  NoPropagatingModeError(double u, double u_c)
      : RegimeError("no propagating plasmonic mode: u = " + std::to_string(u) +
                    " <= u_c = " + std::to_string(u_c)),
        u_(u), u_c_(u_c) {}
  double u() const { return u_; }
  double u_c() const { return u_c_; }

private:
  double u_, u_c_;
};

class NumericError : public Error {
public:
  explicit NumericError(const std::string& msg) : Error(msg) {}
};

// Quadrature failed to reach the requested tolerance. Carries the partial
// value and the error estimate at the point of giving up.
class QuadratureError : public NumericError {
public:
  QuadratureError(const std::string& msg, std::complex<double> partial,
                  double estimate)
      : NumericError(msg + " (partial = (" + std::to_string(partial.real()) +
                     "," + std::to_string(partial.imag()) +
                     "), est = " + std::to_string(estimate) + ")"),
        partial_(partial), estimate_(estimate) {}
  std::complex<double> partial() const { return partial_; }
  double estimate() const { return estimate_; }

private:
  std::complex<double> partial_;
  double estimate_;
};

}  // namespace plasmitm
