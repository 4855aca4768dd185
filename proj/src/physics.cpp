#include "plasmitm/physics.hpp"

#include <cmath>

#include "plasmitm/errors.hpp"

namespace plasmitm {

PhysicalParams derive_params(const RawParams& raw, bool allow_gamma_nonpositive) {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v))
      throw ConfigError(std::string("parameter '") + name +
                        "' must be strictly positive and finite");
  };
  positive(raw.D0, "D0");
  positive(raw.tau, "tau");
  positive(raw.c, "c");
  positive(raw.mu0, "mu0");
  positive(raw.U, "U");
  if (!std::isfinite(raw.alpha)) throw ConfigError("parameter 'alpha' must be finite");

  PhysicalParams p;
  p.raw = raw;
  p.sigma0 = raw.D0 * raw.tau;
  p.eta = 0.5 * raw.mu0 * p.sigma0 * raw.c;
  p.ell0 = p.eta * raw.c * raw.tau;
  p.gamma = 1.0 - p.eta * p.eta;
  if (p.gamma <= 0.0 && !allow_gamma_nonpositive)
    throw RegimeError("eta = " + std::to_string(p.eta) +
                      " >= 1 gives gamma <= 0, outside the propagating-mode "
                      "regime (pass the explicit override to proceed)");
  return p;
}

Complex conductivity(const PhysicalParams& p, Complex omega) {
  const Complex den = 1.0 + Complex(0.0, 1.0) * omega * p.tau();
  if (std::abs(den) < 1e-300)
    throw RegimeError("conductivity pole at omega = i/tau");
  return p.sigma0 / den;
}

Complex transmission(const PhysicalParams& p, Complex omega, Complex kz) {
  if (omega == Complex(0.0, 0.0))
    throw RegimeError("transmission undefined at omega = 0");
  const Complex den =
      1.0 - p.mu0() * conductivity(p, omega) * kz * p.c() * p.c() / (2.0 * omega);
  const double aden = std::abs(den);
  if (aden < 1e-300) throw RegimeError("transmission evaluated at a plasmon pole");
  const Complex t = 1.0 / den;
  if (!std::isfinite(t.real()) || !std::isfinite(t.imag()))
    throw NumericError("transmission overflow");
  return t;
}

Complex beta(const PhysicalParams& p, Complex omega, double k) {
  const double c = p.c();
  const Complex b2 = omega * omega / (c * c) - Complex(k * k, 0.0);
  if (omega.imag() == 0.0) {
    const double w = omega.real();
    const double b2r = w * w / (c * c) - k * k;
    if (b2r >= 0.0) {
      // on the branch cut: limit from below the real omega axis
      const double s = (w >= 0.0) ? -1.0 : 1.0;
      return Complex(s * std::sqrt(b2r), 0.0);
    }
    return Complex(0.0, std::sqrt(-b2r));
  }
  Complex r = std::sqrt(b2);
  if (r.imag() < 0.0) r = -r;
  return r;
}

}  // namespace plasmitm
