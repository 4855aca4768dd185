#pragma once

#include <functional>
#include <vector>

#include "plasmitm/kernels.hpp"
#include "plasmitm/oscint.hpp"
#include "plasmitm/physics.hpp"

namespace plasmitm {

// Gridded functional J_{P/S}(r_i, z_j). Values are stored row-major with r
// varying fastest.
struct PsfField {
  std::vector<double> r;  // radial sample points (m)
  std::vector<double> z;  // heights (m)
  std::vector<double> values;
  enum class Kind { Plasmonic, Scattered } kind = Kind::Plasmonic;
  double normalization = 1.0;  // reference value used for value_normalized

  double at(size_t ir, size_t iz) const { return values[iz * r.size() + ir]; }
};

// J_P(r, z) = (1/(2 pi)^2) int_{xi k_c}^inf J(k r) K_P(k, z) k dk.
// The kernel's exponential decay in k provides the truncation bound.
double jp_exact(const PhysicalParams& p, const SourceConfig& src, double T,
                double r, double z, const QuadratureSpec& spec = {});

// Small-eta closed reduction: after k -> k/(z+z0) + xi k_c,
//   pref * int_0^inf e^{-k} J([k + zeta] r/(z+z0)) Q(z,k) dk,
// pref = (1/(2 pi)^2) pi^2 e^{-T/tau} e^{-(1+4(xi-1)u_c)(z+z0)/(4 ell0)} / (2 ell0 (z+z0)),
// Q = (k + xi u_c (z+z0)/ell0) / (k + (xi-1) u_c (z+z0)/ell0).
// Normalized consistently with jp_exact (the same (2 pi)^-2 convention).
double jp_asymptotic(const PhysicalParams& p, const SourceConfig& src, double T,
                     double r, double z, const QuadratureSpec& spec = {});

// J_S(r, z) = (1/(2 pi)^2) C(z) int_{xi k_c}^inf J(k r) B(k) dk with
// B = (cos(cTk dphi) - sin(cTk dphi) c tau k/phi(z)) / (1 + (c tau k/phi(z))^2).
// The conditionally convergent sine part is handled by the analytic split
// int_0^inf J0(kr) sin(Dk)/k dk = asin(min(|D|,r)/max(|D|,r)-style closed form.
double js_asymptotic(const PhysicalParams& p, const SourceConfig& src, double T,
                     double r, double z, const QuadratureSpec& spec = {});

// Finite-duration mirror: chi_hat(c dt k (phi(z)+phi(z0))) folded into the
// integrand. The transform's decay makes the sine part absolutely
// convergent, so no analytic split is needed; c dt below ~ell0/1e4 falls
// back to the unregularized form.
double js_regularized(const PhysicalParams& p, const SourceConfig& src, double T,
                      double r, double z, double dt, ChiProfile profile,
                      const QuadratureSpec& spec = {});

enum class PsfKind { Plasmonic, Scattered };

// E_z(2T) = A * horizontal Laplacian of J: evaluated spectrally (factor -k^2
// inside the radial integrand), A = -2 alpha sigma0 (mu0 c^2)^2 U/(4 pi)^2.
double ez_from_kernel(const PhysicalParams& p, const SourceConfig& src, double T,
                      double r, double z, PsfKind kind,
                      const QuadratureSpec& spec = {});

double amplitude_prefactor(const PhysicalParams& p);  // A above

struct ResolutionPredictors {
  double zeta = 0.0;          // xi u_c (z + z0) / ell0
  double horizontal_p = 0.0;  // z+z0 for zeta << 1, ell0 for zeta >> 1
  double horizontal_s = 0.0;  // ell0
  double vertical_s = 0.0;    // sqrt(z0^2 + 2 cT ell0) - z0
};

ResolutionPredictors resolution_predictors(const PhysicalParams& p,
                                           const SourceConfig& src, double T,
                                           double z);

// Finite-duration mirror. The exact path integrates the regularized kernel;
// dt << tau sqrt((z+z0)/ell0) leaves J_P essentially unchanged.
double jp_regularized(const PhysicalParams& p, const SourceConfig& src, double T,
                      double r, double z, double dt, ChiProfile profile,
                      const QuadratureSpec& spec = {});

// Large-dt closed reduction (loss of horizontal resolution to ell0 scale):
//   (1/(2 pi)^2) pi^2 tau^2 e^{-T/tau} e^{-(1+4 u_c)(z+z0)/(4 ell0)} / (2 ell0^2 dt^2)
//   * int_0^inf J([k (z+z0) tau^2/(ell0 dt^2) + xi u_c/ell0] r) chi_hat(2 sqrt(k)) dk.
double jp_regularized_large_dt(const PhysicalParams& p, const SourceConfig& src,
                               double T, double r, double z, double dt,
                               ChiProfile profile,
                               const QuadratureSpec& spec = {});

// Parallel grid evaluation; threads <= 0 selects hardware concurrency.
PsfField eval_grid(const std::function<double(double, double)>& f,
                   const std::vector<double>& r, const std::vector<double>& z,
                   PsfField::Kind kind, int threads);

}  // namespace plasmitm
