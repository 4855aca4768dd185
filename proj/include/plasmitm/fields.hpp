#pragma once

#include <vector>

#include "plasmitm/oscint.hpp"
#include "plasmitm/physics.hpp"

namespace plasmitm {

// One term of the t = 2T decomposition at fixed (k, z), reported per unit
// k_x (the k_x factor is carried symbolically; the radial reduction restores
// angular factors analytically).
struct FieldComponent {
  enum class Tag { UnperturbedPole, UnperturbedBranch, P, S, F, M };
  Tag tag = Tag::P;
  double k = 0.0;
  double z = 0.0;
  double T = 0.0;
  Complex value{0.0, 0.0};
};

struct PerturbedComponents {
  Complex p{0.0, 0.0};
  Complex s{0.0, 0.0};
  Complex f{0.0, 0.0};
  Complex m{0.0, 0.0};
  Complex sum() const { return p + s + f + m; }
};

// A1 = c^2 mu0 U / (4 pi); A0 = 2 alpha (mu0 c^2)^2 U / (4 pi)^2.
double a1_prefactor(const PhysicalParams& p);
double a0_prefactor(const PhysicalParams& p);

// Pole part of the unperturbed surface field (per unit k_x, f_hat applied):
// 2 i A1 Im{G(T, z0, s+)}; requires u = k ell0 > u_c.
Complex unperturbed_pole_field(const PhysicalParams& p, const SourceConfig& src,
                               double T, double k);

// Branch-cut part: -2 i A1 Im{H(T, k, z0, 1)}.
Complex unperturbed_branch_field(const PhysicalParams& p,
                                 const SourceConfig& src, double T, double k,
                                 const QuadratureSpec& spec = {});

// The four t = 2T perturbed-wave terms (P, S, F, M) at (k, z); their sum is
// the full perturbed spectral field (asserted as a regression in tests).
PerturbedComponents perturbed_components(const PhysicalParams& p,
                                         const SourceConfig& src, double T,
                                         double k, double z,
                                         const QuadratureSpec& spec = {});

struct MixedWaveLocation {
  double radius = 0.0;        // stationary radius at the dominant wavenumber
  double radius_limit = 0.0;  // cT phi(w), the large-k limit
  double u_dominant = 0.0;    // wavenumber (k ell0) used for `radius`
};

// Localization radius of the mixed plasmonic-scattered wave at height w:
// the stationary-phase condition of cT/ell0 [(phi(w) - r/cT) u - eta sqrt(u-u_c)]
// gives r(u) = cT [phi(w) - eta/(2 sqrt(u - u_c))]; the envelope decays in u,
// so the band bottom of k_grid dominates.
MixedWaveLocation mixed_wave_locator(const PhysicalParams& p, double T,
                                     const std::vector<double>& k_grid,
                                     double w);

}  // namespace plasmitm
