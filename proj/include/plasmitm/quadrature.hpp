#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace plasmitm {

// Tolerances and budgets shared by all integrals.
struct QuadratureSpec {
  double rel_tol = 1e-8;
  double abs_tol = 0.0;        // absolute floor added to the target
  int max_subdivisions = 4000;
};

struct QuadResult {
  std::complex<double> value{0.0, 0.0};
  double error = 0.0;  // accumulated estimate
  int evaluations = 0;
  bool converged = false;
};

namespace quad {

using CFunc = std::function<std::complex<double>(double)>;

// One 15-point Gauss-Kronrod panel on [a, b]; err is the embedded G7/K15
// difference estimate.
std::complex<double> gk15(const CFunc& f, double a, double b, double* err,
                          int* evals);

// Adaptive bisection over an initial breakpoint list. Throws QuadratureError
// (carrying the partial value and estimate) if the subdivision budget is
// exhausted before the target max(abs_tol, rel_tol*|value|) is met.
QuadResult adaptive(const CFunc& f, const std::vector<double>& breakpoints,
                    const QuadratureSpec& spec);

// Breakpoints on [a, b] sized against a local oscillation frequency:
// panel width <= periods_per_panel * 2 pi / |freq(x)|, capped by max_width.
// freq may vanish (stationary points); the cap takes over there.
std::vector<double> phase_panels(double a, double b,
                                 const std::function<double(double)>& freq,
                                 double max_width,
                                 double periods_per_panel = 0.75);

}  // namespace quad
}  // namespace plasmitm
