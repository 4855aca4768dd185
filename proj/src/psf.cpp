#include "plasmitm/psf.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "plasmitm/errors.hpp"

namespace plasmitm {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kInvFourPi2 = 1.0 / (4.0 * kPi * kPi);  // (2 pi)^{-2}

void check_source(const SourceConfig& src) {
  if (!(src.z0 > 0.0)) throw ConfigError("source z0 must be > 0");
  if (!(src.xi > 1.0)) throw ConfigError("source xi must be > 1");
}

// (1/(2pi)^2) int_{ua}^{ub} J(u r/ell0) w(u) u du / ell0^2 over u = k*ell0,
// phase-panelled against J's oscillation.
double radial_reduce(const PhysicalParams& p, double r, double ua, double ub,
                     const std::function<double(double)>& wk,
                     const QuadratureSpec& spec) {
  const double rr = r / p.ell0;
  auto f = [&](double u) -> Complex {
    return Complex(bessel_kernel(u * rr) * wk(u) * u, 0.0);
  };
  std::vector<double> pts = quad::phase_panels(
      ua, ub, [&](double) { return rr; }, std::max(0.5, (ub - ua) / 16.0));
  QuadratureSpec qs = spec;
  qs.abs_tol = std::max(qs.abs_tol, 1e-16);
  QuadResult res = quad::adaptive(f, pts, qs);
  return res.value.real() * kInvFourPi2 / (p.ell0 * p.ell0);
}

// closed form of int_0^inf J0(x r) sin(D x) dx / x  (Weber-Schafheitlin)
double sine_hankel_closed(double D, double r) {
  if (D == 0.0) return 0.0;
  if (r <= std::abs(D)) return (D > 0.0 ? 1.0 : -1.0) * 0.5 * kPi;
  return std::asin(D / r);
}

// Scattered-side integrand bookkeeping shared by js_asymptotic and the
// spectral Laplacian: B(u) = (cos(Du) - sin(Du) kap u)/(1 + kap^2 u^2).
struct ScatteredGeom {
  double a;    // lower edge xi*u_c
  double D;    // cT (phi(z)-phi(z0)) / ell0
  double kap;  // c tau / (phi(z) ell0)
  double rr;   // r / ell0
  Geometry g;
};

ScatteredGeom scattered_geom(const PhysicalParams& p, const SourceConfig& src,
                             double T, double r, double z) {
  check_source(src);
  const double cT = p.c() * T;
  GeometryFrame frame{T, z, src.z0, r};
  ScatteredGeom sg;
  sg.g = geometry(p, frame);
  sg.a = src.xi * critical_u(p.gamma);
  sg.D = cT * sg.g.delta_phi / p.ell0;
  sg.kap = p.c() * p.tau() / (sg.g.phi_z * p.ell0);
  sg.rr = r / p.ell0;
  return sg;
}

// March geometric/phase panels from x0 until bound(x) < target; integrates f.
double march_tail(const quad::CFunc& f, double x0, double osc_freq,
                  const std::function<double(double)>& tail_bound,
                  double target, const QuadratureSpec& qs) {
  double x = x0;
  double acc = 0.0;
  int guard = 0;
  while (guard++ < 100000) {
    if (tail_bound(x) < target) break;
    double step = std::max(0.5, 0.25 * x);
    if (osc_freq > 0.0)
      step = std::min(step, std::max(0.75 * kTwoPi / osc_freq, 0.125 * x));
    std::vector<double> seg{x, x + step};
    acc += quad::adaptive(f, seg, qs).value.real();
    x += step;
  }
  return acc;
}

}  // namespace

double amplitude_prefactor(const PhysicalParams& p) {
  const double mu0c2 = p.mu0() * p.c() * p.c();
  return -2.0 * p.raw.alpha * p.sigma0 * mu0c2 * mu0c2 * p.raw.U /
         (16.0 * kPi * kPi);
}

double jp_exact(const PhysicalParams& p, const SourceConfig& src, double T,
                double r, double z, const QuadratureSpec& spec) {
  check_source(src);
  const double uc = critical_u(p.gamma);
  const double rho = (z + src.z0) / p.ell0;
  const double ua = src.xi * uc;
  // e^{-(u-uc) rho} truncation: 48 e-folds past the lower edge
  const double ub = ua + std::max(48.0 / std::max(rho, 1e-3), 6.0);
  auto w = [&](double u) { return kernel_p_exact(p, T, u / p.ell0, z, src.z0); };
  return radial_reduce(p, r, ua, ub, w, spec);
}

double jp_asymptotic(const PhysicalParams& p, const SourceConfig& src, double T,
                     double r, double z, const QuadratureSpec& spec) {
  check_source(src);
  const double uc = critical_u(p.gamma);
  const double rho = (z + src.z0) / p.ell0;
  const double zeta = src.xi * uc * rho;
  const double cden = (src.xi - 1.0) * uc * rho;
  const double pref = kInvFourPi2 * kPi * kPi * std::exp(-T / p.tau()) *
                      std::exp(-(1.0 + 4.0 * (src.xi - 1.0) * uc) * rho / 4.0) /
                      (2.0 * p.ell0 * (z + src.z0));
  const double rr = r / (z + src.z0);
  auto f = [&](double k) -> Complex {
    const double q = (k + zeta) / (k + cden);
    return Complex(std::exp(-k) * bessel_kernel((k + zeta) * rr) * q, 0.0);
  };
  std::vector<double> pts =
      quad::phase_panels(0.0, 48.0, [&](double) { return rr; }, 3.0);
  QuadratureSpec qs = spec;
  qs.abs_tol = std::max(qs.abs_tol, 1e-16);
  QuadResult res = quad::adaptive(f, pts, qs);
  return pref * res.value.real();
}

double js_asymptotic(const PhysicalParams& p, const SourceConfig& src, double T,
                     double r, double z, const QuadratureSpec& spec) {
  const ScatteredGeom sg = scattered_geom(p, src, T, r, z);
  const double kap2 = sg.kap * sg.kap;

  QuadratureSpec qs = spec;
  qs.abs_tol = std::max(qs.abs_tol, 1e-14);

  // sine piece -J sin(Du) kap u/(1+kap^2 u^2) =
  //   -J sin(Du)/(kap u) + J sin(Du)/(kap u (1+kap^2 u^2)):
  // first term analytic over (0,inf) minus a finite correction on (0,a).
  double i1 = 0.0;
  if (sg.D != 0.0) {
    auto fin = [&](double u) -> Complex {
      const double su = (u < 1e-12) ? sg.D : std::sin(sg.D * u) / u;
      return Complex(bessel_j0(u * sg.rr) * su, 0.0);
    };
    std::vector<double> pts = quad::phase_panels(
        0.0, sg.a, [&](double) { return sg.rr + std::abs(sg.D); },
        std::max(sg.a / 8.0, 1e-3));
    const double corr = quad::adaptive(fin, pts, qs).value.real();
    i1 = -(kTwoPi / sg.kap) * (sine_hankel_closed(sg.D, sg.rr) - corr);
  }

  // remaining absolutely convergent part
  auto f23 = [&](double u) -> Complex {
    const double e = 1.0 / (1.0 + kap2 * u * u);
    const double v = bessel_kernel(u * sg.rr) *
                     (std::cos(sg.D * u) + std::sin(sg.D * u) / (sg.kap * u)) * e;
    return Complex(v, 0.0);
  };
  const double efreq = sg.rr + std::abs(sg.D);
  const double emin = std::abs(sg.rr - std::abs(sg.D));
  const double scale = kTwoPi / (kap2 * std::max(sg.a, 0.25));
  const double target =
      std::max({qs.abs_tol, 0.05 * qs.rel_tol * (std::abs(i1) + scale),
                1e-7 * scale});
  // J(u rr) cos(Du) splits into beats at rr ± |D|; bound each component by
  // min(envelope integral, one integration by parts), with the Bessel decay
  // folded in once u rr is in the asymptotic regime.
  auto bound = [&](double x) {
    const double bx = sg.rr * x;
    const double bes = (bx > 2.0) ? std::sqrt(2.0 / (kPi * bx)) : 1.0;
    const double env = kTwoPi / (kap2 * x) * bes;
    auto osc = [&](double e) {
      return (e > 1e-9) ? std::min(1.0, 2.0 / (e * x)) : 1.0;
    };
    return 0.5 * env * osc(emin) + 0.5 * env * osc(efreq);
  };
  const double i23 = march_tail(f23, sg.a, efreq, bound, target, qs);
  return sg.g.C * (i1 + i23) * kInvFourPi2 / p.ell0;
}

namespace {

// conservative envelope of |chi_hat| per profile
double chi_envelope(ChiProfile prof, double y) {
  y = std::abs(y);
  switch (prof) {
    case ChiProfile::Box:
      return std::min(1.0, 2.0 / std::max(y, 1e-300));
    case ChiProfile::Triangle:
      return std::min(1.0, 16.0 / std::max(y * y, 1e-300));
    case ChiProfile::RaisedCosine:
      // |4 pi^2 - y^2| >= y^2/2 beyond y = sqrt(2) 2 pi
      if (y > 17.8) return 16.0 * kPi * kPi / (y * y * y);
      return 1.0;
  }
  return 1.0;
}

// closed-form bound on int_x^inf chi_envelope(b u) du / u
double chi_envelope_log_tail(ChiProfile prof, double b, double x) {
  const double y = b * x;
  switch (prof) {
    case ChiProfile::Box:
      return (y < 2.0) ? std::log(2.0 / std::max(y, 1e-300)) + 1.0 : 2.0 / y;
    case ChiProfile::Triangle:
      return (y < 4.0) ? std::log(4.0 / std::max(y, 1e-300)) + 0.5
                       : 8.0 / (y * y);
    case ChiProfile::RaisedCosine: {
      const double c3 = 16.0 * kPi * kPi;
      return (y < 17.8) ? std::log(17.8 / std::max(y, 1e-300)) + 0.01
                        : c3 / (3.0 * y * y * y);
    }
  }
  return 1.0;
}

}  // namespace

double js_regularized(const PhysicalParams& p, const SourceConfig& src, double T,
                      double r, double z, double dt, ChiProfile profile,
                      const QuadratureSpec& spec) {
  if (!(dt >= 0.0)) throw ConfigError("dt must be >= 0");
  const ScatteredGeom sg = scattered_geom(p, src, T, r, z);
  // chi_hat argument per unit u: c dt (phi(z) + phi(z0)) / ell0
  const double b = p.c() * dt * (sg.g.phi_z + sg.g.phi_z0) / p.ell0;
  // negligible blurring across the whole dynamically relevant band
  if (b * (sg.a + 30.0 * sg.g.phi_z * p.eta) < 3e-3)
    return js_asymptotic(p, src, T, r, z, spec);

  const double kap2 = sg.kap * sg.kap;
  QuadratureSpec qs = spec;
  qs.abs_tol = std::max(qs.abs_tol, 1e-14);

  // original (unsplit) integrand times chi_hat; the transform's decay makes
  // the sine part absolutely convergent
  auto f = [&](double u) -> Complex {
    const double e = 1.0 / (1.0 + kap2 * u * u);
    const double br =
        (std::cos(sg.D * u) - std::sin(sg.D * u) * sg.kap * u) * e;
    return Complex(bessel_kernel(u * sg.rr) * br * chi_hat(profile, b * u), 0.0);
  };
  const double efreq = sg.rr + std::abs(sg.D) + b;
  const double emin = std::abs(sg.rr - std::abs(sg.D));
  const double scale = kTwoPi / (sg.kap * std::max(sg.a, 0.25));
  const double target = std::max({qs.abs_tol, 1e-6 * scale});
  auto bound = [&](double x) {
    const double bx = sg.rr * x;
    const double bes = (bx > 2.0) ? std::sqrt(2.0 / (kPi * bx)) : 1.0;
    // sine part: amplitude 2 pi |sin(Du)|/(kap u) chi_env, with the
    // closed-form envelope log-tail; cosine part decays like 1/u^2 outright
    const double sine_int = kTwoPi / sg.kap * std::min(1.0, std::abs(sg.D) * x) *
                            chi_envelope_log_tail(profile, b, x);
    const double cos_int =
        kTwoPi / (kap2 * x) * chi_envelope(profile, b * x);
    auto osc = [&](double e2) {
      return (e2 > 1e-9) ? std::min(1.0, 2.0 / (e2 * x)) : 1.0;
    };
    return (sine_int + cos_int) * bes *
           (0.5 * osc(emin) + 0.5 * osc(efreq));
  };
  const double total = march_tail(f, sg.a, efreq, bound, target, qs);
  return sg.g.C * total * kInvFourPi2 / p.ell0;
}

double ez_from_kernel(const PhysicalParams& p, const SourceConfig& src, double T,
                      double r, double z, PsfKind kind,
                      const QuadratureSpec& spec) {
  check_source(src);
  const double A = amplitude_prefactor(p);
  if (kind == PsfKind::Plasmonic) {
    const double uc = critical_u(p.gamma);
    const double rho = (z + src.z0) / p.ell0;
    const double ua = src.xi * uc;
    const double ub = ua + std::max(48.0 / std::max(rho, 1e-3), 6.0);
    auto w = [&](double u) {
      const double k = u / p.ell0;
      return -k * k * kernel_p_exact(p, T, k, z, src.z0);
    };
    return A * radial_reduce(p, r, ua, ub, w, spec);
  }

  // Scattered: split -u^2 B(u) so every improper piece has a closed form:
  //   -u^2 B(u) = [-cos(Du)/kap^2 + (u/kap) sin(Du)]        (wavefront terms)
  //               - sin(Du)/(kap^3 u)                        (sine transform)
  //               + cos(Du)/(kap^2 (1+kap^2 u^2))            (~1/u^2)
  //               + sin(Du)/(kap^3 u (1+kap^2 u^2))          (~1/u^3)
  const ScatteredGeom sg = scattered_geom(p, src, T, r, z);
  const double kap2 = sg.kap * sg.kap;
  const double kap3 = kap2 * sg.kap;
  const double aD = std::abs(sg.D);
  // the leading pieces form the scattered wavefront; keep clear of the caustic
  if (std::abs(sg.rr - aD) < 1e-3 * std::max(1.0, aD))
    throw NumericError("scattered E_z evaluated on the wavefront caustic");

  QuadratureSpec qs = spec;
  qs.abs_tol = std::max(qs.abs_tol, 1e-14);
  const auto corr_panels = [&]() {
    return quad::phase_panels(0.0, sg.a, [&](double) { return sg.rr + aD; },
                              std::max(sg.a / 8.0, 1e-3));
  };

  // closed forms over (0, inf), J = 2 pi J0:
  //   int J0(rr u) cos(Du) du   = 1/sqrt(rr^2-D^2)      (rr > |D|, else 0)
  //   int J0(rr u) u sin(Du) du = -D/(rr^2-D^2)^{3/2}   (rr > |D|, else 0)
  double lead = 0.0;
  if (sg.rr > aD) {
    const double s2 = sg.rr * sg.rr - sg.D * sg.D;
    const double ic = 1.0 / std::sqrt(s2);
    const double is = -sg.D / (s2 * std::sqrt(s2));
    lead = kTwoPi * (-ic / kap2 + is / sg.kap);
  }
  lead -= kTwoPi / kap3 * sine_hankel_closed(sg.D, sg.rr);
  // subtract the (0, a) part of all closed-form pieces (finite, numeric)
  auto flead = [&](double u) -> Complex {
    const double su = (u < 1e-12) ? sg.D : std::sin(sg.D * u) / u;
    const double v =
        bessel_kernel(u * sg.rr) * (-std::cos(sg.D * u) / kap2 +
                                    std::sin(sg.D * u) * u / sg.kap - su / kap3);
    return Complex(v, 0.0);
  };
  const double lead_corr = quad::adaptive(flead, corr_panels(), qs).value.real();

  // absolutely convergent remainder on (a, inf), envelope <= 4 pi/(kap2 u^2)
  auto frem = [&](double u) -> Complex {
    const double e = 1.0 / (1.0 + kap2 * u * u);
    const double v = bessel_kernel(u * sg.rr) * e *
                     (std::cos(sg.D * u) / kap2 + std::sin(sg.D * u) / (kap3 * u));
    return Complex(v, 0.0);
  };
  const double efreq = sg.rr + aD;
  const double emin = std::abs(sg.rr - aD);
  const double scale = kTwoPi / (kap3 * std::max(sg.a, 0.25));
  const double target = std::max({qs.abs_tol, 1e-6 * scale});
  auto bound = [&](double x) {
    const double bx = sg.rr * x;
    const double bes = (bx > 2.0) ? std::sqrt(2.0 / (kPi * bx)) : 1.0;
    const double env = 2.0 * kTwoPi / (kap2 * kap2 * x) * bes;
    auto osc = [&](double e) {
      return (e > 1e-9) ? std::min(1.0, 2.0 / (e * x)) : 1.0;
    };
    return 0.5 * env * osc(emin) + 0.5 * env * osc(efreq);
  };
  const double rem = march_tail(frem, sg.a, efreq, bound, target, qs);

  const double total = lead - lead_corr + rem;
  return A * sg.g.C * total * kInvFourPi2 / (p.ell0 * p.ell0 * p.ell0);
}

ResolutionPredictors resolution_predictors(const PhysicalParams& p,
                                           const SourceConfig& src, double T,
                                           double z) {
  check_source(src);
  const double cT = p.c() * T;
  if (!(cT > src.z0)) throw RegimeError("resolution predictors require cT > z0");
  ResolutionPredictors out;
  const double uc = critical_u(p.gamma);
  out.zeta = src.xi * uc * (z + src.z0) / p.ell0;
  out.horizontal_p = (out.zeta <= 1.0) ? (z + src.z0) : p.ell0;
  out.horizontal_s = p.ell0;
  out.vertical_s = std::sqrt(src.z0 * src.z0 + 2.0 * cT * p.ell0) - src.z0;
  return out;
}

double jp_regularized(const PhysicalParams& p, const SourceConfig& src, double T,
                      double r, double z, double dt, ChiProfile profile,
                      const QuadratureSpec& spec) {
  check_source(src);
  if (!(dt >= 0.0)) throw ConfigError("dt must be >= 0");
  const double uc = critical_u(p.gamma);
  const double rho = (z + src.z0) / p.ell0;
  const double ua = src.xi * uc;
  const double ub = ua + std::max(48.0 / std::max(rho, 1e-3), 6.0);
  auto w = [&](double u) {
    return kernel_p_regularized(p, T, u / p.ell0, z, src.z0, dt, profile);
  };
  return radial_reduce(p, r, ua, ub, w, spec);
}

double jp_regularized_large_dt(const PhysicalParams& p, const SourceConfig& src,
                               double T, double r, double z, double dt,
                               ChiProfile profile, const QuadratureSpec& spec) {
  check_source(src);
  if (!(dt > 0.0)) throw ConfigError("large-dt form requires dt > 0");
  if (profile != ChiProfile::RaisedCosine)
    throw ConfigError("the large-dt reduction needs chi_hat(2 sqrt(k)) "
                      "integrable; only raised_cosine qualifies -- use the "
                      "exact path for box/triangle");
  const double uc = critical_u(p.gamma);
  const double rho = (z + src.z0) / p.ell0;
  const double tau = p.tau();
  const double pref = kInvFourPi2 * kPi * kPi * tau * tau * std::exp(-T / tau) *
                      std::exp(-(1.0 + 4.0 * uc) * rho / 4.0) /
                      (2.0 * p.ell0 * p.ell0 * dt * dt);
  const double slope = rho * tau * tau / (dt * dt);  // dimensionless
  const double rr = r / p.ell0;
  auto f = [&](double k) -> Complex {
    const double arg = (k * slope + src.xi * uc) * rr;
    return Complex(bessel_kernel(arg) * chi_hat(profile, 2.0 * std::sqrt(k)),
                   0.0);
  };
  // chi_hat(2 sqrt(k)) ~ k^{-3/2} for the smooth profiles
  const double kmax = 1e6;
  auto freq = [&](double) { return slope * rr; };
  std::vector<double> pts;
  double x = 0.0, st = 0.25;
  while (x < kmax) {
    pts.push_back(x);
    double w = std::max(st, 0.2 * x);
    const double fr = freq(x);
    if (fr > 0.0) w = std::min(w, std::max(0.75 * kTwoPi / fr, 0.1 * x));
    x += w;
  }
  pts.push_back(kmax);
  QuadratureSpec qs = spec;
  qs.abs_tol = std::max(qs.abs_tol, 1e-12);
  QuadResult res = quad::adaptive(f, pts, qs);
  return pref * res.value.real();
}

PsfField eval_grid(const std::function<double(double, double)>& f,
                   const std::vector<double>& r, const std::vector<double>& z,
                   PsfField::Kind kind, int threads) {
  PsfField field;
  field.r = r;
  field.z = z;
  field.kind = kind;
  field.values.assign(r.size() * z.size(), 0.0);

  int n = threads > 0 ? threads
                      : static_cast<int>(std::thread::hardware_concurrency());
  n = std::max(1, std::min<int>(n, static_cast<int>(z.size())));

  std::atomic<size_t> next_row{0};
  std::atomic<bool> failed{false};
  auto worker = [&]() {
    for (;;) {
      const size_t iz = next_row.fetch_add(1);
      if (iz >= field.z.size() || failed.load()) return;
      try {
        for (size_t ir = 0; ir < field.r.size(); ++ir)
          field.values[iz * field.r.size() + ir] = f(field.r[ir], field.z[iz]);
      } catch (...) {
        failed.store(true);
        throw;
      }
    }
  };
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n);
    std::vector<std::exception_ptr> errs(n);
    for (int i = 0; i < n; ++i)
      pool.emplace_back([&, i]() {
        try {
          worker();
        } catch (...) {
          errs[i] = std::current_exception();
        }
      });
    for (auto& t : pool) t.join();
    for (auto& e : errs)
      if (e) std::rethrow_exception(e);
  }
  return field;
}

}  // namespace plasmitm
