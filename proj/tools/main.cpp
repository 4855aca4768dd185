// plasmitm command line: dispersion scans, kernels, point-spread functionals
// and figure-reproduction pipelines on top of the plasmitm library.

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "plasmitm/config.hpp"
#include "plasmitm/csv.hpp"
#include "plasmitm/dispersion.hpp"
#include "plasmitm/errors.hpp"
#include "plasmitm/fields.hpp"
#include "plasmitm/kernels.hpp"
#include "plasmitm/oscint.hpp"
#include "plasmitm/physics.hpp"
#include "plasmitm/psf.hpp"

namespace fs = std::filesystem;
using namespace plasmitm;

namespace {

struct GlobalOpts {
  std::string config_path;
  std::string out_dir = ".";
  int threads = 0;
  double quad_rel_tol = 0.0;  // 0 = keep config value
};

RunConfig make_config(const GlobalOpts& g) {
  RunConfig cfg = g.config_path.empty() ? default_config() : load_config(g.config_path);
  if (g.quad_rel_tol > 0.0) cfg.quad.rel_tol = g.quad_rel_tol;
  return cfg;
}

std::string out_path(const GlobalOpts& g, const std::string& name) {
  fs::create_directories(g.out_dir);
  return (fs::path(g.out_dir) / name).string();
}

// the rounded parameter set used by the figure pipelines: eta = 0.1 exactly
RunConfig figure_config(const GlobalOpts& g) {
  RunConfig cfg = make_config(g);
  cfg.raw.tau = 1.0e-13;
  cfg.raw.c = 1.5e8;
  cfg.raw.mu0 = 4.0e-7 * 3.141592653589793238462643383279502884;
  const double sigma0 = 2.0 * 0.1 / (cfg.raw.mu0 * cfg.raw.c);
  cfg.raw.D0 = sigma0 / cfg.raw.tau;
  return cfg;
}

std::vector<double> logspace(double a, double b, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i)
    v[i] = a * std::pow(b / a, n > 1 ? double(i) / (n - 1) : 0.0);
  return v;
}

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i)
    v[i] = a + (b - a) * (n > 1 ? double(i) / (n - 1) : 0.0);
  return v;
}

int cmd_params(const GlobalOpts& g) {
  RunConfig cfg = make_config(g);
  const PhysicalParams p = cfg.params();
  const double uc = critical_u(p.gamma);
  std::printf("sigma0 = %.17g S\n", p.sigma0);
  std::printf("eta    = %.17g\n", p.eta);
  std::printf("gamma  = %.17g\n", p.gamma);
  std::printf("ell0   = %.17g m\n", p.ell0);
  std::printf("u_c    = %.17g\n", uc);
  std::printf("k_c    = %.17g 1/m\n", uc / p.ell0);
  std::printf("config_hash = %s\n", config_hash(cfg).c_str());
  return 0;
}

void write_dispersion_scan(const RunConfig& cfg, double gamma, double u_max,
                           int nu, const std::string& path) {
  const double uc = critical_u(gamma);
  CsvWriter csv(path, cfg,
                {"u", "re_s_plus", "im_s_plus", "re_s_plus_asym",
                 "im_s_plus_asym", "residual"});
  try {
    for (double u : logspace(1.02 * uc, u_max, nu)) {
      const DispersionRoots roots = solve_dispersion(gamma, u);
      const Complex sa = asymptotic_root(gamma, u);
      const double res =
          *std::max_element(roots.residuals.begin(), roots.residuals.end());
      csv.row({u, roots.s_plus.real(), roots.s_plus.imag(), sa.real(),
               sa.imag(), res});
    }
  } catch (...) {
    csv.discard();
    throw;
  }
}

int cmd_dispersion_scan(const GlobalOpts& g, double gamma, double u_max, int nu) {
  RunConfig cfg = make_config(g);
  const double gm = gamma > 0.0 ? gamma : cfg.params().gamma;
  write_dispersion_scan(cfg, gm, u_max, nu, out_path(g, "dispersion_scan.csv"));
  return 0;
}

int cmd_kernel(const GlobalOpts& g, double u_max, int nk, double z_over_l0) {
  RunConfig cfg = make_config(g);
  const PhysicalParams p = cfg.params();
  const double uc = critical_u(p.gamma);
  const double z0 = cfg.source.z0;
  const double z = z_over_l0 >= 0.0 ? z_over_l0 * p.ell0 : z0;
  const double T = cfg.mirror.T;
  const bool reg = cfg.mirror.dt > 0.0;

  std::vector<std::string> cols = {"k", "K_P_exact", "K_P_asym", "K_S"};
  if (reg) {
    cols.push_back("K_P_reg");
    cols.push_back("K_S_reg");
  }
  CsvWriter csv(out_path(g, "kernel.csv"), cfg, cols);
  try {
    for (double u : logspace(cfg.source.xi * uc * 1.0001, u_max, nk)) {
      const double k = u / p.ell0;
      std::vector<double> row = {
          k, kernel_p_exact(p, T, k, z, z0), kernel_p_asymptotic(p, T, k, z, z0),
          kernel_s(p, T, k, z, z0, KernelMethod::Exact, cfg.quad)};
      if (reg) {
        row.push_back(kernel_p_regularized(p, T, k, z, z0, cfg.mirror.dt,
                                           cfg.mirror.chi_profile));
        row.push_back(kernel_s_regularized(p, T, k, z, z0, cfg.mirror.dt,
                                           cfg.mirror.chi_profile,
                                           KernelMethod::Exact, cfg.quad));
      }
      csv.row(row);
    }
  } catch (...) {
    csv.discard();
    throw;
  }
  return 0;
}

int cmd_psf_plasmon(const GlobalOpts& g, double zeta, double reg_dt) {
  RunConfig cfg = make_config(g);
  PhysicalParams p = cfg.params();
  SourceConfig src = cfg.source;
  double z = 0.0;
  if (zeta > 0.0) {
    // zeta fixes z + z0 = zeta*ell0/(xi*u_c); place the probe at z = 0
    const double uc = critical_u(p.gamma);
    src.z0 = zeta * p.ell0 / (src.xi * uc);
  }
  const double T = cfg.mirror.T;
  const std::vector<double> rr =
      linspace(0.0, cfg.grid.r_max_over_l0 * p.ell0, cfg.grid.nr);

  auto f = [&](double r, double) {
    return reg_dt > 0.0
               ? jp_regularized(p, src, T, r, z, reg_dt, cfg.mirror.chi_profile,
                                cfg.quad)
               : jp_exact(p, src, T, r, z, cfg.quad);
  };
  PsfField field =
      eval_grid(f, rr, {z}, PsfField::Kind::Plasmonic, g.threads);
  const double norm = field.values.front();

  CsvWriter csv(out_path(g, "psf_plasmon.csv"), cfg,
                {"r", "z", "value", "value_normalized"});
  try {
    for (size_t i = 0; i < rr.size(); ++i)
      csv.row({rr[i], z, field.values[i], field.values[i] / norm});
  } catch (...) {
    csv.discard();
    throw;
  }
  return 0;
}

int cmd_psf_scattered(const GlobalOpts& g, double reg_dt) {
  RunConfig cfg = make_config(g);
  const PhysicalParams p = cfg.params();
  const SourceConfig src = cfg.source;
  const double T = cfg.mirror.T;
  const double zmax = cfg.grid.z_max > 0.0 ? cfg.grid.z_max : 2.0 * src.z0;
  const std::vector<double> rr =
      linspace(0.0, cfg.grid.r_max_over_l0 * p.ell0, cfg.grid.nr);
  const std::vector<double> zz =
      linspace(zmax / cfg.grid.nz, zmax, cfg.grid.nz);

  auto f = [&](double r, double z) {
    return reg_dt > 0.0
               ? js_regularized(p, src, T, r, z, reg_dt,
                                cfg.mirror.chi_profile, cfg.quad)
               : js_asymptotic(p, src, T, r, z, cfg.quad);
  };
  PsfField field = eval_grid(f, rr, zz, PsfField::Kind::Scattered, g.threads);
  double peak = 0.0;
  for (double v : field.values) peak = std::max(peak, std::abs(v));

  CsvWriter csv(out_path(g, "psf_scattered.csv"), cfg,
                {"r", "z", "value", "value_normalized"});
  try {
    for (size_t iz = 0; iz < zz.size(); ++iz)
      for (size_t ir = 0; ir < rr.size(); ++ir)
        csv.row({rr[ir], zz[iz], field.at(ir, iz), field.at(ir, iz) / peak});
  } catch (...) {
    csv.discard();
    throw;
  }
  return 0;
}

int cmd_field_decompose(const GlobalOpts& g, double u_max, int nk,
                        double z_over_l0) {
  RunConfig cfg = make_config(g);
  const PhysicalParams p = cfg.params();
  const double uc = critical_u(p.gamma);
  const double z = z_over_l0 >= 0.0 ? z_over_l0 * p.ell0 : cfg.source.z0;
  const double T = cfg.mirror.T;

  CsvWriter csv(out_path(g, "field_decompose.csv"), cfg,
                {"k", "re_pole0", "im_pole0", "re_branch0", "im_branch0",
                 "re_P", "im_P", "re_S", "im_S", "re_F", "im_F", "re_M",
                 "im_M"});
  try {
    for (double u : logspace(cfg.source.xi * uc * 1.0001, u_max, nk)) {
      const double k = u / p.ell0;
      const Complex e0p = unperturbed_pole_field(p, cfg.source, T, k);
      const Complex e0s = unperturbed_branch_field(p, cfg.source, T, k, cfg.quad);
      const PerturbedComponents pc =
          perturbed_components(p, cfg.source, T, k, z, cfg.quad);
      csv.row({k, e0p.real(), e0p.imag(), e0s.real(), e0s.imag(), pc.p.real(),
               pc.p.imag(), pc.s.real(), pc.s.imag(), pc.f.real(), pc.f.imag(),
               pc.m.real(), pc.m.imag()});
    }
  } catch (...) {
    csv.discard();
    throw;
  }
  return 0;
}

void write_gnuplot_stub(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  out << "# gnuplot script stub; run: gnuplot " << fs::path(path).filename().string()
      << "\n" << body;
}

int cmd_figure(const GlobalOpts& g, int which) {
  RunConfig cfg = figure_config(g);

  if (which == 3) {
    for (double gamma : {0.9, 0.99}) {
      char name[64];
      std::snprintf(name, sizeof name, "figure3_gamma_%g.csv", gamma);
      write_dispersion_scan(cfg, gamma, 10.0, 200, out_path(g, name));
    }
    write_gnuplot_stub(
        out_path(g, "figure3.gp"),
        "set datafile separator ','\n"
        "set key left\n"
        "plot 'figure3_gamma_0.99.csv' u 1:2 w l t 'Re s+ exact', \\\n"
        "     '' u 1:4 w p pt 6 t 'Re s+ asym', \\\n"
        "     '' u 1:3 w l t 'Im s+ exact', \\\n"
        "     '' u 1:5 w p pt 7 t 'Im s+ asym'\n");
    return 0;
  }

  if (which == 1) {
    const PhysicalParams p = cfg.params();
    const double uc = critical_u(p.gamma);
    const double T = p.tau();  // kernel prefactor e^{-T/tau} cancels in the
                               // normalized profiles; T = tau by convention
    for (double zeta : {0.1, 0.2, 2.0, 10.0, 20.0}) {
      SourceConfig src = cfg.source;
      src.z0 = zeta * p.ell0 / (src.xi * uc);
      const double z = 0.0;
      const std::vector<double> rr = linspace(0.0, 40.0 * p.ell0, cfg.grid.nr);
      auto fe = [&](double r, double) { return jp_exact(p, src, T, r, z, cfg.quad); };
      auto fa = [&](double r, double) {
        return jp_asymptotic(p, src, T, r, z, cfg.quad);
      };
      PsfField exact = eval_grid(fe, rr, {z}, PsfField::Kind::Plasmonic, g.threads);
      PsfField asym = eval_grid(fa, rr, {z}, PsfField::Kind::Plasmonic, g.threads);
      const double n_ex = exact.values.front();
      const double n_as = asym.values.front();
      char name[64];
      std::snprintf(name, sizeof name, "figure1_zeta_%g.csv", zeta);
      CsvWriter csv(out_path(g, name), cfg,
                    {"r_over_l0", "jp_exact_norm", "jp_asym_norm"});
      for (size_t i = 0; i < rr.size(); ++i)
        csv.row({rr[i] / p.ell0, exact.values[i] / n_ex, asym.values[i] / n_as});
    }
    write_gnuplot_stub(
        out_path(g, "figure1.gp"),
        "set datafile separator ','\n"
        "plot 'figure1_zeta_0.1.csv' u 1:2 w l t 'zeta=0.1 exact', \\\n"
        "     '' u 1:3 every 5 w p pt 6 t 'zeta=0.1 asym', \\\n"
        "     'figure1_zeta_10.csv' u 1:2 w l t 'zeta=10 exact', \\\n"
        "     '' u 1:3 every 5 w p pt 7 t 'zeta=10 asym'\n");
    return 0;
  }

  if (which == 2) {
    const PhysicalParams p = cfg.params();
    for (double a : {5.0, 15.0}) {
      RunConfig c2 = cfg;
      c2.source.z0 = 10.0 * p.ell0;
      c2.mirror.T = a * c2.source.z0 / p.c();
      c2.grid.r_max_over_l0 = 10.0;
      // reuse the scattered-psf writer on this parameter set
      const double zmax = 2.0 * c2.source.z0;
      const std::vector<double> rr =
          linspace(0.0, c2.grid.r_max_over_l0 * p.ell0, c2.grid.nr);
      const std::vector<double> zz = linspace(zmax / c2.grid.nz, zmax, c2.grid.nz);
      auto f = [&](double r, double z) {
        return js_asymptotic(p, c2.source, c2.mirror.T, r, z, c2.quad);
      };
      PsfField field = eval_grid(f, rr, zz, PsfField::Kind::Scattered, g.threads);
      double peak = 0.0;
      for (double v : field.values) peak = std::max(peak, std::abs(v));
      char name[64];
      std::snprintf(name, sizeof name, "figure2_cT_%gz0.csv", a);
      CsvWriter csv(out_path(g, name), c2,
                    {"r_over_l0", "z_over_l0", "abs_value_normalized"});
      for (size_t iz = 0; iz < zz.size(); ++iz)
        for (size_t ir = 0; ir < rr.size(); ++ir)
          csv.row({rr[ir] / p.ell0, zz[iz] / p.ell0,
                   std::abs(field.at(ir, iz)) / peak});
    }
    write_gnuplot_stub(out_path(g, "figure2.gp"),
                       "set datafile separator ','\n"
                       "set view map\n"
                       "splot 'figure2_cT_5z0.csv' u 1:2:3 w pm3d\n");
    return 0;
  }

  throw ConfigError("figure must be 1, 2 or 3");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"surface-plasmon instantaneous-time-mirror analysis"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  app.add_option("--config", g.config_path, "key = value configuration file");
  app.add_option("--out", g.out_dir, "output directory (default .)");
  app.add_option("--threads", g.threads, "worker threads (0 = hardware)");
  app.add_option("--quad-rel-tol", g.quad_rel_tol,
                 "override quadrature relative tolerance");

  auto* sc_params = app.add_subcommand("params", "echo derived parameters");

  double gamma = -1.0, u_max = 10.0, z_over_l0 = -1.0, zeta = -1.0, reg_dt = 0.0;
  int nu = 200, nk = 100;
  auto* sc_disp = app.add_subcommand("dispersion-scan", "root curves vs u");
  sc_disp->add_option("--gamma", gamma, "override gamma (default: derived)");
  sc_disp->add_option("--u-max", u_max, "upper end of the u grid");
  sc_disp->add_option("--nu", nu, "number of grid points");

  auto* sc_kernel = app.add_subcommand("kernel", "kernel CSV over a k grid");
  sc_kernel->add_option("--u-max", u_max, "upper end of the u grid");
  sc_kernel->add_option("--nk", nk, "number of grid points");
  sc_kernel->add_option("--z-over-l0", z_over_l0, "field height (default z0)");

  auto* sc_psf_p = app.add_subcommand("psf-plasmon", "plasmonic functional");
  sc_psf_p->add_option("--zeta", zeta, "select z0 from zeta (z = 0)");
  sc_psf_p->add_option("--regularized", reg_dt, "mirror duration dt (s)");

  auto* sc_psf_s = app.add_subcommand("psf-scattered", "scattered functional");
  sc_psf_s->add_option("--regularized", reg_dt, "mirror duration dt (s)");

  auto* sc_field = app.add_subcommand("field-decompose", "t = 2T components");
  sc_field->add_option("--u-max", u_max, "upper end of the u grid");
  sc_field->add_option("--nk", nk, "number of grid points");
  sc_field->add_option("--z-over-l0", z_over_l0, "field height (default z0)");

  int fig = 0;
  auto* sc_figure = app.add_subcommand("figure", "figure pipelines");
  sc_figure->add_option("which", fig, "figure index")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (sc_params->parsed()) return cmd_params(g);
    if (sc_disp->parsed()) return cmd_dispersion_scan(g, gamma, u_max, nu);
    if (sc_kernel->parsed()) return cmd_kernel(g, u_max, nk, z_over_l0);
    if (sc_psf_p->parsed()) return cmd_psf_plasmon(g, zeta, reg_dt);
    if (sc_psf_s->parsed()) return cmd_psf_scattered(g, reg_dt);
    if (sc_field->parsed()) return cmd_field_decompose(g, u_max, nk, z_over_l0);
    if (sc_figure->parsed()) return cmd_figure(g, fig);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const RegimeError& e) {
    std::cerr << "regime error: " << e.what() << "\n";
    return 3;
  } catch (const NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return 4;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
