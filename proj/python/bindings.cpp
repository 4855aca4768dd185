// pybind11 surface for the plasmitm core: parameter derivation, dispersion
// roots, the branch-cut integral, kernels and point-spread functionals.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "plasmitm/config.hpp"
#include "plasmitm/dispersion.hpp"
#include "plasmitm/errors.hpp"
#include "plasmitm/fields.hpp"
#include "plasmitm/kernels.hpp"
#include "plasmitm/oscint.hpp"
#include "plasmitm/physics.hpp"
#include "plasmitm/psf.hpp"
#include "plasmitm/specfun.hpp"

namespace py = pybind11;
using namespace plasmitm;

namespace {

void register_exceptions(py::module_& m) {
  static py::exception<ConfigError> exc_config(m, "ConfigError");
  static py::exception<RegimeError> exc_regime(m, "RegimeError");
  static py::exception<NumericError> exc_numeric(m, "NumericError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ConfigError& e) {
      exc_config(e.what());
    } catch (const RegimeError& e) {
      exc_regime(e.what());
    } catch (const NumericError& e) {
      exc_numeric(e.what());
    }
  });
}

}  // namespace

PYBIND11_MODULE(_plasmitm, m) {
  m.doc() = "time-mirrored surface-plasmon refocusing: dispersion roots, "
            "kernels and point-spread functionals";
  register_exceptions(m);

  py::class_<RawParams>(m, "RawParams")
      .def(py::init<>())
      .def_readwrite("D0", &RawParams::D0, "Drude weight (S/s)")
      .def_readwrite("tau", &RawParams::tau, "relaxation time (s)")
      .def_readwrite("c", &RawParams::c, "background light speed (m/s)")
      .def_readwrite("mu0", &RawParams::mu0, "permeability (H/m)")
      .def_readwrite("U", &RawParams::U, "pulse amplitude (A m s)")
      .def_readwrite("alpha", &RawParams::alpha, "mirror strength (s)");

  py::class_<PhysicalParams>(m, "PhysicalParams")
      .def_readonly("raw", &PhysicalParams::raw)
      .def_readonly("sigma0", &PhysicalParams::sigma0, "sheet conductance (S)")
      .def_readonly("eta", &PhysicalParams::eta)
      .def_readonly("ell0", &PhysicalParams::ell0, "attenuation length (m)")
      .def_readonly("gamma", &PhysicalParams::gamma);

  py::class_<SourceConfig>(m, "SourceConfig")
      .def(py::init<>())
      .def_readwrite("z0", &SourceConfig::z0, "source height (m)")
      .def_readwrite("xi", &SourceConfig::xi, "spectral cutoff multiplier");

  py::class_<QuadratureSpec>(m, "QuadratureSpec")
      .def(py::init<>())
      .def_readwrite("rel_tol", &QuadratureSpec::rel_tol)
      .def_readwrite("abs_tol", &QuadratureSpec::abs_tol)
      .def_readwrite("max_subdivisions", &QuadratureSpec::max_subdivisions);

  m.def("derive_params", &derive_params, py::arg("raw"),
        py::arg("allow_gamma_nonpositive") = false,
        "derive (sigma0, eta, ell0, gamma) and validate the regime");
  m.def("conductivity", &conductivity, py::arg("params"), py::arg("omega"));
  m.def("transmission", &transmission, py::arg("params"), py::arg("omega"),
        py::arg("kz"));
  m.def("beta", &beta, py::arg("params"), py::arg("omega"), py::arg("k"),
        "vertical wavenumber, Im >= 0 branch with the below-axis cut limit");

  m.def("critical_u", &critical_u, py::arg("gamma"));
  m.def("discriminant", &discriminant, py::arg("gamma"), py::arg("u"));
  py::class_<DispersionRoots>(m, "DispersionRoots")
      .def_readonly("u", &DispersionRoots::u)
      .def_readonly("gamma", &DispersionRoots::gamma)
      .def_readonly("s_plus", &DispersionRoots::s_plus)
      .def_readonly("s_minus", &DispersionRoots::s_minus)
      .def_readonly("r_pos", &DispersionRoots::r_pos)
      .def_readonly("r_neg", &DispersionRoots::r_neg)
      .def_readonly("residuals", &DispersionRoots::residuals)
      .def_readonly("near_degenerate", &DispersionRoots::near_degenerate);
  m.def(
      "solve_dispersion",
      [](double gamma, double u) { return solve_dispersion(gamma, u); },
      py::arg("gamma"), py::arg("u"));
  m.def("asymptotic_root", &asymptotic_root, py::arg("gamma"), py::arg("u"));
  m.def(
      "pprime",
      [](const PhysicalParams& p, Complex s) { return pprime(p, s); },
      py::arg("params"), py::arg("s"));

  m.def("bessel_kernel", &bessel_kernel, py::arg("x"),
        "2 pi J0(x), the radial reduction kernel");
  py::enum_<ChiProfile>(m, "ChiProfile")
      .value("raised_cosine", ChiProfile::RaisedCosine)
      .value("box", ChiProfile::Box)
      .value("triangle", ChiProfile::Triangle);
  m.def("chi_hat", &chi_hat, py::arg("profile"), py::arg("u"));

  py::enum_<Weight>(m, "Weight")
      .value("unity", Weight::Unity)
      .value("sigma_over_sigma0", Weight::SigmaOverSigma0);
  m.def(
      "h_exact",
      [](const PhysicalParams& p, double T, double k, double z, Weight w,
         const QuadratureSpec& spec) {
        return h_exact(p, T, k, z, w, spec).value;
      },
      py::arg("params"), py::arg("T"), py::arg("k"), py::arg("z"),
      py::arg("weight"), py::arg("spec") = QuadratureSpec());
  m.def(
      "h_stationary",
      [](const PhysicalParams& p, double T, double k, double z, Weight w) {
        return h_stationary(p, T, k, z, w).value;
      },
      py::arg("params"), py::arg("T"), py::arg("k"), py::arg("z"),
      py::arg("weight"));
  m.def("plasmon_propagator", &plasmon_propagator, py::arg("params"),
        py::arg("t"), py::arg("z"), py::arg("s"));

  py::class_<Geometry>(m, "Geometry")
      .def_readonly("phi_z", &Geometry::phi_z)
      .def_readonly("phi_z0", &Geometry::phi_z0)
      .def_readonly("delta_phi", &Geometry::delta_phi)
      .def_readonly("C", &Geometry::C);
  m.def(
      "geometry",
      [](const PhysicalParams& p, double T, double z, double z0) {
        return geometry(p, GeometryFrame{T, z, z0, 0.0});
      },
      py::arg("params"), py::arg("T"), py::arg("z"), py::arg("z0"));

  py::enum_<KernelMethod>(m, "KernelMethod")
      .value("exact", KernelMethod::Exact)
      .value("stationary", KernelMethod::Stationary);
  m.def("kernel_p_exact", &kernel_p_exact, py::arg("params"), py::arg("T"),
        py::arg("k"), py::arg("z"), py::arg("z0"));
  m.def("kernel_p_asymptotic", &kernel_p_asymptotic, py::arg("params"),
        py::arg("T"), py::arg("k"), py::arg("z"), py::arg("z0"));
  m.def(
      "kernel_s",
      [](const PhysicalParams& p, double T, double k, double z, double z0,
         KernelMethod method) { return kernel_s(p, T, k, z, z0, method); },
      py::arg("params"), py::arg("T"), py::arg("k"), py::arg("z"),
      py::arg("z0"), py::arg("method") = KernelMethod::Exact);
  m.def("kernel_p_regularized", &kernel_p_regularized, py::arg("params"),
        py::arg("T"), py::arg("k"), py::arg("z"), py::arg("z0"), py::arg("dt"),
        py::arg("profile"));
  m.def(
      "kernel_s_regularized",
      [](const PhysicalParams& p, double T, double k, double z, double z0,
         double dt, ChiProfile prof, KernelMethod method) {
        return kernel_s_regularized(p, T, k, z, z0, dt, prof, method);
      },
      py::arg("params"), py::arg("T"), py::arg("k"), py::arg("z"),
      py::arg("z0"), py::arg("dt"), py::arg("profile"),
      py::arg("method") = KernelMethod::Exact);

  m.def(
      "jp_exact",
      [](const PhysicalParams& p, const SourceConfig& s, double T, double r,
         double z) { return jp_exact(p, s, T, r, z); },
      py::arg("params"), py::arg("source"), py::arg("T"), py::arg("r"),
      py::arg("z"));
  m.def(
      "jp_asymptotic",
      [](const PhysicalParams& p, const SourceConfig& s, double T, double r,
         double z) { return jp_asymptotic(p, s, T, r, z); },
      py::arg("params"), py::arg("source"), py::arg("T"), py::arg("r"),
      py::arg("z"));
  m.def(
      "js_asymptotic",
      [](const PhysicalParams& p, const SourceConfig& s, double T, double r,
         double z) { return js_asymptotic(p, s, T, r, z); },
      py::arg("params"), py::arg("source"), py::arg("T"), py::arg("r"),
      py::arg("z"));
  m.def(
      "js_regularized",
      [](const PhysicalParams& p, const SourceConfig& s, double T, double r,
         double z, double dt, ChiProfile prof) {
        return js_regularized(p, s, T, r, z, dt, prof);
      },
      py::arg("params"), py::arg("source"), py::arg("T"), py::arg("r"),
      py::arg("z"), py::arg("dt"), py::arg("profile"));
  py::enum_<PsfKind>(m, "PsfKind")
      .value("plasmonic", PsfKind::Plasmonic)
      .value("scattered", PsfKind::Scattered);
  m.def(
      "ez_from_kernel",
      [](const PhysicalParams& p, const SourceConfig& s, double T, double r,
         double z, PsfKind kind) {
        return ez_from_kernel(p, s, T, r, z, kind);
      },
      py::arg("params"), py::arg("source"), py::arg("T"), py::arg("r"),
      py::arg("z"), py::arg("kind"));
  py::class_<ResolutionPredictors>(m, "ResolutionPredictors")
      .def_readonly("zeta", &ResolutionPredictors::zeta)
      .def_readonly("horizontal_p", &ResolutionPredictors::horizontal_p)
      .def_readonly("horizontal_s", &ResolutionPredictors::horizontal_s)
      .def_readonly("vertical_s", &ResolutionPredictors::vertical_s);
  m.def("resolution_predictors", &resolution_predictors, py::arg("params"),
        py::arg("source"), py::arg("T"), py::arg("z"));
  m.def(
      "jp_regularized",
      [](const PhysicalParams& p, const SourceConfig& s, double T, double r,
         double z, double dt, ChiProfile prof) {
        return jp_regularized(p, s, T, r, z, dt, prof);
      },
      py::arg("params"), py::arg("source"), py::arg("T"), py::arg("r"),
      py::arg("z"), py::arg("dt"), py::arg("profile"));

  m.def("unperturbed_pole_field", &unperturbed_pole_field, py::arg("params"),
        py::arg("source"), py::arg("T"), py::arg("k"));
  m.def(
      "unperturbed_branch_field",
      [](const PhysicalParams& p, const SourceConfig& s, double T, double k) {
        return unperturbed_branch_field(p, s, T, k);
      },
      py::arg("params"), py::arg("source"), py::arg("T"), py::arg("k"));
  py::class_<PerturbedComponents>(m, "PerturbedComponents")
      .def_readonly("p", &PerturbedComponents::p)
      .def_readonly("s", &PerturbedComponents::s)
      .def_readonly("f", &PerturbedComponents::f)
      .def_readonly("m", &PerturbedComponents::m)
      .def("sum", &PerturbedComponents::sum);
  m.def(
      "perturbed_components",
      [](const PhysicalParams& p, const SourceConfig& s, double T, double k,
         double z) { return perturbed_components(p, s, T, k, z); },
      py::arg("params"), py::arg("source"), py::arg("T"), py::arg("k"),
      py::arg("z"));
  py::class_<MixedWaveLocation>(m, "MixedWaveLocation")
      .def_readonly("radius", &MixedWaveLocation::radius)
      .def_readonly("radius_limit", &MixedWaveLocation::radius_limit)
      .def_readonly("u_dominant", &MixedWaveLocation::u_dominant);
  m.def("mixed_wave_locator", &mixed_wave_locator, py::arg("params"),
        py::arg("T"), py::arg("k_grid"), py::arg("w"));

  m.def("default_config_hash", []() { return config_hash(default_config()); });
}
