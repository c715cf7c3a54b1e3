#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "patomo/analysis.hpp"
#include "patomo/errors.hpp"
#include "patomo/grid.hpp"
#include "patomo/oracle.hpp"
#include "patomo/tomograms.hpp"

namespace py = pybind11;
using namespace patomo;

namespace {

ModeEnvelope envelope_or_default(const std::optional<ModeEnvelope>& env) {
  return env ? *env : stationary_envelope(0.0);
}

// Python callables re-enter the interpreter, so they must not run on the
// grid's worker threads; every tomogram passed in from here is native.
OpticalTomogram native(const StateSpec& spec, const std::optional<ModeEnvelope>& env) {
  validate(spec);
  return make_optical_tomogram(spec, envelope_or_default(env));
}

}  // namespace

PYBIND11_MODULE(_patomo, mod) {
  mod.doc() = "Optical tomograms of photon-added coherent, even/odd and thermal states";

  py::register_exception<DomainError>(mod, "DomainError", PyExc_ValueError);
  py::register_exception<ConvergenceError>(mod, "ConvergenceError", PyExc_RuntimeError);
  py::register_exception<DegeneratePointError>(mod, "DegeneratePointError", PyExc_RuntimeError);

  mod.def("hermite", &hermite, py::arg("m"), py::arg("z"));
  mod.def("laguerre", &laguerre, py::arg("m"), py::arg("x"));

  py::class_<ModeEnvelope>(mod, "ModeEnvelope")
      .def_readonly("t", &ModeEnvelope::t)
      .def_readonly("epsilon", &ModeEnvelope::epsilon)
      .def_readonly("epsilon_dot", &ModeEnvelope::epsilon_dot)
      .def("wronskian", &ModeEnvelope::wronskian)
      .def("is_stationary", &ModeEnvelope::is_stationary, py::arg("tol") = 1e-12)
      .def("__repr__", [](const ModeEnvelope& e) {
        return "ModeEnvelope(t=" + format_double(e.t) + ")";
      });

  mod.def("stationary_envelope", &stationary_envelope, py::arg("t"));
  mod.def(
      "cosine_envelope",
      [](double t, double a, double b, double step) {
        return envelope_at(cosine_profile(a, b), t, step);
      },
      py::arg("t"), py::arg("a") = 0.2, py::arg("b") = 2.0, py::arg("step") = 1e-3,
      "Envelope for Omega^2 = 1 + a cos(b t), at the ODE grid point nearest t.");
  mod.def(
      "solve_epsilon",
      [](double a, double b, double t_end, double step) {
        return solve_epsilon(cosine_profile(a, b), t_end, step);
      },
      py::arg("a"), py::arg("b"), py::arg("t_end"), py::arg("step") = 1e-3);

  py::enum_<Parity>(mod, "Parity").value("EVEN", Parity::Even).value("ODD", Parity::Odd);

  py::class_<PhotonAddedCoherent>(mod, "PhotonAddedCoherent")
      .def(py::init<Complex, int>(), py::arg("alpha"), py::arg("m") = 0)
      .def_readwrite("alpha", &PhotonAddedCoherent::alpha)
      .def_readwrite("m", &PhotonAddedCoherent::m);
  py::class_<EvenOddPAC>(mod, "EvenOddPAC")
      .def(py::init<Complex, int, Parity>(), py::arg("alpha"), py::arg("m") = 0,
           py::arg("parity") = Parity::Even)
      .def_readwrite("alpha", &EvenOddPAC::alpha)
      .def_readwrite("m", &EvenOddPAC::m)
      .def_readwrite("parity", &EvenOddPAC::parity);
  py::class_<Thermal>(mod, "Thermal")
      .def(py::init<double>(), py::arg("T"))
      .def_readwrite("T", &Thermal::T);
  py::class_<PhotonAddedThermal>(mod, "PhotonAddedThermal")
      .def(py::init<double, int>(), py::arg("T"), py::arg("m") = 0)
      .def_readwrite("T", &PhotonAddedThermal::T)
      .def_readwrite("m", &PhotonAddedThermal::m);

  mod.def("describe", &describe, py::arg("state"));

  mod.def(
      "tomogram",
      [](const StateSpec& spec, py::array_t<double> X, py::array_t<double> theta,
         std::optional<ModeEnvelope> env) {
        const auto w = native(spec, env);
        auto fn = [&w](double x, double th) { return w(x, th); };
        return py::vectorize(fn)(X, theta);
      },
      py::arg("state"), py::arg("X"), py::arg("theta"), py::arg("envelope") = py::none(),
      "Optical tomogram w(X, theta); X and theta broadcast like numpy arrays.");

  mod.def(
      "symplectic_tomogram",
      [](const StateSpec& spec, double X, double mu, double nu, std::optional<ModeEnvelope> env) {
        validate(spec);
        return make_symplectic_tomogram(spec, envelope_or_default(env))({X, mu, nu});
      },
      py::arg("state"), py::arg("X"), py::arg("mu"), py::arg("nu"),
      py::arg("envelope") = py::none());

  mod.def(
      "tomogram_grid",
      [](const StateSpec& spec, const std::string& grid, std::optional<ModeEnvelope> env) {
        const auto w = native(spec, env);
        TomogramGrid g;
        {
          py::gil_scoped_release release;
          g = evaluate_grid(w, GridSpec::parse(grid));
        }
        py::array_t<double> out({g.spec.n_theta, g.spec.n_x});
        std::copy(g.values.begin(), g.values.end(), out.mutable_data());
        return out;
      },
      py::arg("state"), py::arg("grid") = "default", py::arg("envelope") = py::none(),
      "Array of shape (n_theta, n_x) over a 'xmin:xmax:nx:thmin:thmax:nth' grid.");

  mod.def(
      "oracle_tomogram",
      [](const StateSpec& spec, double X, double theta, std::optional<ModeEnvelope> env) {
        validate(spec);
        return tomogram_numeric(make_wavefunction(spec, envelope_or_default(env)),
                                {X, std::cos(theta), std::sin(theta)});
      },
      py::arg("state"), py::arg("X"), py::arg("theta"), py::arg("envelope") = py::none(),
      "Tomogram of a pure state by direct quadrature of its wavefunction.");

  mod.def(
      "moments",
      [](const StateSpec& spec, std::optional<ModeEnvelope> env) {
        const auto r = moment_report(native(spec, env));
        py::dict d;
        d["normalization"] = r.normalization;
        d["mean_q"] = r.mean_q;
        d["mean_p"] = r.mean_p;
        d["var_q"] = r.var_q;
        d["var_p"] = r.var_p;
        d["uncertainty_product"] = r.uncertainty_product;
        d["mean_photon_number"] = r.mean_photon_number;
        return d;
      },
      py::arg("state"), py::arg("envelope") = py::none());

  mod.def(
      "sample",
      [](const StateSpec& spec, double theta, int count, std::uint64_t seed,
         std::optional<ModeEnvelope> env) {
        const auto xs = sample_homodyne(native(spec, env), theta, count, seed);
        return py::array_t<double>(static_cast<py::ssize_t>(xs.size()), xs.data());
      },
      py::arg("state"), py::arg("theta"), py::arg("count"), py::arg("seed") = 1,
      py::arg("envelope") = py::none());

  mod.def(
      "reconstruct",
      [](const StateSpec& spec, int n_max, double reg, std::optional<ModeEnvelope> env) {
        const auto r = reconstruct_density_matrix(native(spec, env), n_max, reg);
        py::dict info;
        info["trace_before_normalization"] = r.trace_before_normalization;
        info["min_eigenvalue"] = r.min_eigenvalue;
        info["condition_estimate"] = r.condition_estimate;
        info["reg_sensitivity"] = r.reg_sensitivity;
        return py::make_tuple(Eigen::MatrixXcd(r.rho.entries), info);
      },
      py::arg("state"), py::arg("n_max") = 12, py::arg("reg") = kDefaultReconstructionReg,
      py::arg("envelope") = py::none(),
      "Returns (rho, info) with rho as a complex (n_max+1, n_max+1) array.");

  mod.def("coherent_fock_amplitudes", &coherent_fock_amplitudes, py::arg("alpha"),
          py::arg("dim"));
}
