#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qsnell/errors.hpp"
#include "qsnell/kinematics.hpp"
#include "qsnell/oracle.hpp"
#include "qsnell/quaternion.hpp"
#include "qsnell/scattering.hpp"

namespace py = pybind11;
using namespace qsnell;

namespace
{

py::tuple as_tuple(PlanePoint p) { return py::make_tuple(p.y, p.z); }

}  // namespace

PYBIND11_MODULE(_qsnell, m)
{
  m.doc() = "Snell law and reflection amplitudes for complex and quaternionic step potentials";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<SingularSystem>(m, "SingularSystem", PyExc_ArithmeticError);

  py::class_<Quaternion>(m, "Quaternion")
      .def(py::init<double, double, double, double>(), py::arg("w") = 0.0, py::arg("x") = 0.0,
           py::arg("y") = 0.0, py::arg("z") = 0.0)
      .def_readwrite("w", &Quaternion::w)
      .def_readwrite("x", &Quaternion::x)
      .def_readwrite("y", &Quaternion::y)
      .def_readwrite("z", &Quaternion::z)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("__repr__", [](const Quaternion& q) {
        return "Quaternion(" + std::to_string(q.w) + ", " + std::to_string(q.x) + ", " + std::to_string(q.y) +
               ", " + std::to_string(q.z) + ")";
      });
  m.def("hamilton_product", &hamilton_product);
  m.def("conjugate", py::overload_cast<const Quaternion&>(&conjugate));
  m.def("norm", &norm);
  m.def("inverse", &inverse);
  m.def("symplectic_split", [](const Quaternion& q) {
    const SymplecticPair p = symplectic_split(q);
    return py::make_tuple(p.first, p.second);
  });
  m.def("symplectic_join", [](Complex first, Complex second) { return symplectic_join({first, second}); });

  py::class_<StepPotential>(m, "StepPotential")
      .def(py::init([](double v1, double v2, double v3, double d_star) {
             return StepPotential{v1, v2, v3, d_star};
           }),
           py::arg("v1") = 0.0, py::arg("v2") = 0.0, py::arg("v3") = 0.0, py::arg("d_star") = 0.0)
      .def_readwrite("v1", &StepPotential::v1)
      .def_readwrite("v2", &StepPotential::v2)
      .def_readwrite("v3", &StepPotential::v3)
      .def_readwrite("d_star", &StepPotential::d_star)
      .def("quaternionic_modulus", &StepPotential::quaternionic_modulus)
      .def("modulus", &StepPotential::modulus);

  py::class_<ScatteringConfig>(m, "ScatteringConfig")
      .def(py::init([](double energy, double theta, const StepPotential& potential) {
             ScatteringConfig c{energy, theta, potential};
             c.validate();
             return c;
           }),
           py::arg("energy"), py::arg("theta"), py::arg("potential") = StepPotential{})
      .def_readonly("energy", &ScatteringConfig::energy)
      .def_readonly("theta", &ScatteringConfig::theta)
      .def_readonly("potential", &ScatteringConfig::potential);

  py::enum_<Regime>(m, "Regime")
      .value("Propagating", Regime::Propagating)
      .value("TotalInternalReflection", Regime::TotalInternalReflection)
      .value("Tunneling", Regime::Tunneling);

  py::enum_<EvanescentMode>(m, "EvanescentMode")
      .value("PaperLiteral", EvanescentMode::PaperLiteral)
      .value("DispersionConsistent", EvanescentMode::DispersionConsistent);

  py::class_<Kinematics>(m, "Kinematics")
      .def_readonly("p", &Kinematics::p)
      .def_readonly("p_y_star", &Kinematics::p_y_star)
      .def_readonly("p_z_star", &Kinematics::p_z_star)
      .def_readonly("q_z_star", &Kinematics::q_z_star)
      .def_readonly("Q_z_star", &Kinematics::Q_z_star)
      .def_readonly("Q_tilde_z_star", &Kinematics::Q_tilde_z_star)
      .def_readonly("n_sq", &Kinematics::n_sq)
      .def_readonly("N_sq", &Kinematics::N_sq)
      .def_readonly("alpha", &Kinematics::alpha)
      .def_readonly("beta", &Kinematics::beta)
      .def_readonly("regime", &Kinematics::regime);

  py::class_<AmplitudeSet>(m, "AmplitudeSet")
      .def_readonly("r_main", &AmplitudeSet::r_main)
      .def_readonly("r_tilde", &AmplitudeSet::r_tilde)
      .def_readonly("t_main", &AmplitudeSet::t_main)
      .def_readonly("t_tilde", &AmplitudeSet::t_tilde);

  m.def("momentum_magnitude", &momentum_magnitude);
  m.def("index_complex_sq", [](double v1, double energy) { return index_complex(v1, energy).n_sq; });
  m.def("index_quaternionic_sq", [](const StepPotential& v, double energy) {
    return index_quaternionic(v, energy).N_sq;
  });
  m.def("refraction_angle", &refraction_angle, py::arg("theta"), py::arg("index"));
  m.def("critical_angle", [](double a, double b) { return critical_angle(a, b).value(); }, py::arg("a"),
        py::arg("b"), "theta_C(V1/E, |V_q|/E), or None when no single critical angle exists");
  m.def("index_perturbative", &index_perturbative, py::arg("n"), py::arg("eps"));
  m.def("derive_kinematics", &derive_kinematics);
  m.def("classify_regime", &classify_regime);
  m.def("rotate_frame", [](double theta, double y, double z) { return as_tuple(rotate_frame(theta, {y, z})); });
  m.def("unrotate_frame", [](double theta, double y, double z) { return as_tuple(unrotate_frame(theta, {y, z})); });

  m.def("reflection_complex", &reflection_complex);
  m.def("total_reflection_phase", &total_reflection_phase);
  m.def("reflection_quaternionic", &reflection_quaternionic, py::arg("config"),
        py::arg("mode") = EvanescentMode::PaperLiteral);
  m.def("solve_amplitudes", &solve_amplitudes, py::arg("config"), py::arg("mode") = EvanescentMode::PaperLiteral);
  m.def("continuity_linear_solve", &oracle::continuity_linear_solve, py::arg("config"),
        py::arg("mode") = EvanescentMode::PaperLiteral);
  m.def(
      "wavefunction",
      [](const ScatteringConfig& config, double y, double z, EvanescentMode mode) {
        return Wavefield(config, mode)({y, z});
      },
      py::arg("config"), py::arg("y"), py::arg("z"), py::arg("mode") = EvanescentMode::PaperLiteral);
  m.def("critical_identity_probe", [](double x) {
    const oracle::IdentityProbe p = oracle::critical_identity_probe(x);
    return py::make_tuple(p.direct, p.derived_rhs, p.paper_rhs);
  });
}
