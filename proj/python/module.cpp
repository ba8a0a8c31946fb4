#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dpw/surface.hpp"

namespace py = pybind11;
using namespace dpw;

namespace {

py::array_t<double> vectors_to_array(const std::vector<SU2Vector>& values,
                                     int n_t, int n_rho) {
  py::array_t<double> out({n_t, n_rho, 3});
  auto view = out.mutable_unchecked<3>();
  for (int i = 0; i < n_t; ++i) {
    for (int j = 0; j < n_rho; ++j) {
      const SU2Vector& v = values[size_t(i) * n_rho + j];
      view(i, j, 0) = v.x1;
      view(i, j, 1) = v.x2;
      view(i, j, 2) = v.x3;
    }
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Delaunay CMC surface generator via the DPW loop-group method";

  py::class_<DelaunayParams>(m, "DelaunayParams")
      .def(py::init([](Complex a, Complex b, double c, double H,
                       double lambda0_arg) {
             DelaunayParams p;
             p.a = a;
             p.b = b;
             p.c = c;
             p.H = H;
             p.lambda0 = Complex{std::cos(lambda0_arg), std::sin(lambda0_arg)};
             return p;
           }),
           py::arg("a") = Complex{0.25, 0.0}, py::arg("b") = Complex{0.25, 0.0},
           py::arg("c") = 0.0, py::arg("H") = 1.0, py::arg("lambda0_arg") = 0.0)
      .def_readwrite("a", &DelaunayParams::a)
      .def_readwrite("b", &DelaunayParams::b)
      .def_readwrite("c", &DelaunayParams::c)
      .def_readwrite("H", &DelaunayParams::H)
      .def_readwrite("lambda0", &DelaunayParams::lambda0)
      .def("__repr__", [](const DelaunayParams& p) {
        return "DelaunayParams(a=" + std::to_string(p.a.real()) + "+" +
               std::to_string(p.a.imag()) + "j, b=" +
               std::to_string(p.b.real()) + "+" + std::to_string(p.b.imag()) +
               "j, c=" + std::to_string(p.c) + ", H=" + std::to_string(p.H) +
               ")";
      });

  py::class_<ClosingReport>(m, "ClosingReport")
      .def_readonly("cond1_residual", &ClosingReport::cond1_residual)
      .def_readonly("cond1_sign", &ClosingReport::cond1_sign)
      .def_readonly("cond2_residual", &ClosingReport::cond2_residual)
      .def_readonly("cond1_pass", &ClosingReport::cond1_pass)
      .def_readonly("cond2_pass", &ClosingReport::cond2_pass)
      .def_readonly("tolerance", &ClosingReport::tolerance);

  py::class_<DelaunayClosingReport>(m, "DelaunayClosingReport")
      .def_readonly("conditions", &DelaunayClosingReport::conditions)
      .def_readonly("mu1", &DelaunayClosingReport::mu1)
      .def_readonly("mu1_half_integer",
                    &DelaunayClosingReport::mu1_half_integer)
      .def_readonly("simply_wrapped", &DelaunayClosingReport::simply_wrapped)
      .def_readonly("ab_real", &DelaunayClosingReport::ab_real)
      .def_readonly("passes", &DelaunayClosingReport::pass);

  py::class_<DelaunayGeometry>(m, "DelaunayGeometry")
      .def_readonly("neck_radius", &DelaunayGeometry::neck_radius)
      .def_readonly("bulge_radius", &DelaunayGeometry::bulge_radius)
      .def_property_readonly("axis_direction",
                             [](const DelaunayGeometry& g) {
                               return py::make_tuple(g.axis_direction.x1,
                                                     g.axis_direction.x2,
                                                     g.axis_direction.x3);
                             })
      .def_property_readonly("circle_center",
                             [](const DelaunayGeometry& g) {
                               return py::make_tuple(g.circle_center.x1,
                                                     g.circle_center.x2,
                                                     g.circle_center.x3);
                             })
      .def_readonly("circle_radius", &DelaunayGeometry::circle_radius)
      .def_readonly("cos_theta", &DelaunayGeometry::cos_theta)
      .def_property_readonly("classification", [](const DelaunayGeometry& g) {
        return to_string(g.classification);
      });

  py::class_<SurfaceMesh>(m, "SurfaceMesh")
      .def_readonly("n_t", &SurfaceMesh::n_t)
      .def_readonly("n_rho", &SurfaceMesh::n_rho)
      .def_readonly("t_values", &SurfaceMesh::t_values)
      .def_readonly("rho_values", &SurfaceMesh::rho_values)
      .def_readonly("closure_error", &SurfaceMesh::closure_error)
      .def_readonly("closed", &SurfaceMesh::closed)
      .def_readonly("max_iwasawa_residual", &SurfaceMesh::max_iwasawa_residual)
      .def_property_readonly("points",
                             [](const SurfaceMesh& mesh) {
                               return vectors_to_array(mesh.points, mesh.n_t,
                                                       mesh.n_rho);
                             })
      .def_property_readonly("normals", [](const SurfaceMesh& mesh) {
        return vectors_to_array(mesh.normals, mesh.n_t, mesh.n_rho);
      });

  py::class_<MeasurementReport>(m, "MeasurementReport")
      .def_readonly("measured_neck", &MeasurementReport::measured_neck)
      .def_readonly("measured_bulge", &MeasurementReport::measured_bulge)
      .def_readonly("axis_fit_residual", &MeasurementReport::axis_fit_residual)
      .def_readonly("first_integral_spread",
                    &MeasurementReport::first_integral_spread)
      .def_readonly("period_closure_error",
                    &MeasurementReport::period_closure_error)
      .def_readonly("extrema_found", &MeasurementReport::extrema_found);

  m.def("mu", &delaunay_mu, py::arg("params"), py::arg("lam"));
  m.def("check_closing", &check_closing, py::arg("params"),
        py::arg("tol") = 1e-7);
  m.def("neck_bulge_radii", &neck_bulge_radii, py::arg("params"));
  m.def(
      "classify",
      [](const DelaunayParams& p) { return to_string(classify(p)); },
      py::arg("params"));
  m.def("geometry", &delaunay_geometry, py::arg("params"));
  m.def("profile_first_integral", &profile_first_integral, py::arg("r"),
        py::arg("rdot"), py::arg("H"));
  m.def(
      "immerse",
      [](const DelaunayParams& p, double rho, double t, int degree,
         double tol) {
        const SU2Vector v =
            immerse(delaunay_triple(p, degree), Complex{rho, t}, degree, tol);
        return py::make_tuple(v.x1, v.x2, v.x3);
      },
      py::arg("params"), py::arg("rho"), py::arg("t"), py::arg("degree") = 32,
      py::arg("tol") = 1e-9);
  m.def("generate_mesh", &generate_mesh, py::arg("params"),
        py::arg("t_steps") = 128, py::arg("rho_min") = -M_PI,
        py::arg("rho_max") = M_PI, py::arg("rho_steps") = 129,
        py::arg("degree") = 32, py::arg("tol") = 1e-9, py::arg("threads") = 0,
        py::call_guard<py::gil_scoped_release>());
  m.def("measure", &measure, py::arg("mesh"), py::arg("geometry"));
  m.def(
      "export_mesh",
      [](const SurfaceMesh& mesh, const std::string& format,
         const std::string& path) {
        export_mesh(mesh, mesh_format_from_string(format), path);
      },
      py::arg("mesh"), py::arg("format"), py::arg("path"));
}
