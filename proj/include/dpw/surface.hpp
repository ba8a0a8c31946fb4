// Mesh generation over the (t, rho) grid (z = exp(rho + i t)), geometric
// measurement of the generated surface, and OBJ/PLY/CSV export.

#ifndef DPW_SURFACE_HPP
#define DPW_SURFACE_HPP

#include <string>

#include "dpw/delaunay.hpp"

namespace dpw {

struct SurfaceMesh {
  int n_t = 0;    // number of t columns, including the duplicated seam column
  int n_rho = 0;
  std::vector<double> t_values;
  std::vector<double> rho_values;
  std::vector<SU2Vector> points;   // index i_t * n_rho + j_rho
  std::vector<SU2Vector> normals;  // unit; H * (parallel - primal)
  std::vector<double> b0;          // upper-left entry of B(0) per point
  DelaunayParams params;
  int fourier_degree = 32;
  double tolerance = kDefaultTol;
  double closure_error = 0.0;  // max distance between the t=0 and t=2pi columns
  bool closed = false;
  double max_iwasawa_residual = 0.0;

  const SU2Vector& point(int i_t, int j_rho) const {
    return points[size_t(i_t) * n_rho + j_rho];
  }
};

struct MeasurementReport {
  double measured_neck = 0.0;
  double measured_bulge = 0.0;
  double axis_fit_residual = 0.0;     // max over rho of the t-spread of axis distance
  double first_integral_spread = 0.0; // max - min of s over the profile
  double period_closure_error = 0.0;
  bool extrema_found = false;  // interior neck/bulge pair inside the rho window
};

/// Immerse the grid point (i, j) at w = rho_j + i * t_i; the t grid spans
/// [0, 2pi] inclusive (t_steps + 1 columns, last duplicating the seam).
/// Deterministic for fixed inputs regardless of the number of workers.
SurfaceMesh generate_mesh(const DelaunayParams& params, int t_steps = 128,
                          double rho_min = -M_PI, double rho_max = M_PI,
                          int rho_steps = 129, int degree = 32,
                          double tol = kDefaultTol, int threads = 0);

MeasurementReport measure(const SurfaceMesh& mesh,
                          const DelaunayGeometry& geometry);

enum class MeshFormat { Obj, Ply, Csv };

MeshFormat mesh_format_from_string(const std::string& name);

/// OBJ: ascii v/vn/f, quads split into triangles, seam welded when closed.
/// PLY: binary little-endian x,y,z,nx,ny,nz. CSV: t,rho,x,y,z with header.
void export_mesh(const SurfaceMesh& mesh, MeshFormat format,
                 const std::string& path);

}  // namespace dpw

#endif  // DPW_SURFACE_HPP
