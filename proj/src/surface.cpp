#include "dpw/surface.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <thread>

namespace dpw {

SurfaceMesh generate_mesh(const DelaunayParams& params, int t_steps,
                          double rho_min, double rho_max, int rho_steps,
                          int degree, double tol, int threads) {
  if (t_steps < 2 || rho_steps < 2) {
    throw std::invalid_argument("generate_mesh: grid too small");
  }
  if (!(rho_min < rho_max)) {
    throw std::invalid_argument("generate_mesh: empty rho range");
  }
  SurfaceMesh mesh;
  mesh.params = params;
  mesh.fourier_degree = degree;
  mesh.tolerance = tol;
  mesh.n_t = t_steps + 1;
  mesh.n_rho = rho_steps;
  mesh.t_values.resize(mesh.n_t);
  mesh.rho_values.resize(rho_steps);
  for (int i = 0; i <= t_steps; ++i) {
    mesh.t_values[i] = 2.0 * M_PI * i / t_steps;
  }
  for (int j = 0; j < rho_steps; ++j) {
    mesh.rho_values[j] = rho_min + (rho_max - rho_min) * j / (rho_steps - 1);
  }
  const size_t total = size_t(mesh.n_t) * mesh.n_rho;
  mesh.points.resize(total);
  mesh.normals.resize(total);
  mesh.b0.resize(total);
  std::vector<double> residuals(total, 0.0);

  const DPWTriple triple = delaunay_triple(params, degree);

  std::atomic<size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&]() {
    for (size_t idx = next.fetch_add(1); idx < total; idx = next.fetch_add(1)) {
      if (first_error) return;
      const int i = int(idx / mesh.n_rho);
      const int j = int(idx % mesh.n_rho);
      const Complex w{mesh.rho_values[j], mesh.t_values[i]};
      try {
        const ImmersionPoint p = immerse_full(triple, w, degree, tol);
        mesh.points[idx] = p.point;
        const SU2Vector n = params.H * (p.parallel_point - p.point);
        const double len = n.norm();
        mesh.normals[idx] = (len > 0.0) ? (1.0 / len) * n : n;
        mesh.b0[idx] = p.b0_upper_left;
        residuals[idx] = p.iwasawa_residual;
      } catch (const TruncationError& err) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) {
          first_error = std::make_exception_ptr(TruncationError(
              "generate_mesh: Iwasawa non-convergence at grid point (t=" +
                  std::to_string(mesh.t_values[i]) + ", rho=" +
                  std::to_string(mesh.rho_values[j]) + "): " + err.what(),
              err.residual()));
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };

  int n_threads = threads > 0 ? threads
                              : int(std::thread::hardware_concurrency());
  n_threads = std::clamp(n_threads, 1, 64);
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (int k = 0; k < n_threads; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  for (double r : residuals) {
    mesh.max_iwasawa_residual = std::max(mesh.max_iwasawa_residual, r);
  }
  for (int j = 0; j < mesh.n_rho; ++j) {
    const SU2Vector diff =
        mesh.point(0, j) - mesh.point(mesh.n_t - 1, j);
    mesh.closure_error = std::max(mesh.closure_error, diff.norm());
  }
  mesh.closed = check_closing(params).pass;
  return mesh;
}

MeasurementReport measure(const SurfaceMesh& mesh,
                          const DelaunayGeometry& geometry) {
  if (mesh.n_t < 3 || mesh.n_rho < 3) {
    throw std::runtime_error("measure: mesh is degenerate");
  }
  MeasurementReport report;
  report.period_closure_error = mesh.closure_error;

  const SU2Vector dir = geometry.axis_direction;
  const SU2Vector center = geometry.circle_center;
  const int nt = mesh.n_t - 1;  // skip the duplicated seam column

  std::vector<double> radius(mesh.n_rho, 0.0);
  std::vector<double> axial(mesh.n_rho, 0.0);
  for (int j = 0; j < mesh.n_rho; ++j) {
    double rmin = std::numeric_limits<double>::max();
    double rmax = 0.0;
    double rsum = 0.0;
    double xsum = 0.0;
    for (int i = 0; i < nt; ++i) {
      const SU2Vector v = mesh.point(i, j) - center;
      const double x = dot(v, dir);
      const SU2Vector radial = v - x * dir;
      const double r = radial.norm();
      rmin = std::min(rmin, r);
      rmax = std::max(rmax, r);
      rsum += r;
      xsum += x;
    }
    radius[j] = rsum / nt;
    axial[j] = xsum / nt;
    report.axis_fit_residual = std::max(report.axis_fit_residual, rmax - rmin);
  }

  int jmin = 0;
  int jmax = 0;
  for (int j = 1; j < mesh.n_rho; ++j) {
    if (radius[j] < radius[jmin]) jmin = j;
    if (radius[j] > radius[jmax]) jmax = j;
  }
  report.measured_neck = radius[jmin];
  report.measured_bulge = radius[jmax];
  report.extrema_found = (jmin > 0 && jmin < mesh.n_rho - 1) &&
                         (jmax > 0 && jmax < mesh.n_rho - 1);

  // First integral s = r/sqrt(1+rdot^2) - r^2 H along the profile, with
  // rdot = dr/dx by central differences in the axial coordinate.
  double smin = std::numeric_limits<double>::max();
  double smax = -smin;
  const double h = mesh.params.H;
  for (int j = 1; j + 1 < mesh.n_rho; ++j) {
    const double dx = axial[j + 1] - axial[j - 1];
    if (std::abs(dx) < 1e-12) continue;
    const double rdot = (radius[j + 1] - radius[j - 1]) / dx;
    const double s = profile_first_integral(radius[j], rdot, h);
    smin = std::min(smin, s);
    smax = std::max(smax, s);
  }
  report.first_integral_spread = (smax >= smin) ? smax - smin : 0.0;
  return report;
}

MeshFormat mesh_format_from_string(const std::string& name) {
  if (name == "obj") return MeshFormat::Obj;
  if (name == "ply") return MeshFormat::Ply;
  if (name == "csv") return MeshFormat::Csv;
  throw std::invalid_argument("unknown mesh format: " + name);
}

namespace {

void write_obj(const SurfaceMesh& mesh, std::ostream& os) {
  const int nt = mesh.closed ? mesh.n_t - 1 : mesh.n_t;
  os.precision(17);
  os << "# delaunay-dpw surface, " << nt << "x" << mesh.n_rho << " vertices\n";
  for (int i = 0; i < nt; ++i) {
    for (int j = 0; j < mesh.n_rho; ++j) {
      const SU2Vector& p = mesh.point(i, j);
      os << "v " << p.x1 << " " << p.x2 << " " << p.x3 << "\n";
    }
  }
  for (int i = 0; i < nt; ++i) {
    for (int j = 0; j < mesh.n_rho; ++j) {
      const SU2Vector& n = mesh.normals[size_t(i) * mesh.n_rho + j];
      os << "vn " << n.x1 << " " << n.x2 << " " << n.x3 << "\n";
    }
  }
  auto vid = [&](int i, int j) { return i * mesh.n_rho + j + 1; };
  const int strips = mesh.closed ? nt : nt - 1;
  for (int i = 0; i < strips; ++i) {
    const int i2 = (i + 1) % nt;
    for (int j = 0; j + 1 < mesh.n_rho; ++j) {
      const int v00 = vid(i, j);
      const int v10 = vid(i2, j);
      const int v11 = vid(i2, j + 1);
      const int v01 = vid(i, j + 1);
      os << "f " << v00 << "//" << v00 << " " << v10 << "//" << v10 << " "
         << v11 << "//" << v11 << "\n";
      os << "f " << v00 << "//" << v00 << " " << v11 << "//" << v11 << " "
         << v01 << "//" << v01 << "\n";
    }
  }
}

void write_ply(const SurfaceMesh& mesh, std::ostream& os) {
  const int nt = mesh.closed ? mesh.n_t - 1 : mesh.n_t;
  const int strips = mesh.closed ? nt : nt - 1;
  const uint32_t n_vertices = uint32_t(nt) * mesh.n_rho;
  const uint32_t n_faces = uint32_t(strips) * (mesh.n_rho - 1) * 2;
  os << "ply\nformat binary_little_endian 1.0\n"
     << "element vertex " << n_vertices << "\n"
     << "property double x\nproperty double y\nproperty double z\n"
     << "property double nx\nproperty double ny\nproperty double nz\n"
     << "element face " << n_faces << "\n"
     << "property list uchar uint vertex_indices\n"
     << "end_header\n";
  auto put_double = [&](double v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof(v));
  };
  for (int i = 0; i < nt; ++i) {
    for (int j = 0; j < mesh.n_rho; ++j) {
      const size_t idx = size_t(i) * mesh.n_rho + j;
      const SU2Vector& p = mesh.points[idx];
      const SU2Vector& n = mesh.normals[idx];
      put_double(p.x1); put_double(p.x2); put_double(p.x3);
      put_double(n.x1); put_double(n.x2); put_double(n.x3);
    }
  }
  auto put_face = [&](uint32_t a, uint32_t b, uint32_t c) {
    const uint8_t count = 3;
    os.write(reinterpret_cast<const char*>(&count), 1);
    for (uint32_t v : {a, b, c}) {
      os.write(reinterpret_cast<const char*>(&v), sizeof(v));
    }
  };
  auto vid = [&](int i, int j) { return uint32_t(i * mesh.n_rho + j); };
  for (int i = 0; i < strips; ++i) {
    const int i2 = (i + 1) % nt;
    for (int j = 0; j + 1 < mesh.n_rho; ++j) {
      put_face(vid(i, j), vid(i2, j), vid(i2, j + 1));
      put_face(vid(i, j), vid(i2, j + 1), vid(i, j + 1));
    }
  }
}

void write_csv(const SurfaceMesh& mesh, std::ostream& os) {
  os.precision(17);
  os << "t,rho,x,y,z\n";
  for (int i = 0; i < mesh.n_t; ++i) {
    for (int j = 0; j < mesh.n_rho; ++j) {
      const SU2Vector& p = mesh.point(i, j);
      os << mesh.t_values[i] << "," << mesh.rho_values[j] << "," << p.x1
         << "," << p.x2 << "," << p.x3 << "\n";
    }
  }
}

}  // namespace

void export_mesh(const SurfaceMesh& mesh, MeshFormat format,
                 const std::string& path) {
  std::ofstream os(path, format == MeshFormat::Ply
                             ? std::ios::binary | std::ios::out
                             : std::ios::out);
  if (!os) {
    throw std::runtime_error("export_mesh: cannot open " + path);
  }
  switch (format) {
    case MeshFormat::Obj: write_obj(mesh, os); break;
    case MeshFormat::Ply: write_ply(mesh, os); break;
    case MeshFormat::Csv: write_csv(mesh, os); break;
  }
  if (!os) {
    throw std::runtime_error("export_mesh: write failed for " + path);
  }
}

}  // namespace dpw
