#include "dpw/delaunay.hpp"

#include <cmath>

namespace dpw {

namespace {
constexpr Complex kI{0.0, 1.0};
}

std::string to_string(DelaunayClass cls) {
  switch (cls) {
    case DelaunayClass::Cylinder: return "cylinder";
    case DelaunayClass::Unduloid: return "unduloid";
    case DelaunayClass::Nodoid: return "nodoid";
    case DelaunayClass::SphereLimit: return "sphere-limit";
    case DelaunayClass::Invalid: return "branched/invalid";
  }
  return "unknown";
}

Mat2 delaunay_residue(const DelaunayParams& params, Complex lambda) {
  Mat2 m;
  m << params.c, params.a / lambda + std::conj(params.b) * lambda,
       params.b / lambda + std::conj(params.a) * lambda, -params.c;
  return m;
}

LoopMatrix delaunay_residue_loop(const DelaunayParams& params) {
  LoopMatrix loop(1);
  Mat2 c0;
  c0 << params.c, 0.0, 0.0, -params.c;
  Mat2 cm1;
  cm1 << 0.0, params.a, params.b, 0.0;
  Mat2 cp1;
  cp1 << 0.0, std::conj(params.b), std::conj(params.a), 0.0;
  loop.set_coeff(0, c0);
  loop.set_coeff(-1, cm1);
  loop.set_coeff(1, cp1);
  return loop;
}

LoopMatrix closed_form_frame(const DelaunayParams& params, Complex w,
                             int degree) {
  const int samples = 4 * degree + 4;
  std::vector<Mat2> values(samples);
  for (int m = 0; m < samples; ++m) {
    const double arg = 2.0 * M_PI * m / samples;
    const Complex lambda{std::cos(arg), std::sin(arg)};
    values[m] = mat2_exp(w * delaunay_residue(params, lambda));
  }
  return from_samples(values, degree);
}

Potential delaunay_potential(const DelaunayParams& params, int degree) {
  Potential pot;
  const LoopMatrix residue = delaunay_residue_loop(params);
  pot.coefficient = [residue](Complex) { return residue; };
  pot.closed_form = [params, degree](Complex w) {
    return closed_form_frame(params, w, degree);
  };
  return pot;
}

DPWTriple delaunay_triple(const DelaunayParams& params, int degree) {
  DPWTriple triple;
  triple.potential = delaunay_potential(params, degree);
  triple.initial_frame = LoopMatrix::identity(degree);
  triple.base_point = Complex{0.0, 0.0};
  triple.mean_curvature = params.H;
  triple.lambda0 = params.lambda0;
  return triple;
}

Complex delaunay_mu(const DelaunayParams& params, Complex lambda) {
  if (lambda == Complex{0.0, 0.0}) {
    throw std::domain_error("delaunay_mu: lambda must be nonzero");
  }
  const Complex ab = params.a * params.b;
  const Complex radicand = std::norm(params.a) + std::norm(params.b) +
                           params.c * params.c + ab / (lambda * lambda) +
                           std::conj(ab) * lambda * lambda;
  return std::sqrt(radicand);
}

MonodromyMatrix closed_form_monodromy(const DelaunayParams& params,
                                      int degree) {
  const int samples = 4 * degree + 4;
  std::vector<Mat2> values(samples);
  for (int m = 0; m < samples; ++m) {
    const double arg = 2.0 * M_PI * m / samples;
    const Complex lambda{std::cos(arg), std::sin(arg)};
    values[m] = mat2_exp(2.0 * M_PI * kI * delaunay_residue(params, lambda));
  }
  return MonodromyMatrix{from_samples(values, degree)};
}

DelaunayClosingReport check_closing(const DelaunayParams& params, double tol) {
  DelaunayClosingReport report;
  const Complex mu1c = delaunay_mu(params, 1.0);
  report.mu1 = mu1c.real();
  const double two_mu = 2.0 * std::abs(mu1c);
  report.mu1_half_integer =
      std::abs(mu1c.imag()) <= tol &&
      std::abs(two_mu - std::round(two_mu)) <= tol;
  report.simply_wrapped = std::abs(std::abs(mu1c) - 0.5) <= tol;
  report.ab_real = std::abs((params.a * params.b).imag()) <= tol;
  report.conditions =
      closing_conditions(closed_form_monodromy(params, 24), params.lambda0,
                         tol);
  report.pass = report.conditions.cond1_pass && report.conditions.cond2_pass;
  return report;
}

RotationNormalization rotation_normalize(Complex a, Complex b) {
  const Complex ab = a * b;
  if (std::abs(ab.imag()) > 1e-9 * std::max(1.0, std::abs(ab))) {
    throw std::domain_error("rotation_normalize: ab is not real");
  }
  RotationNormalization out;
  const Complex gamma = (std::abs(a) > 0.0)
                            ? a / std::abs(a)
                            : (std::abs(b) > 0.0 ? std::abs(b) / b
                                                 : Complex{1.0, 0.0});
  const Complex root = std::sqrt(gamma);
  out.gauge = Mat2::Zero();
  out.gauge(0, 0) = root;
  out.gauge(1, 1) = std::conj(root);
  out.a = std::abs(a);
  out.b = (gamma * b).real();
  return out;
}

std::pair<double, double> neck_bulge_radii(const DelaunayParams& params) {
  const double ab = (params.a * params.b).real();
  const double disc = 1.0 - 16.0 * ab;
  if (disc < 0.0) {
    throw std::domain_error("neck_bulge_radii: 16ab > 1, no real roots");
  }
  const double root = std::sqrt(disc);
  const double r1 = (1.0 - root) / (2.0 * params.H);
  const double r2 = (1.0 + root) / (2.0 * params.H);
  return {std::min(r1, r2), std::max(r1, r2)};
}

DelaunayClass classify(const DelaunayParams& params) {
  const double eps = 1e-12;
  if (std::abs(params.a) < eps) return DelaunayClass::Invalid;
  if (std::abs(params.b) < eps) return DelaunayClass::SphereLimit;
  const double ab = (params.a * params.b).real();
  if (ab > eps) {
    if (std::abs(std::abs(params.a) - 0.25) < eps &&
        std::abs(std::abs(params.b) - 0.25) < eps) {
      return DelaunayClass::Cylinder;
    }
    return DelaunayClass::Unduloid;
  }
  if (ab < -eps) return DelaunayClass::Nodoid;
  return DelaunayClass::SphereLimit;
}

DelaunayGeometry delaunay_geometry(const DelaunayParams& params) {
  if (std::abs(params.a.imag()) > 1e-12 || std::abs(params.b.imag()) > 1e-12) {
    throw std::invalid_argument(
        "delaunay_geometry: parameters must be rotation-normalized to real");
  }
  const double a = params.a.real();
  const double b = params.b.real();
  const double c = params.c;
  const double H = params.H;

  DelaunayGeometry geo;
  const SU2Vector axis =
      SU2Vector::from_matrix(kI * delaunay_residue(params, params.lambda0));
  const double axis_norm = axis.norm();
  geo.axis_direction = (axis_norm > 0.0) ? (1.0 / axis_norm) * axis : axis;
  geo.circle_center = SU2Vector{(8.0 * a * a + 8.0 * a * b - 1.0) / (2.0 * H),
                                0.0, -4.0 * a * c / H};
  geo.circle_radius = 2.0 * std::abs(a / H);
  geo.cos_theta = 2.0 * (a + b);
  const auto radii = neck_bulge_radii(params);
  geo.neck_radius = radii.first;
  geo.bulge_radius = radii.second;
  geo.classification = classify(params);
  return geo;
}

double profile_first_integral(double r, double rdot, double H) {
  return r / std::sqrt(1.0 + rdot * rdot) - r * r * H;
}

}  // namespace dpw
