// Delaunay-specific pipeline: the potential xi_{-1} dz/z, its closed-form
// frame and monodromy, the closing constraints, classification, and the
// neck/bulge radius, axis and profile-curve formulas.

#ifndef DPW_DELAUNAY_HPP
#define DPW_DELAUNAY_HPP

#include "dpw/monodromy.hpp"

namespace dpw {

struct DelaunayParams {
  Complex a{0.25, 0.0};
  Complex b{0.25, 0.0};
  double c = 0.0;
  double H = 1.0;
  Complex lambda0{1.0, 0.0};
};

enum class DelaunayClass {
  Cylinder,
  Unduloid,
  Nodoid,
  SphereLimit,
  Invalid,  // a = 0 branches the immersion
};

std::string to_string(DelaunayClass cls);

struct DelaunayGeometry {
  double neck_radius = 0.0;
  double bulge_radius = 0.0;
  SU2Vector axis_direction;
  SU2Vector circle_center;
  double circle_radius = 0.0;
  double cos_theta = 0.0;
  DelaunayClass classification = DelaunayClass::Invalid;
};

/// xi_{-1}(lambda) = [[c, a/lambda + conj(b) lambda],
///                    [b/lambda + conj(a) lambda, -c]].
Mat2 delaunay_residue(const DelaunayParams& params, Complex lambda);

/// The residue as a degree-1 loop.
LoopMatrix delaunay_residue_loop(const DelaunayParams& params);

/// xi = xi_{-1} dw on the cover (dz/z pulled back along z = exp(w)), with the
/// closed-form frame exp(w xi_{-1}) attached.
Potential delaunay_potential(const DelaunayParams& params, int degree = 32);

DPWTriple delaunay_triple(const DelaunayParams& params, int degree = 32);

/// mu(lambda) = sqrt(|a|^2 + |b|^2 + c^2 + ab/lambda^2 + conj(ab) lambda^2),
/// principal branch; mu^2 = -det xi_{-1}.
Complex delaunay_mu(const DelaunayParams& params, Complex lambda);

/// Frame at the cover point w = log z: exp(w xi_{-1}) sampled pointwise in
/// lambda and Fourier-analyzed.
LoopMatrix closed_form_frame(const DelaunayParams& params, Complex w,
                             int degree);

/// exp(2*pi*i*xi_{-1}).
MonodromyMatrix closed_form_monodromy(const DelaunayParams& params,
                                      int degree);

struct DelaunayClosingReport {
  ClosingReport conditions;     // from the closed-form monodromy
  double mu1 = 0.0;             // mu(1)
  bool mu1_half_integer = false;
  bool simply_wrapped = false;  // mu(1) == 1/2
  bool ab_real = false;
  bool pass = false;
};

DelaunayClosingReport check_closing(const DelaunayParams& params,
                                    double tol = 1e-7);

struct RotationNormalization {
  double a = 0.0;
  double b = 0.0;
  Mat2 gauge;  // diagonal unitary A with A^-1 xi A having real coefficients
};

/// Requires ab real; rotates the phase of (a, b) away. |a| is preserved and
/// a*b is preserved.
RotationNormalization rotation_normalize(Complex a, Complex b);

/// (neck, bulge) = (1/(2H))(1 -+ sqrt(1 - 16ab)). Requires 16ab <= 1.
std::pair<double, double> neck_bulge_radii(const DelaunayParams& params);

DelaunayClass classify(const DelaunayParams& params);

/// Axis, image circle of |z| = 1 and profile angle, for real-normalized
/// parameters.
DelaunayGeometry delaunay_geometry(const DelaunayParams& params);

/// s = r / sqrt(1 + rdot^2) - r^2 H; constant along the profile curve.
double profile_first_integral(double r, double rdot, double H);

}  // namespace dpw

#endif  // DPW_DELAUNAY_HPP
