#include "dpw/monodromy.hpp"

#include <cmath>

namespace dpw {

MonodromyMatrix compute_monodromy(const DPWTriple& triple, int degree,
                                  int steps_per_unit) {
  const Complex two_pi_i{0.0, 2.0 * M_PI};
  const Complex path[2] = {triple.base_point, triple.base_point + two_pi_i};
  const LoopMatrix end_frame = integrate_frame(triple, path, steps_per_unit);

  const int samples = 2 * (2 * degree) + 2;
  const std::vector<Mat2> end_samples = sample_on_circle(end_frame, samples);
  const std::vector<Mat2> start_samples =
      sample_on_circle(triple.initial_frame, samples);
  std::vector<Mat2> chi_samples(samples);
  for (int m = 0; m < samples; ++m) {
    chi_samples[m] = end_samples[m] * start_samples[m].inverse();
  }
  return MonodromyMatrix{from_samples(chi_samples, degree,
                                      end_frame.radius())};
}

bool certify_unitary_monodromy(const DPWTriple& triple, int samples,
                               double tol) {
  if (unitarity_residual(triple.initial_frame, samples) > tol) return false;
  // The deck curve through the base point, w(s) = w0 + i*s: the pulled-back
  // potential is A(w(s)) * i ds, which must be anti-hermitian at each sampled
  // lambda on the unit circle.
  const Complex i{0.0, 1.0};
  for (int s = 0; s < samples; ++s) {
    const Complex w = triple.base_point + i * (2.0 * M_PI * s / samples);
    const LoopMatrix a = triple.potential.coefficient(w);
    for (int m = 0; m < samples; ++m) {
      const double arg = 2.0 * M_PI * m / samples;
      const Mat2 value = i * a.evaluate(Complex{std::cos(arg), std::sin(arg)});
      if ((value + value.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
    }
  }
  return true;
}

ClosingReport closing_conditions(const MonodromyMatrix& monodromy,
                                 Complex lambda0, double tol) {
  if (std::abs(std::abs(lambda0) - 1.0) > 1e-12) {
    throw std::invalid_argument("closing_conditions: |lambda0| must be 1");
  }
  ClosingReport report;
  report.tolerance = tol;
  const Mat2 value = monodromy.chi.evaluate(lambda0);
  const double dist_plus = (value - Mat2::Identity()).cwiseAbs().maxCoeff();
  const double dist_minus = (value + Mat2::Identity()).cwiseAbs().maxCoeff();
  report.cond1_sign = (dist_plus <= dist_minus) ? 1 : -1;
  report.cond1_residual = std::min(dist_plus, dist_minus);
  report.cond2_residual =
      lambda_derivative(monodromy.chi).evaluate(lambda0).cwiseAbs().maxCoeff();
  report.cond1_pass = report.cond1_residual <= tol;
  report.cond2_pass = report.cond2_residual <= tol;
  return report;
}

}  // namespace dpw
