#include "dpw/iwasawa.hpp"

#include <cmath>

#include <Eigen/Cholesky>

namespace dpw {

namespace {

// Coefficients B_0..B_deg of the analytic factor in h = star(B)*B, read off
// the last block row of the Cholesky factor of the n-th finite section of the
// block Toeplitz matrix of h^T (Bauer's method).
std::vector<Mat2> bauer_section(const LoopMatrix& h, int n, int deg) {
  const int dim = 2 * (n + 1);
  Eigen::MatrixXcd toeplitz(dim, dim);
  toeplitz.setZero();
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      if (std::abs(i - j) > h.degree()) continue;
      toeplitz.block<2, 2>(2 * i, 2 * j) = h.coeff(i - j).transpose();
    }
  }
  Eigen::LLT<Eigen::MatrixXcd> llt(toeplitz);
  if (llt.info() != Eigen::Success) {
    throw std::domain_error(
        "spectral_factorize_positive: block Toeplitz section is not "
        "positive-definite");
  }
  const Eigen::MatrixXcd lower = llt.matrixL();
  std::vector<Mat2> out(deg + 1, Mat2::Zero());
  for (int k = 0; k <= std::min(n, deg); ++k) {
    out[k] = lower.block<2, 2>(2 * n, 2 * (n - k)).transpose();
  }
  return out;
}

// Smallest symmetric truncation keeping all discarded modes below `floor`.
int significant_degree(const LoopMatrix& l, double floor_level) {
  int deg = 0;
  for (int k = 1; k <= l.degree(); ++k) {
    if (l.coeff(k).cwiseAbs().maxCoeff() > floor_level ||
        l.coeff(-k).cwiseAbs().maxCoeff() > floor_level) {
      deg = k;
    }
  }
  return deg;
}

double coeff_delta(const std::vector<Mat2>& u, const std::vector<Mat2>& v) {
  double d = 0.0;
  for (size_t k = 0; k < u.size(); ++k) {
    d = std::max(d, (u[k] - v[k]).cwiseAbs().maxCoeff());
  }
  return d;
}

}  // namespace

LoopMatrix spectral_factorize_positive(const LoopMatrix& h, int degree,
                                       double tol) {
  const int pd_samples = 64;
  for (int m = 0; m < pd_samples; ++m) {
    const double arg = 2.0 * M_PI * m / pd_samples;
    const Complex lambda{std::cos(arg), std::sin(arg)};
    const Mat2 value = h.evaluate(lambda);
    const Mat2 herm = 0.5 * (value + value.adjoint());
    const double tr = herm.trace().real();
    const double det = herm.determinant().real();
    if (!(tr > 0.0 && det > 0.0)) {
      throw std::domain_error(
          "spectral_factorize_positive: symbol not positive-definite at "
          "sample " + std::to_string(m) + " of " + std::to_string(pd_samples));
    }
  }

  // Grow finite sections until the read-off symbol stabilizes.
  const int cap = std::max(16 * degree, 16);
  int n = std::max({h.degree(), degree, 8});
  std::vector<Mat2> prev = bauer_section(h, n, degree);
  std::vector<Mat2> cur = prev;
  while (n < cap) {
    n = std::min(2 * n, cap);
    cur = bauer_section(h, n, degree);
    if (coeff_delta(prev, cur) < tol / 10.0) break;
    prev = cur;
  }

  LoopMatrix factor(degree, h.radius());
  for (int k = 0; k <= degree; ++k) factor.set_coeff(k, cur[k]);
  return factor;
}

IwasawaFactors iwasawa_decompose(const LoopMatrix& g, int degree, double tol) {
  if (twist_residual(g) > 1e-6) {
    throw std::invalid_argument("iwasawa_decompose: loop is not twisted");
  }
  // Working copy without the numerically empty spectral tail.
  LoopMatrix g_eff = g;
  const int g_sig = std::max(significant_degree(g, tol * 1e-3), 2);
  if (g_sig < g.degree()) g_eff = g.truncated(g_sig);

  const int nh = 2 * g_eff.degree();
  const int samples = 2 * std::max(nh, degree) + 2;
  const std::vector<Mat2> g_samples = sample_on_circle(g_eff, samples);
  std::vector<Mat2> h_samples(samples);
  for (int m = 0; m < samples; ++m) {
    const double det_err = std::abs(g_samples[m].determinant() - 1.0);
    if (det_err > 1e-6) {
      throw std::domain_error(
          "iwasawa_decompose: det(g) != 1 on the circle (error " +
          std::to_string(det_err) + ")");
    }
    h_samples[m] = g_samples[m].adjoint() * g_samples[m];
  }
  LoopMatrix h = from_samples(h_samples, nh, g.radius());
  // Negligible high modes of h only inflate the Toeplitz sections.
  const int sig = significant_degree(h, tol * 1e-3);
  if (sig < h.degree()) h = h.truncated(sig);

  LoopMatrix b = spectral_factorize_positive(h, std::min(nh, degree), tol);
  if (b.degree() < degree) b = b.truncated(degree);

  std::vector<Mat2> f_samples(samples);
  for (int m = 0; m < samples; ++m) {
    const double arg = 2.0 * M_PI * m / samples;
    const Complex lambda{std::cos(arg), std::sin(arg)};
    f_samples[m] = g_samples[m] * b.evaluate(lambda).inverse();
  }
  LoopMatrix f = from_samples(f_samples, degree, g.radius());

  double residual = 0.0;
  for (int m = 0; m < samples; ++m) {
    const double arg = 2.0 * M_PI * m / samples;
    const Complex lambda{std::cos(arg), std::sin(arg)};
    const Mat2 recon = f.evaluate(lambda) * b.evaluate(lambda);
    residual = std::max(residual,
                        (g_samples[m] - recon).cwiseAbs().maxCoeff());
  }
  if (residual > tol) {
    throw TruncationError(
        "iwasawa_decompose: residual " + std::to_string(residual) +
            " above tolerance at truncation degree " + std::to_string(degree),
        residual);
  }
  return IwasawaFactors{std::move(f), std::move(b), residual};
}

}  // namespace dpw
