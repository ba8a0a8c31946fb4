#include "dpw/loop_matrix.hpp"

#include <cmath>
#include <sstream>

namespace dpw {

namespace {
constexpr Complex kI{0.0, 1.0};
}

Mat2 sigma_matrix() {
  Mat2 m;
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

Mat2 su2_e1() {
  Mat2 m;
  m << kI, 0.0, 0.0, -kI;
  return m;
}

Mat2 su2_e2() {
  Mat2 m;
  m << 0.0, 1.0, -1.0, 0.0;
  return m;
}

Mat2 su2_e3() {
  Mat2 m;
  m << 0.0, kI, kI, 0.0;
  return m;
}

Mat2 SU2Vector::to_matrix() const {
  return x1 * su2_e1() + x2 * su2_e2() + x3 * su2_e3();
}

SU2Vector SU2Vector::from_matrix(const Mat2& m, double tol) {
  const double herm = (m + m.adjoint()).cwiseAbs().maxCoeff();
  const double tr = std::abs(m.trace());
  if (herm > tol || tr > tol) {
    throw std::domain_error("SU2Vector::from_matrix: matrix is not trace-free "
                            "anti-hermitian (residual " +
                            std::to_string(std::max(herm, tr)) + ")");
  }
  SU2Vector v;
  v.x1 = m(0, 0).imag();
  v.x2 = m(0, 1).real();
  v.x3 = m(0, 1).imag();
  return v;
}

double SU2Vector::norm() const {
  return std::sqrt(x1 * x1 + x2 * x2 + x3 * x3);
}

SU2Vector operator+(const SU2Vector& u, const SU2Vector& v) {
  return {u.x1 + v.x1, u.x2 + v.x2, u.x3 + v.x3};
}

SU2Vector operator-(const SU2Vector& u, const SU2Vector& v) {
  return {u.x1 - v.x1, u.x2 - v.x2, u.x3 - v.x3};
}

SU2Vector operator*(double s, const SU2Vector& v) {
  return {s * v.x1, s * v.x2, s * v.x3};
}

double dot(const SU2Vector& u, const SU2Vector& v) {
  return u.x1 * v.x1 + u.x2 * v.x2 + u.x3 * v.x3;
}

LoopMatrix::LoopMatrix(int degree, double radius)
    : degree_(degree), radius_(radius),
      coeffs_(2 * degree + 1, Mat2::Zero()) {
  if (degree < 0) throw std::invalid_argument("LoopMatrix: degree must be >= 0");
  if (!(radius > 0.0 && radius <= 1.0)) {
    throw std::invalid_argument("LoopMatrix: radius must lie in (0, 1]");
  }
}

LoopMatrix LoopMatrix::identity(int degree, double radius) {
  LoopMatrix l(degree, radius);
  l.set_coeff(0, Mat2::Identity());
  return l;
}

Mat2 LoopMatrix::coeff(int k) const {
  if (k < -degree_ || k > degree_) return Mat2::Zero();
  return coeffs_[k + degree_];
}

void LoopMatrix::set_coeff(int k, const Mat2& m) {
  if (k < -degree_ || k > degree_) {
    throw std::out_of_range("LoopMatrix::set_coeff: index outside truncation");
  }
  coeffs_[k + degree_] = m;
}

Mat2 LoopMatrix::evaluate(Complex lambda) const {
  if (lambda == Complex{0.0, 0.0}) {
    for (int k = -degree_; k < 0; ++k) {
      if (coeff(k).cwiseAbs().maxCoeff() > 0.0) {
        throw std::domain_error(
            "LoopMatrix::evaluate: lambda = 0 with nonzero negative modes");
      }
    }
    return coeff(0);
  }
  // Horner in lambda for k >= 0 and in 1/lambda for k < 0.
  Mat2 pos = Mat2::Zero();
  for (int k = degree_; k >= 1; --k) {
    pos = (pos + coeff(k)) * lambda;
  }
  const Complex inv = 1.0 / lambda;
  Mat2 neg = Mat2::Zero();
  for (int k = -degree_; k <= -1; ++k) {
    neg = (neg + coeff(k)) * inv;
  }
  return pos + neg + coeff(0);
}

double LoopMatrix::max_coeff_norm() const {
  double m = 0.0;
  for (const Mat2& c : coeffs_) m = std::max(m, c.cwiseAbs().maxCoeff());
  return m;
}

LoopMatrix LoopMatrix::truncated(int new_degree) const {
  LoopMatrix out(new_degree, radius_);
  double lost = 0.0;
  for (int k = -degree_; k <= degree_; ++k) {
    if (k < -new_degree || k > new_degree) {
      lost = std::max(lost, coeff(k).cwiseAbs().maxCoeff());
    } else {
      out.set_coeff(k, coeff(k));
    }
  }
  out.set_truncation_loss(lost);
  return out;
}

std::string LoopMatrix::dump_json() const {
  std::ostringstream os;
  os.precision(17);
  os << "[";
  bool first = true;
  for (int k = -degree_; k <= degree_; ++k) {
    const Mat2 c = coeff(k);
    if (c.cwiseAbs().maxCoeff() == 0.0) continue;
    if (!first) os << ",";
    first = false;
    os << "{\"k\":" << k << ",\"entries\":[";
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        if (i != 0 || j != 0) os << ",";
        os << "[" << c(i, j).real() << "," << c(i, j).imag() << "]";
      }
    }
    os << "]}";
  }
  os << "]";
  return os.str();
}

LoopMatrix multiply(const LoopMatrix& l1, const LoopMatrix& l2, int headroom) {
  if (l1.radius() != l2.radius()) {
    throw std::invalid_argument("multiply: loops live on different circles");
  }
  const int d1 = l1.degree();
  const int d2 = l2.degree();
  const int out_deg = std::max(d1, d2) + headroom;
  LoopMatrix out(out_deg, l1.radius());
  double lost = 0.0;
  for (int k = -(d1 + d2); k <= d1 + d2; ++k) {
    Mat2 acc = Mat2::Zero();
    const int jlo = std::max(-d1, k - d2);
    const int jhi = std::min(d1, k + d2);
    for (int j = jlo; j <= jhi; ++j) {
      acc += l1.coeff(j) * l2.coeff(k - j);
    }
    if (k < -out_deg || k > out_deg) {
      lost = std::max(lost, acc.cwiseAbs().maxCoeff());
    } else {
      out.set_coeff(k, acc);
    }
  }
  out.set_truncation_loss(lost);
  return out;
}

LoopMatrix lambda_derivative(const LoopMatrix& l) {
  // The lowest mode shifts from -N to -(N+1); widen by one.
  LoopMatrix out(l.degree() + 1, l.radius());
  for (int k = -l.degree() - 1; k <= l.degree(); ++k) {
    out.set_coeff(k, double(k + 1) * l.coeff(k + 1));
  }
  return out;
}

LoopMatrix star(const LoopMatrix& l) {
  LoopMatrix out(l.degree(), l.radius());
  for (int k = -l.degree(); k <= l.degree(); ++k) {
    out.set_coeff(k, l.coeff(-k).adjoint());
  }
  return out;
}

double twist_residual(const LoopMatrix& l) {
  double res = 0.0;
  for (int k = -l.degree(); k <= l.degree(); ++k) {
    const Mat2 c = l.coeff(k);
    const bool even = (std::abs(k) % 2 == 0);
    if (even) {
      res = std::max({res, std::abs(c(0, 1)), std::abs(c(1, 0))});
    } else {
      res = std::max({res, std::abs(c(0, 0)), std::abs(c(1, 1))});
    }
  }
  return res;
}

bool is_twisted(const LoopMatrix& l, double tol) {
  return twist_residual(l) <= tol;
}

double unitarity_residual(const LoopMatrix& l, int samples) {
  double res = 0.0;
  for (int m = 0; m < samples; ++m) {
    const double arg = 2.0 * M_PI * m / samples;
    const Complex lambda = l.radius() * Complex{std::cos(arg), std::sin(arg)};
    const Mat2 g = l.evaluate(lambda);
    res = std::max(res, (g.adjoint() * g - Mat2::Identity()).cwiseAbs().maxCoeff());
    res = std::max(res, std::abs(g.determinant() - 1.0));
  }
  return res;
}

bool is_unitary_on_circle(const LoopMatrix& l, int samples, double tol) {
  return unitarity_residual(l, samples) <= tol;
}

bool is_positive_loop(const LoopMatrix& l, double tol) {
  for (int k = -l.degree(); k <= -1; ++k) {
    if (l.coeff(k).cwiseAbs().maxCoeff() > tol) return false;
  }
  const Mat2 c0 = l.coeff(0);
  if (std::abs(c0(0, 1)) > tol || std::abs(c0(1, 0)) > tol) return false;
  if (std::abs(c0(0, 0).imag()) > tol || std::abs(c0(1, 1).imag()) > tol) {
    return false;
  }
  if (c0(0, 0).real() <= 0.0 || c0(1, 1).real() <= 0.0) return false;
  if (std::abs(c0(0, 0).real() * c0(1, 1).real() - 1.0) > 64 * tol) return false;
  for (int m = 0; m < 16; ++m) {
    const double arg = 2.0 * M_PI * m / 16;
    const Complex lambda = l.radius() * Complex{std::cos(arg), std::sin(arg)};
    if (std::abs(l.evaluate(lambda).determinant() - 1.0) > 64 * tol) return false;
  }
  return true;
}

std::vector<Mat2> sample_on_circle(const LoopMatrix& l, int samples) {
  std::vector<Mat2> out(samples);
  for (int m = 0; m < samples; ++m) {
    const double arg = 2.0 * M_PI * m / samples;
    out[m] = l.evaluate(l.radius() * Complex{std::cos(arg), std::sin(arg)});
  }
  return out;
}

LoopMatrix from_samples(std::span<const Mat2> values, int degree,
                        double radius) {
  const int m_count = static_cast<int>(values.size());
  if (m_count < 2 * degree + 2) {
    throw std::invalid_argument(
        "from_samples: need at least 2N+2 samples for degree N");
  }
  LoopMatrix out(degree, radius);
  for (int k = -degree; k <= degree; ++k) {
    Mat2 acc = Mat2::Zero();
    for (int m = 0; m < m_count; ++m) {
      const double arg = -2.0 * M_PI * k * m / m_count;
      acc += values[m] * Complex{std::cos(arg), std::sin(arg)};
    }
    acc /= double(m_count) * std::pow(radius, k);
    out.set_coeff(k, acc);
  }
  return out;
}

Mat2 mat2_exp(const Mat2& a) {
  // Split off the trace; on the trace-free part exp = cosh(mu) Id +
  // sinh(mu)/mu * A0 with mu^2 = -det(A0).
  const Complex half_tr = 0.5 * a.trace();
  const Mat2 a0 = a - half_tr * Mat2::Identity();
  const Complex mu2 = -a0.determinant();
  const Complex mu = std::sqrt(mu2);
  Complex ch, shm;  // cosh(mu), sinh(mu)/mu
  if (std::abs(mu) < 1e-8) {
    // series for sinh(mu)/mu around 0
    ch = 1.0 + mu2 / 2.0 + mu2 * mu2 / 24.0;
    shm = 1.0 + mu2 / 6.0 + mu2 * mu2 / 120.0;
  } else {
    ch = std::cosh(mu);
    shm = std::sinh(mu) / mu;
  }
  return std::exp(half_tr) * (ch * Mat2::Identity() + shm * a0);
}

}  // namespace dpw
