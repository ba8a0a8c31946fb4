// Truncated matrix Laurent series ("loops") on a circle in the
// spectral-parameter plane, together with the twisting involution and the
// subgroup membership predicates used throughout the pipeline.

#ifndef DPW_LOOP_MATRIX_HPP
#define DPW_LOOP_MATRIX_HPP

#include <complex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace dpw {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;

constexpr double kDefaultTol = 1e-9;

/// sigma = diag[1, -1]; conjugation by sigma together with lambda -> -lambda
/// defines the twisting involution.
Mat2 sigma_matrix();

/// Basis of su(2): e1 = i*sigma, e2 = off[1,-1], e3 = off[i,i].
Mat2 su2_e1();
Mat2 su2_e2();
Mat2 su2_e3();

/// A point of R^3 identified with the su(2) element x1*e1 + x2*e2 + x3*e3.
struct SU2Vector {
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;

  Mat2 to_matrix() const;
  static SU2Vector from_matrix(const Mat2& m, double tol = 1e-6);

  double norm() const;
};

SU2Vector operator+(const SU2Vector& u, const SU2Vector& v);
SU2Vector operator-(const SU2Vector& u, const SU2Vector& v);
SU2Vector operator*(double s, const SU2Vector& v);
double dot(const SU2Vector& u, const SU2Vector& v);

/// Matrix Laurent polynomial lambda -> sum_{k=-N}^{N} c_k lambda^k on the
/// circle |lambda| = radius. Immutable in spirit: operations return new loops.
class LoopMatrix {
 public:
  explicit LoopMatrix(int degree, double radius = 1.0);

  static LoopMatrix identity(int degree, double radius = 1.0);

  int degree() const { return degree_; }
  double radius() const { return radius_; }

  /// Coefficient c_k; zero matrix outside [-N, N].
  Mat2 coeff(int k) const;
  void set_coeff(int k, const Mat2& m);

  Mat2 evaluate(Complex lambda) const;

  /// Max norm over all coefficient entries.
  double max_coeff_norm() const;

  /// Mass discarded by the truncation that produced this loop (diagnostic).
  double truncation_loss() const { return truncation_loss_; }
  void set_truncation_loss(double loss) { truncation_loss_ = loss; }

  /// Same coefficients re-housed at a (possibly different) truncation degree.
  LoopMatrix truncated(int new_degree) const;

  std::string dump_json() const;

 private:
  int degree_;
  double radius_;
  std::vector<Mat2> coeffs_;  // index k + degree_
  double truncation_loss_ = 0.0;
};

/// Cauchy convolution of coefficients, truncated to max(deg1, deg2) + headroom.
LoopMatrix multiply(const LoopMatrix& l1, const LoopMatrix& l2,
                    int headroom = 0);

/// d/dlambda of the series: coefficient k of the output is (k+1)*c_{k+1}.
LoopMatrix lambda_derivative(const LoopMatrix& l);

/// Adjoint loop lambda -> L(1/conj(lambda))^*; coefficient k is c_{-k}^*.
/// On the unit circle evaluate(star(L), lambda) = evaluate(L, lambda)^*.
LoopMatrix star(const LoopMatrix& l);

/// Twisted: diagonal entries carry only even modes, off-diagonal only odd.
bool is_twisted(const LoopMatrix& l, double tol = kDefaultTol);

/// Residual of the twist predicate (max norm of wrong-parity entries).
double twist_residual(const LoopMatrix& l);

/// Unitary with det 1 at `samples` roots of unity.
bool is_unitary_on_circle(const LoopMatrix& l, int samples = 64,
                          double tol = kDefaultTol);
double unitarity_residual(const LoopMatrix& l, int samples = 64);

/// No negative modes, det = 1 on samples, c_0 = diag[a, 1/a] with a > 0.
bool is_positive_loop(const LoopMatrix& l, double tol = kDefaultTol);

/// Pointwise values at the M-th roots of unity (times radius).
std::vector<Mat2> sample_on_circle(const LoopMatrix& l, int samples);

/// Discrete Fourier analysis of pointwise samples at the M-th roots of unity;
/// exact for loops of degree <= N when M >= 2N+2.
LoopMatrix from_samples(std::span<const Mat2> values, int degree,
                        double radius = 1.0);

/// exp(A) for a 2x2 complex matrix, via the trace-free closed form.
Mat2 mat2_exp(const Mat2& a);

}  // namespace dpw

#endif  // DPW_LOOP_MATRIX_HPP
