// Numerical Iwasawa decomposition g = F * B of twisted loops: F unitary on
// the circle, B holomorphic in the disk with B(0) = diag[rho, 1/rho], rho > 0.
// The inner engine is a Wiener-Hopf (Bauer-type) spectral factorization of the
// positive loop h = g* g via Cholesky factorization of growing finite sections
// of its block Toeplitz matrix.

#ifndef DPW_IWASAWA_HPP
#define DPW_IWASAWA_HPP

#include "dpw/loop_matrix.hpp"

namespace dpw {

struct IwasawaFactors {
  LoopMatrix F;
  LoopMatrix B;
  double residual = 0.0;  // max norm of g - F*B on circle samples
};

/// Thrown when the finite-section factorization cannot reach the requested
/// tolerance at the given truncation degree.
class TruncationError : public std::runtime_error {
 public:
  TruncationError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// Factor a hermitian positive-definite twisted loop h as star(B)*B with B a
/// positive loop. Throws std::domain_error if h is not positive-definite at
/// some circle sample.
LoopMatrix spectral_factorize_positive(const LoopMatrix& h, int degree,
                                       double tol = kDefaultTol);

/// Iwasawa-decompose a twisted loop with det 1 on the circle.
IwasawaFactors iwasawa_decompose(const LoopMatrix& g, int degree,
                                 double tol = kDefaultTol);

}  // namespace dpw

#endif  // DPW_IWASAWA_HPP
