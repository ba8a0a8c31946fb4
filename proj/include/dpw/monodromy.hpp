// Monodromy of the frame along the deck generator tau: w -> w + 2*pi*i and
// the two closing conditions of the period theorem.

#ifndef DPW_MONODROMY_HPP
#define DPW_MONODROMY_HPP

#include "dpw/dpw_core.hpp"

namespace dpw {

struct MonodromyMatrix {
  LoopMatrix chi;
  std::string generator = "tau: w -> w + 2*pi*i";
};

struct ClosingReport {
  double cond1_residual = 0.0;  // distance of chi(lambda0) to the nearer of +-Id
  int cond1_sign = 1;           // sign of the nearer of +-Id
  double cond2_residual = 0.0;  // max norm of d_lambda chi at lambda0
  bool cond1_pass = false;
  bool cond2_pass = false;
  double tolerance = 1e-7;
};

/// chi(tau) = Phi(w0 + 2*pi*i) * Phi(w0)^-1, by integrating once around the
/// puncture (the closed form is never consulted here, so this can serve as an
/// independent check against it).
MonodromyMatrix compute_monodromy(const DPWTriple& triple, int degree,
                                  int steps_per_unit = 64);

/// True iff the potential is anti-hermitian along the deck curve through the
/// base point (i.e. A(w)*i is skew at each sample of Re w = const) and the
/// initial frame is unitary; then the frame monodromy equals chi.
bool certify_unitary_monodromy(const DPWTriple& triple, int samples = 32,
                               double tol = kDefaultTol);

ClosingReport closing_conditions(const MonodromyMatrix& monodromy,
                                 Complex lambda0, double tol = 1e-7);

}  // namespace dpw

#endif  // DPW_MONODROMY_HPP
