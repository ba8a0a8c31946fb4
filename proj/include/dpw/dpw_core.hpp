// The three DPW steps for an invariant potential on the universal cover:
// solve dPhi = Phi xi, Iwasawa-split pointwise, evaluate the Sym-Bobenko
// formula. Also the metric density and Hopf coefficient formulas.
//
// All z-dependence is expressed in the universal-cover coordinate w; for the
// twice-punctured sphere C* the covering map is z = exp(w) and the deck
// generator is w -> w + 2*pi*i.

#ifndef DPW_DPW_CORE_HPP
#define DPW_DPW_CORE_HPP

#include <functional>
#include <optional>

#include "dpw/iwasawa.hpp"
#include "dpw/loop_matrix.hpp"

namespace dpw {

/// Loop-valued 1-form generator xi = A(w) dw on the universal cover.
struct Potential {
  /// A(w); returned loops must be twisted with lambda-modes >= -1.
  std::function<LoopMatrix(Complex)> coefficient;
  /// Poles of A in the cover coordinate (empty for the Delaunay potential,
  /// whose pole at z = 0 is pushed to infinity by the covering map).
  std::vector<Complex> poles;
  /// Optional closed-form normalized solution Psi(w) of dPsi = Psi*A*dw with
  /// Psi(0) = Id. Only valid for w-independent coefficients, where the full
  /// frame is Phi(w) = Phi0 * Psi(w - w0).
  std::function<LoopMatrix(Complex)> closed_form;
};

struct DPWTriple {
  Potential potential;
  LoopMatrix initial_frame = LoopMatrix::identity(32);
  Complex base_point{0.0, 0.0};
  double mean_curvature = 1.0;
  Complex lambda0{1.0, 0.0};
};

/// Solve dPhi = Phi xi by fixed-step RK4 on the loop coefficients along a
/// polyline in the cover, starting at the triple's base point. `steps_per_unit`
/// is the RK4 step density per unit arc length.
LoopMatrix integrate_frame(const DPWTriple& triple,
                           std::span<const Complex> path,
                           int steps_per_unit = 64);

/// The frame at cover point w: closed form when the potential advertises one,
/// otherwise RK4 along the straight segment from the base point.
LoopMatrix frame_at(const DPWTriple& triple, Complex w,
                    int steps_per_unit = 64);

/// f = -(1/H) (i*lambda*(d_lambda F) F^-1 + (i/2) F sigma F^-1) at lambda0,
/// converted to R^3 via the su(2) basis e1, e2, e3.
SU2Vector sym_bobenko(const LoopMatrix& frame, Complex lambda0, double H);

/// Same with the sign of the (i/2) F sigma F^-1 term flipped; the CMC
/// parallel surface at normal distance 1/H.
SU2Vector sym_bobenko_parallel(const LoopMatrix& frame, Complex lambda0,
                               double H);

struct ImmersionPoint {
  SU2Vector point;
  SU2Vector parallel_point;
  double b0_upper_left = 1.0;    // upper-left entry of B(0)
  double iwasawa_residual = 0.0;
};

/// The composed pipeline at one cover point.
ImmersionPoint immerse_full(const DPWTriple& triple, Complex w, int degree,
                            double tol = kDefaultTol);

SU2Vector immerse(const DPWTriple& triple, Complex w, int degree,
                  double tol = kDefaultTol);

/// Conformal metric density 4 r0^4 |a1|^2 (with respect to |dw|^2 when a1 is
/// the dw-coefficient).
double metric_density(double r0, Complex a1);

/// Hopf differential coefficient Q = -(1/2) a1 a2.
Complex hopf_coefficient(Complex a1, Complex a2);

}  // namespace dpw

#endif  // DPW_DPW_CORE_HPP
