#include "dpw/dpw_core.hpp"

#include <algorithm>
#include <cmath>

namespace dpw {

namespace {

// One RK4 step of dPhi/ds = Phi * A(w(s)) * dw along a straight segment.
LoopMatrix rk4_step(const LoopMatrix& phi, const Potential& pot, Complex w,
                    Complex dw) {
  auto slope = [&](const LoopMatrix& state, Complex at) {
    LoopMatrix a = pot.coefficient(at);
    LoopMatrix d = multiply(state, a);
    LoopMatrix out(phi.degree(), phi.radius());
    for (int k = -out.degree(); k <= out.degree(); ++k) {
      out.set_coeff(k, dw * d.coeff(k));
    }
    return out;
  };
  const LoopMatrix k1 = slope(phi, w);
  auto advance = [&](const LoopMatrix& k, double factor) {
    LoopMatrix s(phi.degree(), phi.radius());
    for (int j = -s.degree(); j <= s.degree(); ++j) {
      s.set_coeff(j, phi.coeff(j) + factor * k.coeff(j));
    }
    return s;
  };
  const LoopMatrix k2 = slope(advance(k1, 0.5), w + 0.5 * dw);
  const LoopMatrix k3 = slope(advance(k2, 0.5), w + 0.5 * dw);
  const LoopMatrix k4 = slope(advance(k3, 1.0), w + dw);
  LoopMatrix out(phi.degree(), phi.radius());
  for (int j = -out.degree(); j <= out.degree(); ++j) {
    out.set_coeff(j, phi.coeff(j) + (k1.coeff(j) + 2.0 * k2.coeff(j) +
                                     2.0 * k3.coeff(j) + k4.coeff(j)) / 6.0);
  }
  return out;
}

}  // namespace

LoopMatrix integrate_frame(const DPWTriple& triple,
                           std::span<const Complex> path,
                           int steps_per_unit) {
  if (path.empty()) return triple.initial_frame;
  if (std::abs(path.front() - triple.base_point) > 1e-12) {
    throw std::invalid_argument(
        "integrate_frame: path must start at the base point");
  }
  if (steps_per_unit <= 0) {
    throw std::invalid_argument("integrate_frame: step density must be > 0");
  }
  LoopMatrix phi = triple.initial_frame;
  for (size_t seg = 0; seg + 1 < path.size(); ++seg) {
    const Complex from = path[seg];
    const Complex to = path[seg + 1];
    const double len = std::abs(to - from);
    if (len == 0.0) continue;
    for (const Complex& pole : triple.potential.poles) {
      // distance from the pole to the segment
      const Complex d = to - from;
      double s = ((pole - from) * std::conj(d)).real() / (len * len);
      s = std::clamp(s, 0.0, 1.0);
      if (std::abs(from + s * d - pole) < 1e-9) {
        throw std::domain_error(
            "integrate_frame: path passes through a pole of the potential");
      }
    }
    const int steps = std::max(8, int(std::ceil(len * steps_per_unit)));
    const Complex dw = (to - from) / double(steps);
    if (std::abs(dw) < 1e-15) {
      throw std::runtime_error("integrate_frame: step size underflow");
    }
    Complex w = from;
    for (int i = 0; i < steps; ++i) {
      phi = rk4_step(phi, triple.potential, w, dw);
      w += dw;
    }
  }
  return phi;
}

LoopMatrix frame_at(const DPWTriple& triple, Complex w, int steps_per_unit) {
  if (triple.potential.closed_form) {
    return multiply(triple.initial_frame,
                    triple.potential.closed_form(w - triple.base_point));
  }
  const Complex path[2] = {triple.base_point, w};
  return integrate_frame(triple, path, steps_per_unit);
}

namespace {

Mat2 sym_bobenko_matrix(const LoopMatrix& frame, Complex lambda0, double H,
                        double normal_sign) {
  if (std::abs(std::abs(lambda0) - 1.0) > 1e-12) {
    throw std::invalid_argument("sym_bobenko: |lambda0| must be 1");
  }
  const Mat2 f = frame.evaluate(lambda0);
  const double unit_err =
      (f.adjoint() * f - Mat2::Identity()).cwiseAbs().maxCoeff();
  if (unit_err > 1e-5) {
    throw std::domain_error("sym_bobenko: frame is not unitary at lambda0 "
                            "(residual " + std::to_string(unit_err) + ")");
  }
  const Mat2 df = lambda_derivative(frame).evaluate(lambda0);
  const Mat2 finv = f.inverse();
  const Complex i{0.0, 1.0};
  return (-1.0 / H) * (i * lambda0 * df * finv +
                       normal_sign * 0.5 * i * f * sigma_matrix() * finv);
}

}  // namespace

SU2Vector sym_bobenko(const LoopMatrix& frame, Complex lambda0, double H) {
  return SU2Vector::from_matrix(sym_bobenko_matrix(frame, lambda0, H, 1.0));
}

SU2Vector sym_bobenko_parallel(const LoopMatrix& frame, Complex lambda0,
                               double H) {
  return SU2Vector::from_matrix(sym_bobenko_matrix(frame, lambda0, H, -1.0));
}

ImmersionPoint immerse_full(const DPWTriple& triple, Complex w, int degree,
                            double tol) {
  const LoopMatrix phi = frame_at(triple, w);
  const IwasawaFactors factors = iwasawa_decompose(phi, degree, tol);
  ImmersionPoint out;
  out.point = sym_bobenko(factors.F, triple.lambda0, triple.mean_curvature);
  out.parallel_point =
      sym_bobenko_parallel(factors.F, triple.lambda0, triple.mean_curvature);
  out.b0_upper_left = factors.B.coeff(0)(0, 0).real();
  out.iwasawa_residual = factors.residual;
  return out;
}

SU2Vector immerse(const DPWTriple& triple, Complex w, int degree, double tol) {
  return immerse_full(triple, w, degree, tol).point;
}

double metric_density(double r0, Complex a1) {
  return 4.0 * std::pow(r0, 4) * std::norm(a1);
}

Complex hopf_coefficient(Complex a1, Complex a2) {
  return -0.5 * a1 * a2;
}

}  // namespace dpw
