#include <doctest.h>

#include "dpw/delaunay.hpp"
#include "dpw/loop_matrix.hpp"
#include "test_support.hpp"

using namespace dpw;
using dpw::testing::circle_distance;
using dpw::testing::coeff_distance;
using dpw::testing::random_twisted_loop;

namespace {

LoopMatrix cylinder_residue_loop() {
  DelaunayParams params;  // a = b = 1/4, c = 0
  return delaunay_residue_loop(params);
}

LoopMatrix off_mode_loop(int mode, Complex u, Complex v, int degree = 2) {
  LoopMatrix l(degree);
  Mat2 m = Mat2::Zero();
  m(0, 1) = u;
  m(1, 0) = v;
  l.set_coeff(mode, m);
  return l;
}

}  // namespace

TEST_CASE("evaluate") {
  const LoopMatrix id = LoopMatrix::identity(2);
  CHECK((id.evaluate(Complex{0.0, 1.0}) - Mat2::Identity()).cwiseAbs()
            .maxCoeff() == doctest::Approx(0.0));

  const LoopMatrix single = off_mode_loop(-1, 1.0, 1.0);
  const Mat2 at_two = single.evaluate(2.0);
  CHECK(std::abs(at_two(0, 1) - 0.5) < 1e-15);
  CHECK(std::abs(at_two(1, 0) - 0.5) < 1e-15);
  CHECK(std::abs(at_two(0, 0)) == 0.0);

  const Mat2 xi = cylinder_residue_loop().evaluate(1.0);
  CHECK(std::abs(xi(0, 0)) < 1e-15);
  CHECK(std::abs(xi(0, 1) - 0.5) < 1e-15);
  CHECK(std::abs(xi(1, 0) - 0.5) < 1e-15);

  CHECK_THROWS_AS(single.evaluate(0.0), std::domain_error);
  CHECK_NOTHROW(id.evaluate(0.0));
}

TEST_CASE("multiply") {
  std::mt19937 rng(7);
  const LoopMatrix l = random_twisted_loop(rng, 2);
  CHECK(coeff_distance(multiply(l, LoopMatrix::identity(2)), l) < 1e-15);

  // mode addition: c_-1 times c_1 lands in c_0
  const LoopMatrix neg = off_mode_loop(-1, 1.0, 2.0);
  const LoopMatrix pos = off_mode_loop(1, 3.0, -1.0);
  const LoopMatrix prod = multiply(neg, pos);
  CHECK((prod.coeff(0) - neg.coeff(-1) * pos.coeff(1)).cwiseAbs().maxCoeff() <
        1e-15);
  for (int k = -2; k <= 2; ++k) {
    if (k != 0) CHECK(prod.coeff(k).cwiseAbs().maxCoeff() == 0.0);
  }

  // pointwise oracle over random twisted loops
  for (int trial = 0; trial < 20; ++trial) {
    const LoopMatrix l1 = random_twisted_loop(rng, 2);
    const LoopMatrix l2 = random_twisted_loop(rng, 2);
    const LoopMatrix p = multiply(l1, l2, 2);
    double worst = 0.0;
    for (int m = 0; m < 64; ++m) {
      const double arg = 2.0 * M_PI * m / 64;
      const Complex lambda{std::cos(arg), std::sin(arg)};
      worst = std::max(worst,
                       (p.evaluate(lambda) -
                        l1.evaluate(lambda) * l2.evaluate(lambda))
                           .cwiseAbs().maxCoeff());
    }
    CHECK(worst < 1e-12);
    CHECK(is_twisted(p, 1e-13));
  }

  CHECK_THROWS_AS(multiply(LoopMatrix::identity(2, 1.0),
                           LoopMatrix::identity(2, 0.5)),
                  std::invalid_argument);
}

TEST_CASE("multiply records truncation loss") {
  const LoopMatrix neg = off_mode_loop(-2, 1.0, 1.0);
  const LoopMatrix prod = multiply(neg, neg);  // c_-4 discarded at degree 2
  CHECK(prod.truncation_loss() > 0.9);
}

TEST_CASE("lambda_derivative") {
  CHECK(lambda_derivative(LoopMatrix::identity(3)).max_coeff_norm() == 0.0);

  LoopMatrix linear(2);
  Mat2 m;
  m << 1.0, 2.0, 3.0, 4.0;
  linear.set_coeff(1, m);
  const LoopMatrix d = lambda_derivative(linear);
  CHECK((d.coeff(0) - m).cwiseAbs().maxCoeff() < 1e-15);
  CHECK(d.coeff(1).cwiseAbs().maxCoeff() == 0.0);

  // finite-difference oracle at lambda = 1
  const LoopMatrix xi = cylinder_residue_loop();
  const double h = 1e-5;
  const Mat2 fd = (xi.evaluate(1.0 + h) - xi.evaluate(1.0 - h)) / (2.0 * h);
  CHECK((lambda_derivative(xi).evaluate(1.0) - fd).cwiseAbs().maxCoeff() <
        1e-9);
}

TEST_CASE("is_twisted") {
  std::mt19937 rng(11);
  CHECK(is_twisted(random_twisted_loop(rng, 3)));
  CHECK(is_twisted(cylinder_residue_loop()));
  CHECK_FALSE(is_twisted(off_mode_loop(0, 1.0, 1.0)));

  // d/dlambda flips mode parity; multiplying back by lambda restores it.
  const LoopMatrix l = random_twisted_loop(rng, 3);
  const LoopMatrix d = lambda_derivative(l);
  CHECK_FALSE(is_twisted(d, 1e-13));
  LoopMatrix lambda_loop(1);
  lambda_loop.set_coeff(1, Mat2::Identity());
  CHECK(is_twisted(multiply(lambda_loop, d, 1), 1e-13));
}

TEST_CASE("is_unitary_on_circle") {
  CHECK(is_unitary_on_circle(LoopMatrix::identity(2)));

  LoopMatrix diag(1);
  Mat2 k;
  k << 2.0, 0.0, 0.0, 0.5;
  diag.set_coeff(0, k);
  CHECK_FALSE(is_unitary_on_circle(diag));

  // exp(i t xi_-1) is unitary on the circle (hermitian generator)
  DelaunayParams params;
  const double t = 0.7;
  const int samples = 256;
  std::vector<Mat2> values(samples);
  for (int m = 0; m < samples; ++m) {
    const double arg = 2.0 * M_PI * m / samples;
    const Complex lambda{std::cos(arg), std::sin(arg)};
    values[m] = mat2_exp(Complex{0.0, t} * delaunay_residue(params, lambda));
  }
  const LoopMatrix rot = from_samples(values, 32);
  CHECK(is_unitary_on_circle(rot, 64, 1e-9));
}

TEST_CASE("is_positive_loop") {
  CHECK(is_positive_loop(LoopMatrix::identity(2)));
  CHECK_FALSE(is_positive_loop(off_mode_loop(-1, 1.0, 1.0)));
  LoopMatrix diag(1);
  Mat2 k;
  k << 2.0, 0.0, 0.0, 0.5;
  diag.set_coeff(0, k);
  CHECK(is_positive_loop(diag));
}

TEST_CASE("star") {
  std::mt19937 rng(13);
  CHECK(coeff_distance(star(LoopMatrix::identity(2)),
                       LoopMatrix::identity(2)) == 0.0);

  const LoopMatrix l = random_twisted_loop(rng, 3);
  CHECK(coeff_distance(star(star(l)), l) == 0.0);

  // star of a unitary-on-circle loop is its pointwise inverse
  DelaunayParams params;
  const int samples = 140;
  std::vector<Mat2> values(samples);
  for (int m = 0; m < samples; ++m) {
    const double arg = 2.0 * M_PI * m / samples;
    const Complex lambda{std::cos(arg), std::sin(arg)};
    values[m] = mat2_exp(Complex{0.0, 0.7} * delaunay_residue(params, lambda));
  }
  const LoopMatrix f = from_samples(values, 32);
  CHECK(circle_distance(multiply(star(f), f, 32), LoopMatrix::identity(32)) <
        1e-9);
}

TEST_CASE("from_samples") {
  const std::vector<Mat2> id_samples(8, Mat2::Identity());
  CHECK(coeff_distance(from_samples(id_samples, 2), LoopMatrix::identity(2)) <
        1e-15);

  // pure mode lambda^-1 off[1,1]
  std::vector<Mat2> mode(8);
  for (int m = 0; m < 8; ++m) {
    const double arg = 2.0 * M_PI * m / 8;
    const Complex lambda{std::cos(arg), std::sin(arg)};
    Mat2 v = Mat2::Zero();
    v(0, 1) = 1.0 / lambda;
    v(1, 0) = 1.0 / lambda;
    mode[m] = v;
  }
  const LoopMatrix recovered = from_samples(mode, 2);
  CHECK(coeff_distance(recovered, off_mode_loop(-1, 1.0, 1.0)) < 1e-14);

  // band-limited exponential round trip at high resolution
  DelaunayParams params;
  const int samples = 256;
  std::vector<Mat2> values(samples);
  for (int m = 0; m < samples; ++m) {
    const double arg = 2.0 * M_PI * m / samples;
    const Complex lambda{std::cos(arg), std::sin(arg)};
    values[m] = mat2_exp(std::log(2.0) * delaunay_residue(params, lambda));
  }
  const LoopMatrix loop = from_samples(values, 32);
  double worst = 0.0;
  for (int m = 0; m < samples; ++m) {
    const double arg = 2.0 * M_PI * m / samples;
    const Complex lambda{std::cos(arg), std::sin(arg)};
    worst = std::max(worst,
                     (loop.evaluate(lambda) - values[m]).cwiseAbs().maxCoeff());
  }
  CHECK(worst < 1e-10);

  CHECK_THROWS_AS(from_samples(std::vector<Mat2>(4, Mat2::Identity()), 2),
                  std::invalid_argument);

  // from_samples inverts pointwise evaluation for band-limited loops
  std::mt19937 rng(17);
  const LoopMatrix l = random_twisted_loop(rng, 3);
  CHECK(coeff_distance(from_samples(sample_on_circle(l, 16), 3), l) < 1e-13);
}

TEST_CASE("su2 vector identification") {
  const SU2Vector v{0.3, -1.2, 0.7};
  const Mat2 m = v.to_matrix();
  const SU2Vector back = SU2Vector::from_matrix(m);
  CHECK(std::abs(back.x1 - v.x1) < 1e-15);
  CHECK(std::abs(back.x2 - v.x2) < 1e-15);
  CHECK(std::abs(back.x3 - v.x3) < 1e-15);
  // squared norm equals det of the matrix form
  CHECK(std::abs(m.determinant().real() - v.norm() * v.norm()) < 1e-12);
  CHECK(std::abs(m.determinant().imag()) < 1e-15);

  Mat2 bad;
  bad << 1.0, 0.0, 0.0, 1.0;
  CHECK_THROWS_AS(SU2Vector::from_matrix(bad), std::domain_error);
}

TEST_CASE("json dump is parseable shape") {
  const LoopMatrix id = LoopMatrix::identity(1);
  const std::string dump = id.dump_json();
  CHECK(dump.find("\"k\":0") != std::string::npos);
}
