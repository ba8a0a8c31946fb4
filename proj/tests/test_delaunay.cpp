#include <doctest.h>

#include <random>

#include "dpw/delaunay.hpp"
#include "test_support.hpp"

using namespace dpw;
using namespace dpw::testing;

TEST_CASE("residue substitution for the cylinder") {
  DelaunayParams params;  // a = b = 1/4, c = 0
  const Mat2 xi = delaunay_residue(params, Complex{1, 0});
  CHECK(std::abs(xi(0, 0)) < 1e-15);
  CHECK(std::abs(xi(0, 1) - 0.5) < 1e-15);
  CHECK(std::abs(xi(1, 0) - 0.5) < 1e-15);
  CHECK(std::abs(xi(1, 1)) < 1e-15);
}

TEST_CASE("residue loop is twisted and matches mu squared") {
  std::mt19937 rng(91);
  std::uniform_real_distribution<double> unif(-0.7, 0.7);
  for (int trial = 0; trial < 10; ++trial) {
    DelaunayParams params;
    params.a = Complex{unif(rng), unif(rng)};
    params.b = Complex{unif(rng), unif(rng)};
    params.c = unif(rng);
    const LoopMatrix loop = delaunay_residue_loop(params);
    CHECK(is_twisted(loop, 1e-14));
    for (int m = 0; m < 16; ++m) {
      const double arg = 2.0 * M_PI * m / 16;
      const Complex lambda{std::cos(arg), std::sin(arg)};
      const Complex mu = delaunay_mu(params, lambda);
      const Complex det = loop.evaluate(lambda).determinant();
      CHECK(std::abs(mu * mu + det) < 1e-12);
    }
  }
}

TEST_CASE("mu at reference points") {
  DelaunayParams cylinder;
  CHECK(std::abs(delaunay_mu(cylinder, Complex{1, 0}) - 0.5) < 1e-14);
  CHECK(std::abs(delaunay_mu(cylinder, Complex{0, 1})) < 1e-14);
  DelaunayParams sphere;
  sphere.a = 0.5;
  sphere.b = 0.0;
  CHECK(std::abs(delaunay_mu(sphere, Complex{1, 0}) - 0.5) < 1e-14);
}

TEST_CASE("closed form frame at z = 1 and z = 2") {
  DelaunayParams params;
  const LoopMatrix at_one = closed_form_frame(params, Complex{0, 0}, 16);
  CHECK(coeff_distance(at_one, LoopMatrix::identity(16)) < 1e-13);

  const LoopMatrix at_two = closed_form_frame(params, std::log(2.0), 16);
  const Mat2 value = at_two.evaluate(Complex{1, 0});
  const double ch = std::cosh(std::log(2.0) / 2.0);
  const double sh = std::sinh(std::log(2.0) / 2.0);
  CHECK(std::abs(value(0, 0) - ch) < 1e-12);
  CHECK(std::abs(value(0, 1) - sh) < 1e-12);
  CHECK(std::abs(value(1, 0) - sh) < 1e-12);
  CHECK(std::abs(value(1, 1) - ch) < 1e-12);
}

TEST_CASE("angular and radial parts of the frame commute") {
  std::mt19937 rng(92);
  std::uniform_real_distribution<double> unif(-0.5, 0.5);
  for (int trial = 0; trial < 5; ++trial) {
    DelaunayParams params;
    params.a = Complex{unif(rng), unif(rng)};
    params.b = Complex{unif(rng), unif(rng)};
    params.c = unif(rng);
    const double rho = unif(rng);
    const double t = 2.0 * unif(rng);
    const LoopMatrix whole = closed_form_frame(params, Complex{rho, t}, 20);
    const LoopMatrix angular = closed_form_frame(params, Complex{0.0, t}, 20);
    const LoopMatrix radial = closed_form_frame(params, Complex{rho, 0.0}, 20);
    CHECK(circle_distance(whole, multiply(angular, radial, 0)) < 1e-10);
  }
}

TEST_CASE("closed form monodromy of the cylinder") {
  DelaunayParams params;
  const MonodromyMatrix mono = closed_form_monodromy(params, 24);
  const Mat2 chi1 = mono.chi.evaluate(Complex{1, 0});
  CHECK((chi1 + Mat2::Identity()).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(is_unitary_on_circle(mono.chi, 64, 1e-10));
}

TEST_CASE("closing report flags") {
  DelaunayParams cylinder;
  DelaunayClosingReport rep = check_closing(cylinder);
  CHECK(rep.pass);
  CHECK(rep.simply_wrapped);
  CHECK(rep.ab_real);
  CHECK(rep.mu1 == doctest::Approx(0.5).epsilon(1e-12));

  DelaunayParams unduloid;
  unduloid.a = 0.3;
  unduloid.b = 0.2;
  rep = check_closing(unduloid);
  CHECK(rep.pass);
  CHECK(rep.simply_wrapped);

  DelaunayParams open_params;
  open_params.a = 0.3;
  open_params.b = 0.3;
  rep = check_closing(open_params);
  CHECK_FALSE(rep.pass);
  CHECK_FALSE(rep.mu1_half_integer);
  CHECK_FALSE(rep.conditions.cond1_pass);
}

TEST_CASE("rotation normalization") {
  const RotationNormalization same = rotation_normalize(0.3, 0.2);
  CHECK(same.a == doctest::Approx(0.3));
  CHECK(same.b == doctest::Approx(0.2));
  CHECK((same.gauge - Mat2::Identity()).cwiseAbs().maxCoeff() < 1e-12);

  const RotationNormalization quarter =
      rotation_normalize(Complex{0, 0.25}, Complex{0, -0.25});
  CHECK(quarter.a == doctest::Approx(0.25));
  CHECK(quarter.b == doctest::Approx(0.25));

  const RotationNormalization sphere =
      rotation_normalize(Complex{0, 0.5}, Complex{0, 0});
  CHECK(sphere.a == doctest::Approx(0.5));
  CHECK(std::abs(sphere.b) < 1e-12);

  CHECK_THROWS_AS(rotation_normalize(Complex{0, 0.25}, Complex{0.25, 0}),
                  std::domain_error);
}

TEST_CASE("gauge conjugation makes the residue real") {
  DelaunayParams params;
  params.a = Complex{0, 0.25};
  params.b = Complex{0, -0.25};
  const RotationNormalization norm = rotation_normalize(params.a, params.b);
  DelaunayParams real_params;
  real_params.a = norm.a;
  real_params.b = norm.b;
  real_params.c = params.c;
  for (int m = 0; m < 8; ++m) {
    const double arg = 2.0 * M_PI * m / 8;
    const Complex lambda{std::cos(arg), std::sin(arg)};
    const Mat2 gauged = norm.gauge.inverse() *
                        delaunay_residue(params, lambda) * norm.gauge;
    const Mat2 expected = delaunay_residue(real_params, lambda);
    CHECK((gauged - expected).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("neck and bulge radii") {
  DelaunayParams cylinder;
  auto [neck, bulge] = neck_bulge_radii(cylinder);
  CHECK(neck == doctest::Approx(0.5));
  CHECK(bulge == doctest::Approx(0.5));

  DelaunayParams sphere;
  sphere.a = 0.5;
  sphere.b = 0.0;
  std::tie(neck, bulge) = neck_bulge_radii(sphere);
  CHECK(neck == doctest::Approx(0.0));
  CHECK(bulge == doctest::Approx(1.0));

  DelaunayParams unduloid;
  unduloid.a = 0.3;
  unduloid.b = 0.2;
  std::tie(neck, bulge) = neck_bulge_radii(unduloid);
  CHECK(neck == doctest::Approx(0.4));
  CHECK(bulge == doctest::Approx(0.6));

  DelaunayParams no_roots;
  no_roots.a = 0.3;
  no_roots.b = 0.3;
  CHECK_THROWS_AS(neck_bulge_radii(no_roots), std::domain_error);
}

TEST_CASE("Vieta relations for random closing parameters") {
  std::mt19937 rng(93);
  std::uniform_real_distribution<double> unif(0.05, 0.45);
  for (int trial = 0; trial < 10; ++trial) {
    DelaunayParams params;
    const double a = unif(rng);
    params.a = a;
    params.b = 0.5 - a;
    params.H = 0.5 + unif(rng);
    const auto [neck, bulge] = neck_bulge_radii(params);
    const double ab = a * (0.5 - a);
    CHECK(neck * bulge ==
          doctest::Approx(4.0 * ab / (params.H * params.H)).epsilon(1e-10));
    CHECK(neck + bulge == doctest::Approx(1.0 / params.H).epsilon(1e-10));
  }
}

TEST_CASE("classification by sign of ab") {
  DelaunayParams params;
  CHECK(classify(params) == DelaunayClass::Cylinder);
  params.a = 0.3;
  params.b = 0.2;
  CHECK(classify(params) == DelaunayClass::Unduloid);
  params.a = 0.3;
  params.b = -0.05;
  params.c = std::sqrt(0.1875);
  CHECK(classify(params) == DelaunayClass::Nodoid);
  params.a = 0.5;
  params.b = 0.0;
  params.c = 0.0;
  CHECK(classify(params) == DelaunayClass::SphereLimit);
  params.a = 0.0;
  CHECK(classify(params) == DelaunayClass::Invalid);
}

TEST_CASE("axis and image circle") {
  DelaunayParams cylinder;
  DelaunayGeometry geo = delaunay_geometry(cylinder);
  CHECK(std::abs(geo.axis_direction.x3 - 1.0) < 1e-12);
  CHECK(geo.circle_center.norm() < 1e-12);
  CHECK(geo.circle_radius == doctest::Approx(0.5));
  CHECK(geo.cos_theta == doctest::Approx(1.0));

  DelaunayParams unduloid;
  unduloid.a = 0.3;
  unduloid.b = 0.2;
  geo = delaunay_geometry(unduloid);
  CHECK(std::abs(geo.axis_direction.x3 - 1.0) < 1e-12);
  CHECK(geo.circle_center.x1 == doctest::Approx(0.1));
  CHECK(std::abs(geo.circle_center.x2) < 1e-12);
  CHECK(std::abs(geo.circle_center.x3) < 1e-12);
  CHECK(geo.circle_radius == doctest::Approx(0.6));
  CHECK(geo.cos_theta == doctest::Approx(1.0));

  DelaunayParams nodoid;
  nodoid.a = 0.3;
  nodoid.b = -0.05;
  nodoid.c = std::sqrt(0.1875);
  geo = delaunay_geometry(nodoid);
  // axis proportional to (c, 0, a+b), normalized
  CHECK(geo.axis_direction.x1 == doctest::Approx(std::sqrt(0.1875) / 0.5));
  CHECK(std::abs(geo.axis_direction.x2) < 1e-12);
  CHECK(geo.axis_direction.x3 == doctest::Approx(0.25 / 0.5));
}

TEST_CASE("frame rotations are unitary and commute with the axis generator") {
  DelaunayParams params;
  params.a = 0.3;
  params.b = 0.2;
  for (double t : {0.3, 1.0, 2.5}) {
    const LoopMatrix rot = closed_form_frame(params, Complex{0.0, t}, 20);
    CHECK(is_unitary_on_circle(rot, 64, 1e-10));
    for (int m = 0; m < 8; ++m) {
      const double arg = 2.0 * M_PI * m / 8;
      const Complex lambda{std::cos(arg), std::sin(arg)};
      const Mat2 axis = Complex{0, 1} * delaunay_residue(params, lambda);
      const Mat2 r = rot.evaluate(lambda);
      CHECK((r * axis - axis * r).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
}

TEST_CASE("profile first integral") {
  CHECK(profile_first_integral(0.5, 0.0, 1.0) == doctest::Approx(0.25));
  CHECK(profile_first_integral(0.4, 0.0, 1.0) == doctest::Approx(0.24));
  CHECK(profile_first_integral(0.6, 0.0, 1.0) == doctest::Approx(0.24));
  // cylinder of mean curvature H
  CHECK(profile_first_integral(0.25, 0.0, 2.0) == doctest::Approx(0.125));
}
