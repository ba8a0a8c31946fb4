// Command-line front end: generate Delaunay CMC meshes, check closing
// conditions, report radii and monodromy, and run a self test.
//
// Exit codes: 0 on pass, 2 when the closing conditions fail, 1 on error.

#include <fstream>
#include <iostream>
#include <random>

#include <CLI11.hpp>
#include <json.hpp>

#include "dpw/surface.hpp"

using json = nlohmann::ordered_json;

namespace {

struct CommonOpts {
  double a = 0.25;
  double b = 0.25;
  double c = 0.0;
  double H = 1.0;
  double lambda0_arg = 0.0;
  int t_steps = 128;
  double rho_min = -M_PI;
  double rho_max = M_PI;
  int rho_steps = 129;
  int fourier = 32;
  double tol = 1e-9;
  std::string format = "obj";
  std::string out = "surface.obj";
  std::string params_file;
  bool allow_multiwrap = false;
  int threads = 0;
};

void add_param_flags(CLI::App* cmd, CommonOpts* opts) {
  cmd->add_option("--params", opts->params_file,
                  "JSON file with keys a, b, c, H, lambda0_arg");
  cmd->add_option("--a", opts->a, "potential weight a");
  cmd->add_option("--b", opts->b, "potential weight b");
  cmd->add_option("--c", opts->c, "potential diagonal weight c");
  cmd->add_option("--H", opts->H, "mean curvature (nonzero)");
  cmd->add_option("--lambda0-arg", opts->lambda0_arg,
                  "argument of the evaluation point lambda0 on S^1");
  cmd->add_option("--fourier", opts->fourier, "Fourier truncation degree N");
  cmd->add_option("--tol", opts->tol, "Iwasawa residual tolerance");
}

void add_grid_flags(CLI::App* cmd, CommonOpts* opts) {
  cmd->add_option("--t-steps", opts->t_steps, "angular grid steps");
  cmd->add_option("--rho-min", opts->rho_min, "lower end of the rho window");
  cmd->add_option("--rho-max", opts->rho_max, "upper end of the rho window");
  cmd->add_option("--rho-steps", opts->rho_steps, "radial grid points");
  cmd->add_option("--threads", opts->threads,
                  "worker threads (0 = hardware concurrency)");
}

dpw::DelaunayParams make_params(const CommonOpts& opts, const CLI::App* cmd) {
  CommonOpts merged = opts;
  if (!opts.params_file.empty()) {
    std::ifstream in(opts.params_file);
    if (!in) throw std::runtime_error("cannot open " + opts.params_file);
    json doc = json::parse(in);
    if (doc.contains("a") && cmd->count("--a") == 0) merged.a = doc["a"];
    if (doc.contains("b") && cmd->count("--b") == 0) merged.b = doc["b"];
    if (doc.contains("c") && cmd->count("--c") == 0) merged.c = doc["c"];
    if (doc.contains("H") && cmd->count("--H") == 0) merged.H = doc["H"];
    if (doc.contains("lambda0_arg") && cmd->count("--lambda0-arg") == 0) {
      merged.lambda0_arg = doc["lambda0_arg"];
    }
  }
  if (merged.H == 0.0) throw std::runtime_error("H must be nonzero");
  dpw::DelaunayParams p;
  p.a = merged.a;
  p.b = merged.b;
  p.c = merged.c;
  p.H = merged.H;
  p.lambda0 = {std::cos(merged.lambda0_arg), std::sin(merged.lambda0_arg)};
  return p;
}

json closing_json(const dpw::DelaunayParams& params,
                  const dpw::DelaunayClosingReport& report) {
  json j;
  j["cond1_residual"] = report.conditions.cond1_residual;
  j["cond1_sign"] = report.conditions.cond1_sign;
  j["cond2_residual"] = report.conditions.cond2_residual;
  j["mu1"] = report.mu1;
  j["mu1_half_integer"] = report.mu1_half_integer;
  j["simply_wrapped"] = report.simply_wrapped;
  j["ab_real"] = report.ab_real;
  j["pass"] = report.pass;
  j["classification"] = dpw::to_string(dpw::classify(params));
  return j;
}

json vector_json(const dpw::SU2Vector& v) {
  return json::array({v.x1, v.x2, v.x3});
}

int run_check(const dpw::DelaunayParams& params, double tol) {
  const auto report = dpw::check_closing(params, tol);
  json j = closing_json(params, report);
  try {
    const auto radii = dpw::neck_bulge_radii(params);
    j["neck"] = radii.first;
    j["bulge"] = radii.second;
  } catch (const std::domain_error&) {
    j["neck"] = nullptr;
    j["bulge"] = nullptr;
  }
  std::cout << j.dump(2) << std::endl;
  return report.pass ? 0 : 2;
}

int run_radii(const dpw::DelaunayParams& params) {
  const auto geo = dpw::delaunay_geometry(params);
  json j;
  j["neck"] = geo.neck_radius;
  j["bulge"] = geo.bulge_radius;
  j["classification"] = dpw::to_string(geo.classification);
  j["axis_direction"] = vector_json(geo.axis_direction);
  j["circle_center"] = vector_json(geo.circle_center);
  j["circle_radius"] = geo.circle_radius;
  j["cos_theta"] = geo.cos_theta;
  std::cout << j.dump(2) << std::endl;
  return 0;
}

int run_monodromy(const dpw::DelaunayParams& params, int degree, double tol) {
  const auto triple = dpw::delaunay_triple(params, degree);
  auto numeric_triple = triple;
  numeric_triple.potential.closed_form = nullptr;  // force RK4
  const auto numeric = dpw::compute_monodromy(numeric_triple, degree);
  const auto closed = dpw::closed_form_monodromy(params, degree);
  double agreement = 0.0;
  for (int m = 0; m < 64; ++m) {
    const double arg = 2.0 * M_PI * m / 64;
    const dpw::Complex lambda{std::cos(arg), std::sin(arg)};
    agreement = std::max(agreement,
                         (numeric.chi.evaluate(lambda) -
                          closed.chi.evaluate(lambda)).cwiseAbs().maxCoeff());
  }
  const auto conditions =
      dpw::closing_conditions(closed, params.lambda0, std::max(tol, 1e-7));
  json j;
  j["generator"] = numeric.generator;
  j["unitarity_residual"] = dpw::unitarity_residual(closed.chi, 64);
  j["closed_form_agreement"] = agreement;
  j["certified_unitary"] = dpw::certify_unitary_monodromy(triple);
  j["cond1_residual"] = conditions.cond1_residual;
  j["cond1_sign"] = conditions.cond1_sign;
  j["cond2_residual"] = conditions.cond2_residual;
  std::cout << j.dump(2) << std::endl;
  return (conditions.cond1_pass && conditions.cond2_pass) ? 0 : 2;
}

int run_generate(const dpw::DelaunayParams& params, const CommonOpts& opts) {
  const auto closing = dpw::check_closing(params, 1e-7);
  if (closing.mu1_half_integer && !closing.simply_wrapped &&
      !opts.allow_multiwrap) {
    std::cerr << "refusing multiply-wrapped surface (mu(1) = " << closing.mu1
              << "); pass --allow-multiwrap to override" << std::endl;
    return 1;
  }
  const auto mesh =
      dpw::generate_mesh(params, opts.t_steps, opts.rho_min, opts.rho_max,
                         opts.rho_steps, opts.fourier, opts.tol, opts.threads);
  dpw::export_mesh(mesh, dpw::mesh_format_from_string(opts.format), opts.out);

  json j = closing_json(params, closing);
  try {
    const auto geo = dpw::delaunay_geometry(params);
    const auto report = dpw::measure(mesh, geo);
    j["neck"] = geo.neck_radius;
    j["bulge"] = geo.bulge_radius;
    j["measured_neck"] = report.measured_neck;
    j["measured_bulge"] = report.measured_bulge;
    j["s_spread"] = report.first_integral_spread;
    j["axis_fit_residual"] = report.axis_fit_residual;
    j["extrema_found"] = report.extrema_found;
  } catch (const std::exception& err) {
    j["measurement_error"] = err.what();
  }
  j["closure_error"] = mesh.closure_error;
  j["max_iwasawa_residual"] = mesh.max_iwasawa_residual;
  j["out"] = opts.out;
  std::cout << j.dump(2) << std::endl;
  return closing.pass ? 0 : 2;
}

bool selftest_line(const std::string& name, bool ok, double value) {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << " (" << value << ")"
            << std::endl;
  return ok;
}

int run_selftest() {
  using namespace dpw;
  bool all = true;

  // Loop arithmetic: pointwise product oracle on random twisted loops.
  std::mt19937 rng(20250825);
  auto random_twisted = [&](int deg, double scale = 0.5) {
    std::uniform_real_distribution<double> unif(-scale, scale);
    LoopMatrix l(deg);
    for (int k = -deg; k <= deg; ++k) {
      Mat2 m = Mat2::Zero();
      if (k % 2 == 0) {
        m(0, 0) = Complex{unif(rng), unif(rng)};
        m(1, 1) = Complex{unif(rng), unif(rng)};
      } else {
        m(0, 1) = Complex{unif(rng), unif(rng)};
        m(1, 0) = Complex{unif(rng), unif(rng)};
      }
      l.set_coeff(k, m);
    }
    return l;
  };
  double worst = 0.0;
  for (int trial = 0; trial < 8; ++trial) {
    const LoopMatrix l1 = random_twisted(2);
    const LoopMatrix l2 = random_twisted(2);
    const LoopMatrix prod = multiply(l1, l2, 2);
    for (int m = 0; m < 64; ++m) {
      const double arg = 2.0 * M_PI * m / 64;
      const Complex lambda{std::cos(arg), std::sin(arg)};
      worst = std::max(worst, (prod.evaluate(lambda) -
                               l1.evaluate(lambda) * l2.evaluate(lambda))
                                  .cwiseAbs().maxCoeff());
    }
  }
  all &= selftest_line("loop multiply pointwise oracle", worst < 1e-12, worst);

  // Iwasawa round trip on random twisted SL(2,C) loops, built as products of
  // unipotent twisted factors so det = 1 holds exactly at finite degree.
  std::uniform_real_distribution<double> unif(-0.6, 0.6);
  worst = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    LoopMatrix g = LoopMatrix::identity(0);
    const int degree = 1 + trial % 4;
    for (int j = 0; j < degree; ++j) {
      LoopMatrix factor = LoopMatrix::identity(1);
      const int row = j % 2;
      Mat2 lo = Mat2::Zero();
      Mat2 hi = Mat2::Zero();
      lo(row, 1 - row) = Complex{unif(rng), unif(rng)};
      hi(row, 1 - row) = Complex{unif(rng), unif(rng)};
      factor.set_coeff(-1, lo);
      factor.set_coeff(1, hi);
      g = multiply(g, factor, std::min(g.degree(), factor.degree()));
    }
    const IwasawaFactors factors = iwasawa_decompose(g, 2 * g.degree(), 1e-8);
    worst = std::max(worst, factors.residual);
  }
  all &= selftest_line("iwasawa residual on random loops", worst < 1e-8, worst);

  // RK4 frame vs closed form for the unduloid potential.
  DelaunayParams params;
  params.a = 0.3;
  params.b = 0.2;
  auto triple = delaunay_triple(params, 24);
  triple.potential.closed_form = nullptr;
  const Complex w{0.5, 1.2};
  const Complex path[2] = {Complex{0.0, 0.0}, w};
  const LoopMatrix integrated = integrate_frame(triple, path, 64);
  const LoopMatrix closed = closed_form_frame(params, w, 24);
  worst = 0.0;
  for (int m = 0; m < 64; ++m) {
    const double arg = 2.0 * M_PI * m / 64;
    const Complex lambda{std::cos(arg), std::sin(arg)};
    worst = std::max(worst, (integrated.evaluate(lambda) -
                             closed.evaluate(lambda)).cwiseAbs().maxCoeff());
  }
  all &= selftest_line("rk4 vs closed-form frame", worst < 1e-8, worst);

  // Cylinder mini-mesh: every point at distance 1/2 from the axis.
  DelaunayParams cyl;
  const auto mesh = generate_mesh(cyl, 16, -1.0, 1.0, 17, 24, 1e-9);
  const auto report = measure(mesh, delaunay_geometry(cyl));
  const double err = std::max(std::abs(report.measured_neck - 0.5),
                              std::abs(report.measured_bulge - 0.5));
  all &= selftest_line("cylinder mesh radius", err < 1e-6, err);
  all &= selftest_line("cylinder closure", mesh.closure_error < 1e-6,
                       mesh.closure_error);

  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Delaunay CMC surfaces via the loop-group method"};
  app.require_subcommand(1);

  CommonOpts opts;
  CLI::App* generate = app.add_subcommand("generate", "generate a surface mesh");
  add_param_flags(generate, &opts);
  add_grid_flags(generate, &opts);
  generate->add_option("--format", opts.format, "obj, ply or csv");
  generate->add_option("--out", opts.out, "output path");
  generate->add_flag("--allow-multiwrap", opts.allow_multiwrap,
                     "permit multiply-wrapped closed surfaces");

  CLI::App* check = app.add_subcommand("check", "evaluate closing conditions");
  add_param_flags(check, &opts);

  CLI::App* radii = app.add_subcommand("radii", "predicted geometry");
  add_param_flags(radii, &opts);

  CLI::App* monodromy =
      app.add_subcommand("monodromy", "numeric vs closed-form monodromy");
  add_param_flags(monodromy, &opts);

  app.add_subcommand("selftest", "run the built-in diagnostics");

  CLI11_PARSE(app, argc, argv);

  try {
    if (generate->parsed()) {
      return run_generate(make_params(opts, generate), opts);
    }
    if (check->parsed()) {
      return run_check(make_params(opts, check), std::max(opts.tol, 1e-7));
    }
    if (radii->parsed()) {
      return run_radii(make_params(opts, radii));
    }
    if (monodromy->parsed()) {
      return run_monodromy(make_params(opts, monodromy), opts.fourier,
                           opts.tol);
    }
    return run_selftest();
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << std::endl;
    return 1;
  }
}
