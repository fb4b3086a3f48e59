#include <doctest.h>

#include <cmath>
#include <sstream>

#include "fracfield/error.hpp"
#include "fracfield/solver.hpp"

using namespace fracfield;
using doctest::Approx;

namespace {
ProblemSpec wave() {
  ProblemSpec p;
  p.kind = Kind::wave;
  p.sym = {2.0, 0.0};
  p.ord = {2.0, 1.0};
  p.f_hat = BoundaryTransform::gaussian(0.5);
  return p;
}
ProblemSpec laplace_delta(double mu, double nu) {
  ProblemSpec p;
  p.kind = Kind::laplace;
  p.variant = Variant::quantum;
  p.sym = {2.0, 0.0};
  p.ord = {mu, nu};
  p.f_hat = BoundaryTransform::delta();
  return p;
}
}  // namespace

TEST_CASE("kernel terms") {
  ProblemSpec p;
  p.kind = Kind::poisson;
  p.sym = {1.6, 0.0};
  p.ord = {1.5, 0.5};
  p.source.preset = SourceSpec::Preset::delta_power;
  p.source.beta = 0.3;
  const double y = 0.7, k = 1.2;
  cplx lam = -std::pow(k, 1.6);
  cplx ex = std::pow(y, 1.2) * ml_two(1.5, 2.2, std::pow(y, 1.5) * lam);
  CHECK(std::abs(fourier_kernel(p, k, y) - ex) < 1e-15);
  ProblemSpec c = wave();
  CHECK(fourier_kernel(c, 2.0, 0.6).real() == Approx(std::cos(1.2) * std::exp(-0.5)).epsilon(1e-14));
}

TEST_CASE("d'Alembert reduction") {
  ProblemSpec p = wave();
  for (double x : {-1.0, 0.2, 1.5})
    for (double t : {0.3, 1.0}) {
      double ex = 0.5 * (p.f_hat.physical(x - t) + p.f_hat.physical(x + t));
      CHECK(std::abs(solve_pointwise(p, x, t) - ex) < 1e-9);
    }
  CHECK(std::abs(solve_pointwise(p, 30.0, 1.0)) < 1e-12);
}

TEST_CASE("delta data need the closed form or regularization") {
  ProblemSpec p = laplace_delta(1.5, 0.5);
  CHECK_THROWS_AS(solve_pointwise(p, 0.7, 1.2), SlowDecay);
  SolveOptions o;
  o.regularize_delta = true;
  CHECK(std::abs(solve_pointwise(p, 0.7, 1.2, o) - solve_closed_form(p, 0.7, 1.2)) < 1e-5);
}

TEST_CASE("series and closed form agree") {
  ProblemSpec p = laplace_delta(1.5, 0.5);
  double c = solve_closed_form(p, 0.3, 1.0), s = solution_series(p, 0.3, 1.0);
  CHECK(std::abs(c - s) < 1e-8 * std::abs(s));
  // nu = 0.5 makes the Wright second parameter zero, so N(0, y) = 0
  CHECK(solution_series(p, 0.0, 1.0) == 0.0);
  ProblemSpec q = laplace_delta(1.5, 1.0);
  double b = 1.0 - 0.75;  // 1 - mu/2
  CHECK(solution_series(q, 0.0, 1.0) == Approx(0.5 / std::tgamma(b)).epsilon(1e-14));
}

TEST_CASE("delta_delta source second term vanishes at x = 0") {
  ProblemSpec p = laplace_delta(1.5, 0.5);
  p.kind = Kind::poisson;
  p.f_hat = BoundaryTransform::zero();
  p.source.preset = SourceSpec::Preset::delta_delta;
  // phi(-mu/2, mu/2; 0) = 1/Gamma(mu/2)
  CHECK(solution_series(p, 0.0, 1.0) == Approx(0.5 / std::tgamma(0.75)).epsilon(1e-14));
  CHECK(solve_closed_form(p, 0.4, 1.0) == Approx(solution_series(p, 0.4, 1.0)).epsilon(1e-10));
}

TEST_CASE("asymptotic form") {
  ProblemSpec p = laplace_delta(1.5, 0.5);
  CHECK_THROWS_AS(solution_asymptotic(p, 2.0, 1.0), OutOfRegime);
  double r = std::exp(solution_asymptotic_scaled(p, 10.0, 1.0).log_abs() -
                      solution_series_scaled(p, 10.0, 1.0).log_abs());
  CHECK(r == Approx(1.0).epsilon(0.05));
}

TEST_CASE("uncatalogued problems") {
  ProblemSpec p = laplace_delta(1.5, 0.5);
  p.variant = Variant::riesz_feller;
  CHECK_THROWS_AS(solve_closed_form(p, 0.3, 1.0), NoClosedForm);
  ProblemSpec g = wave();
  CHECK_THROWS_AS(solve_closed_form(g, 0.3, 1.0), NoClosedForm);
  ProblemSpec a = laplace_delta(1.5, 0.5);
  a.sym = {1.7, 0.0};
  CHECK_THROWS_AS(solution_series(a, 0.3, 1.0), NoSeriesForm);
}

TEST_CASE("validation") {
  ProblemSpec p = wave();
  p.sym.alpha = 0.5;
  CHECK_THROWS_AS(validate(p), ValidityError);
  p = wave();
  p.k = 1.0;
  CHECK_THROWS_AS(validate(p), ValidityError);
  p = laplace_delta(1.5, 0.5);
  p.source.preset = SourceSpec::Preset::delta_delta;
  CHECK_THROWS_AS(validate(p), ValidityError);
}

TEST_CASE("grid evaluation and csv") {
  ProblemSpec p = wave();
  GridSpec g{{-1.0, 0.0, 1.0}, {0.5, 1.0}};
  auto rows = solve_grid(p, g, Method::automatic);
  REQUIRE(rows.size() == 6);
  CHECK(rows[1].x == 0.0);
  CHECK(rows[1].y == 0.5);
  CHECK(rows[3].y == 1.0);
  for (const auto& r : rows) CHECK(r.error_flag.empty());
  auto serial = solve_grid(p, g, Method::automatic, SolveOptions{.threads = 1});
  for (std::size_t i = 0; i < rows.size(); ++i) CHECK(rows[i].N == serial[i].N);
  auto bad = solve_grid(p, g, Method::closed_form);
  CHECK(bad[0].error_flag == "NoClosedForm");
  std::ostringstream os;
  write_csv(os, rows);
  CHECK(os.str().rfind("x,y,N,imag_residual,method,error_flag\n", 0) == 0);
  CHECK(solve_grid(p, GridSpec{}).empty());
}
