#include <doctest.h>

#include <cmath>

#include "fracfield/error.hpp"
#include "fracfield/foxh.hpp"

using namespace fracfield;
using doctest::Approx;

namespace {
double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

HFunctionSpec h1011(double b, double B) {
  HFunctionSpec s;
  s.m = 1, s.n = 0, s.p = 1, s.q = 1;
  s.upper = {{b, B}};
  s.lower = {{1.0, 1.0}};
  return s;
}
}  // namespace

TEST_CASE("ml_as_h structure") {
  HFunctionSpec s = ml_as_h(1.5, 1.0);
  CHECK(s.m == 1);
  CHECK(s.n == 1);
  CHECK(s.p == 1);
  CHECK(s.q == 2);
  CHECK(s.lower[1] == ParamPair{0.0, 1.5});
  CHECK(s.arg_scale == cplx(-1.0, 0.0));
}

TEST_CASE("ml_as_h reproduces the Mittag-Leffler function") {
  for (double w : {-2.0, -0.5, 0.3, 3.0})
    CHECK(rel(h_series(ml_as_h(1.5, 1.0), w), ml_two(1.5, 1.0, w)) < 1e-13);
  CHECK(h_series(ml_as_h(1, 1), 1.0).real() == Approx(std::exp(1.0)).epsilon(1e-14));
}

TEST_CASE("H(1,0;1,1) equals the Wright form") {
  // H^{1,0}_{1,1}[z | (b, B); (1, 1)] = z phi(-B, b - B; -z)
  HFunctionSpec s = h1011(0.75, 0.75);
  for (double z : {0.2, 1.0, 2.5})
    CHECK(rel(h_series(s, z), z * wright(-0.75, 0.0, -z)) < 1e-12);
  CHECK(h_series(s, 0.0) == cplx(0.0));
}

TEST_CASE("asymptotic parameters and ratio") {
  HFunctionSpec s = h1011(0.75, 0.75);
  AsymptoticParams a = asymptotic_params(s);
  CHECK(a.m_star == Approx(0.25));
  CHECK(a.C == Approx(std::pow(0.75, 0.75)).epsilon(1e-12));
  double prev = 1.0;
  for (double z : {5.0, 10.0, 20.0}) {
    double r = std::exp(h_asymptotic_scaled(s, z).log_abs() - h_series_scaled(s, z).value.log_abs());
    CHECK(std::abs(r - 1) < prev);
    prev = std::abs(r - 1);
  }
  CHECK(prev < 1e-4);
  CHECK_THROWS_AS(h_asymptotic(ml_as_h(1.5, 1.0), 5.0), DomainError);
}

TEST_CASE("mellin cosine map") {
  const double mu = 1.5, beta = 0.75;
  HFunctionSpec m = mellin_cosine_map(ml_as_h(mu, beta), 1.0, 2.0, 1.0);
  CHECK(m.m == 2);
  CHECK(m.n == 1);
  CHECK(m.p == 3);
  CHECK(m.q == 3);
  CHECK(m.upper[1] == ParamPair{beta, mu});
  HFunctionSpec r = h_reduce(m);
  CHECK(r.m == 1);
  CHECK(r.n == 0);
  CHECK(r.p == 1);
  CHECK(r.q == 1);
  // value of the reduced spec at x = 0.5, matches the Wright form
  CHECK(h_series(r, 0.5).real() == Approx(0.083442157732263142 * M_PI).epsilon(1e-12));
  CHECK_THROWS_AS(h_series(m, 0.5), CoincidentPoles);
}

TEST_CASE("mellin cosine map rejects invalid parameters") {
  // mu = 2 gives theta* = 0
  CHECK_THROWS_AS(mellin_cosine_map(ml_as_h(2.0, 1.0), 1.0, 2.0, 1.0), ValidityError);
  try {
    mellin_cosine_map(ml_as_h(2.0, 1.0), 1.0, 2.0, 1.0);
  } catch (const ValidityError& e) {
    CHECK(std::string(e.what()).find("theta") != std::string::npos);
  }
}

TEST_CASE("h_reduce") {
  HFunctionSpec s;
  s.m = 2, s.n = 0, s.p = 2, s.q = 2;
  s.upper = {{0.75, 0.75}, {1.0, 0.5}};
  s.lower = {{1.0, 1.0}, {1.0, 0.5}};
  HFunctionSpec r = h_reduce(s);
  CHECK(r.m == 1);
  CHECK(r.q == 1);
  CHECK(r.upper[0] == ParamPair{0.75, 0.75});
  HFunctionSpec plain = h1011(0.4, 0.6);
  HFunctionSpec same = h_reduce(plain);
  CHECK(same.upper == plain.upper);
  CHECK(same.lower == plain.lower);
  HFunctionSpec t;
  t.m = 1, t.n = 1, t.p = 2, t.q = 2;
  t.upper = {{0.2, 0.5}, {0.75, 0.75}};
  t.lower = {{1.0, 1.0}, {0.2, 0.5}};
  for (double z : {0.3, 1.7}) CHECK(rel(h_series(t, z), h_series(h_reduce(t), z)) < 1e-13);
}

TEST_CASE("validation") {
  HFunctionSpec s = h1011(0.5, 0.5);
  s.m = 0;
  CHECK_THROWS(validate(s));
  s = h1011(0.5, -0.5);
  CHECK_THROWS(validate(s));
}
