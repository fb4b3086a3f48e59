#include <doctest.h>

#include <cmath>

#include "fracfield/error.hpp"
#include "fracfield/fracops.hpp"
#include "fracfield/oracle.hpp"
#include "fracfield/specfun.hpp"

using namespace fracfield;
using doctest::Approx;

TEST_CASE("numeric laplace") {
  auto one = oracle::numeric_laplace(SampledFunction{[](double) { return 1.0; }}, 2.0);
  CHECK(one.value.real() == Approx(0.5).epsilon(1e-12));
  oracle::CHandle ml = [](double t) { return ml_two(1.5, 1.0, 0.8 * std::pow(t, 1.5)); };
  auto v = oracle::numeric_laplace(ml, 2.0);
  CHECK(v.value.real() == Approx(std::sqrt(2.0) / (std::pow(2.0, 1.5) - 0.8)).epsilon(1e-10));
  oracle::CHandle k = [](double y) { return lemma1_kernel({1.5, 0.5}, 0.75, 1.0, y); };
  auto w = oracle::numeric_laplace(k, 3.0);
  CHECK(w.value.real() == Approx(std::sqrt(3.0) / (std::pow(3.0, 1.5) + 1)).epsilon(1e-9));
  oracle::CHandle grow = [](double y) { return cplx(std::exp(2 * y)); };
  CHECK_THROWS_AS(oracle::numeric_laplace(grow, 1.0), TailDominance);
}

TEST_CASE("numeric inverse laplace") {
  auto a = oracle::numeric_inverse_laplace([](cplx s) { return 1.0 / (s * s); }, 3.0);
  CHECK(a.value.real() == Approx(3.0).epsilon(1e-9));
  auto b = oracle::numeric_inverse_laplace([](cplx s) { return 1.0 / (s * s + 1.0); }, M_PI / 2);
  CHECK(b.value.real() == Approx(1.0).epsilon(1e-9));
  auto c = oracle::numeric_inverse_laplace(
      [](cplx s) { return std::sqrt(s) / (std::pow(s, 1.5) + 1.0); }, 1.0);
  CHECK(std::abs(c.value - lemma1_kernel({1.5, 0.5}, 0.75, 1.0, 1.0)) < 1e-5);
}

TEST_CASE("cosine integral") {
  auto a = oracle::cosine_integral([](double k) { return std::exp(-k); }, 1.0, 0.0);
  CHECK(a.value.real() == Approx(1.0).epsilon(1e-10));
  auto b = oracle::cosine_integral([](double k) { return std::exp(-0.5 * k * k); }, 1.0, 1.0);
  CHECK(b.value.real() == Approx(std::sqrt(M_PI / 2) * std::exp(-0.5)).epsilon(1e-10));
}

TEST_CASE("separation reference") {
  ProblemSpec p;
  p.kind = Kind::wave;
  p.sym = {2.0, 0.0};
  p.ord = {2.0, 1.0};
  p.f_hat = BoundaryTransform::gaussian(0.5);
  auto ml = [](double b, cplx z) { return ml_two(2.0, b, z); };
  for (double x : {-0.5, 0.0, 1.0}) {
    double y = 0.8;
    double ex = 0.5 * (p.f_hat.physical(x - y) + p.f_hat.physical(x + y));
    CHECK(std::abs(oracle::separation_reference(p, x, y, ml).value.real() - ex) < 1e-9);
  }
  CHECK(std::abs(oracle::separation_reference(p, 40.0, 0.5, ml).value.real()) < 1e-12);
  p.f_hat = BoundaryTransform::delta();
  CHECK_THROWS_AS(oracle::separation_reference(p, 0.0, 1.0, ml), SlowDecay);
}
