#include <doctest.h>

#include <cmath>

#include "fracfield/quadrature.hpp"

using namespace fracfield;
using namespace fracfield::quad;
using doctest::Approx;

TEST_CASE("gk21 on smooth and peaked integrands") {
  auto r = gk21([](double x) { return cplx(std::exp(x)); }, 0, 1, 0, 1e-14);
  CHECK(r.value.real() == Approx(std::expm1(1.0)).epsilon(1e-14));
  auto p = gk21([](double x) { return cplx(1.0 / (1e-4 + x * x)); }, -1, 1, 0, 1e-12);
  CHECK(p.value.real() == Approx(2 * std::atan(100.0) * 100).epsilon(1e-11));
}

TEST_CASE("gauss-jacobi rule integrates its weight exactly") {
  const double a = -0.4, b = 0.3;
  JacobiRule r = gauss_jacobi01(12, a, b);
  double mass = 0, first = 0;
  for (std::size_t i = 0; i < r.t.size(); ++i) {
    mass += r.w[i];
    first += r.w[i] * r.t[i];
  }
  double B = std::tgamma(a + 1) * std::tgamma(b + 1) / std::tgamma(a + b + 2);
  CHECK(mass == Approx(B).epsilon(1e-14));
  CHECK(first == Approx(B * (b + 1) / (a + b + 2)).epsilon(1e-14));
}

TEST_CASE("jacobi_adaptive with an endpoint singularity in the weight") {
  // int_0^1 (1-t)^-0.5 cos t dt
  auto r = jacobi_adaptive([](double t) { return cplx(std::cos(t)); }, -0.5, 0.0, 1e-13, 1e-16);
  CHECK(r.value.real() == Approx(1.4995966097132190).epsilon(1e-12));
}

TEST_CASE("semi-infinite") {
  auto r = semi_infinite([](double x) { return cplx(std::exp(-x) * x); }, 0, 1, 0, 1e-13);
  CHECK(r.value.real() == Approx(1.0).epsilon(1e-12));
}

TEST_CASE("wynn epsilon accelerates an alternating series") {
  std::vector<cplx> partial;
  cplx s = 0;
  for (int k = 1; k <= 14; ++k) {
    s += (k % 2 ? 1.0 : -1.0) / k;
    partial.push_back(s);
  }
  CHECK(std::abs(wynn_epsilon(partial).value - std::log(2.0)) < 1e-10);
}

TEST_CASE("oscillatory cosine and sine transforms") {
  auto g = [](double k) { return cplx(std::exp(-0.5 * k * k)); };
  for (double x : {0.0, 0.7, 3.0}) {
    auto r = oscillatory(g, x, Trig::cos, 1e-15, 1e-12, 1.0);
    CHECK(r.value.real() == Approx(std::sqrt(M_PI / 2) * std::exp(-0.5 * x * x)).epsilon(1e-11));
  }
  // int_0^inf e^-k sin(k x) dk = x / (1 + x^2)
  auto e = [](double k) { return cplx(std::exp(-k)); };
  auto r = oscillatory(e, 2.0, Trig::sin, 1e-15, 1e-12, 1.0);
  CHECK(r.value.real() == Approx(0.4).epsilon(1e-11));
  // slow algebraic decay: int_0^inf cos(k x)/(1+k^2) dk = pi e^-x / 2
  auto a = [](double k) { return cplx(1.0 / (1 + k * k)); };
  auto s = oscillatory(a, 1.5, Trig::cos, 1e-13, 1e-10, 1.0);
  CHECK(s.value.real() == Approx(M_PI * std::exp(-1.5) / 2).epsilon(1e-8));
}
