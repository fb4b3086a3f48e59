#include <doctest.h>

#include <cmath>

#include "fracfield/error.hpp"
#include "fracfield/fracops.hpp"
#include "fracfield/specfun.hpp"

using namespace fracfield;
using doctest::Approx;

TEST_CASE("psi symbol") {
  CHECK(psi({2.0, 0.0}, 3.0) == cplx(9.0, 0.0));
  CHECK(psi({1.5, 0.5}, 0.0) == cplx(0.0, 0.0));
  cplx v = psi({1.5, 0.5}, -2.0);
  CHECK(v.real() == Approx(2.0));
  CHECK(v.imag() == Approx(-2.0));
  CHECK(psi({1.5, 0.5}, -1.3) == std::conj(psi({1.5, 0.5}, 1.3)));
  CHECK_THROWS_AS(validate(RieszFellerSymbol{1.5, 0.6}), DomainError);
}

TEST_CASE("riemann-liouville integral") {
  SampledFunction one{[](double) { return 1.0; }};
  CHECK(rl_integral(one, 0.5, 1.0) == Approx(1 / std::tgamma(1.5)).epsilon(1e-12));
  SampledFunction id{[](double y) { return y; }};
  CHECK(rl_integral(id, 0.7, 2.0) == Approx(std::pow(2.0, 1.7) / std::tgamma(2.7)).epsilon(1e-12));
  SampledFunction e{[](double y) { return std::exp(-y); }};
  CHECK(rl_integral(e, 0.0, 1.3) == std::exp(-1.3));
  SampledFunction sing{[](double y) { return std::pow(y, -0.3); }, Smoothness::power_singular, -0.3};
  double ex = std::tgamma(0.7) / std::tgamma(1.9) * std::pow(1.5, 0.9);
  CHECK(rl_integral(sing, 1.2, 1.5) == Approx(ex).epsilon(1e-12));
}

TEST_CASE("hilfer derivative") {
  SampledFunction sn{[](double y) { return std::sin(y); }};
  CHECK(hilfer_derivative(sn, {2.0, 1.0}, 0.9) == Approx(-std::sin(0.9)).epsilon(1e-7));
  SampledFunction cube{[](double y) { return y * y * y; }, Smoothness::power_singular, 3.0};
  for (double nu : {0.0, 0.5, 1.0})
    CHECK(hilfer_derivative(cube, {1.5, nu}, 1.3) ==
          Approx(6 / std::tgamma(2.5) * std::pow(1.3, 1.5)).epsilon(1e-7));
  SampledFunction one{[](double) { return 1.0; }};
  CHECK(hilfer_derivative(one, {0.5, 0.0}, 0.8) == Approx(std::pow(0.8, -0.5) / std::sqrt(M_PI)).epsilon(1e-7));
  // a constant under a Hilfer derivative of order 1.5 and type 0.5 has no finite value
  CHECK_THROWS_AS(hilfer_derivative(one, {1.5, 0.5}, 0.8), DomainError);
}

TEST_CASE("hilfer laplace right-hand side") {
  cplx s(2.0, 0.5), F(0.3, -0.1);
  cplx classical = s * s * F - s * 1.5 - 0.25;
  CHECK(std::abs(hilfer_laplace_rhs({2.0, 1.0}, 1.5, 0.25, s, F) - classical) < 1e-15);
  CHECK(std::abs(hilfer_laplace_rhs({1.5, 0.5}, 0, 0, s, F) - std::pow(s, 1.5) * F) < 1e-15);
  cplx v = hilfer_laplace_rhs({1.5, 0.5}, 1.0, 0.0, 4.0, 0.0);
  CHECK(v.real() == Approx(-std::pow(4.0, 0.75)));
  v = hilfer_laplace_rhs({1.5, 0.5}, 0.0, 1.0, 4.0, 0.0);
  CHECK(v.real() == Approx(-std::pow(4.0, -0.25)));
}

TEST_CASE("prabhakar operator") {
  SampledFunction one{[](double) { return 1.0; }};
  double w = 1.3;
  CHECK(prabhakar_apply(-w * w, 2.0, one, 1.1).real() == Approx((1 - std::cos(w * 1.1)) / (w * w)).epsilon(1e-11));
  SampledFunction c{[](double y) { return std::cos(y); }};
  CHECK(prabhakar_apply(0.0, 1.5, c, 2.0).real() == Approx(rl_integral(c, 1.5, 2.0)).epsilon(1e-10));
  const double beta = 0.3;
  SampledFunction phi{[=](double y) { return std::pow(y, -beta) / std::tgamma(1 - beta); },
                      Smoothness::power_singular, -beta};
  for (double y : {0.5, 2.0}) {
    cplx ex = std::pow(y, 1.5 - beta) * ml_two(1.5, 2.5 - beta, -std::pow(y, 1.5));
    CHECK(std::abs(prabhakar_apply(-1.0, 1.5, phi, y) - ex) < 1e-10);
  }
}

TEST_CASE("first inversion lemma kernel") {
  const double om = 0.8;
  CHECK(lemma1_kernel({2.0, 0.3}, 1.0, om * om, 1.7).real() == Approx(std::cos(om * 1.7)).epsilon(1e-13));
  CHECK(lemma1_kernel({2.0, 0.3}, 0.0, om * om, 1.7).real() == Approx(std::sin(om * 1.7) / om).epsilon(1e-13));
  // minus branch: s / (s^2 - w^2) -> cosh
  CHECK(lemma1_kernel({2.0, 1.0}, 1.0, om * om, 1.7, false).real() == Approx(std::cosh(om * 1.7)).epsilon(1e-13));
}
