#include <doctest.h>

#include <cmath>

#include "fracfield/error.hpp"
#include "fracfield/specfun.hpp"

using namespace fracfield;
using doctest::Approx;

namespace {
double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }
}  // namespace

TEST_CASE("ml_two elementary reductions") {
  CHECK(ml_two(1, 1, 1.0).real() == Approx(std::exp(1.0)).epsilon(1e-15));
  CHECK(ml_two(2, 1, -4.0).real() == Approx(std::cos(2.0)).epsilon(1e-14));
  CHECK(ml_two(2, 1, 9.0).real() == Approx(std::cosh(3.0)).epsilon(1e-14));
  CHECK(ml_two(2, 2, -2.25).real() == Approx(std::sin(1.5) / 1.5).epsilon(1e-14));
  CHECK(std::abs(ml_two(2, 1, -M_PI * M_PI / 4)) < 1e-15);
  CHECK(ml_two(0.7, 1.3, 0.0).real() == Approx(1.0 / std::tgamma(1.3)));
}

// references: 60-120 digit direct summation (mpmath)
TEST_CASE("ml_two against high-precision sums") {
  CHECK(rel(ml_two(1.5, 1, -8.0), -0.2028715392387281623) < 1e-14);
  CHECK(rel(ml_two(1.5, 1, -60.0), -0.004208591617740956) < 1e-13);
  CHECK(rel(ml_two(1.5, 0.7, -30.0), -0.024097807609548103936) < 1e-12);
  CHECK(rel(ml_two(1.2, 1.5, 50.0), 33597093780.454254138) < 1e-13);
  CHECK(rel(ml_two(1.9, 1.1, -100.0), 0.027224476256742748558) < 1e-12);
  CHECK(rel(ml_two(0.8, 1.0, cplx(2, 3)), cplx(-0.24939597980592613653, -6.5874299742756418395)) < 1e-13);
  CHECK(rel(ml_two(0.5, 1.0, cplx(-3, 1)),
            cplx(0.164261136392986199238, 0.050197135135248590620)) < 1e-13);
}

TEST_CASE("three- and four-parameter variants") {
  CHECK(rel(ml_three(1, 1, 2, 0.3), 1.75481644984880400) < 1e-15);
  CHECK(rel(ml_four({1.5, 1, 2, 1.2}, 0.5), 2.14927922001952714) < 1e-14);
  CHECK(ml_three(1.3, 0.9, 1.0, cplx(-2, 1)) == ml_two(1.3, 0.9, cplx(-2, 1)));
  CHECK(rel(ml_four({1.3, 0.9, 0.6, 1.0}, -1.7), ml_three(1.3, 0.9, 0.6, -1.7)) < 1e-14);
  // gamma = -2, kappa = 1: finite sum of three terms
  double z = 0.4;
  double expect = 1 / std::tgamma(1.0) - 2 * z / std::tgamma(2.0) + z * z / std::tgamma(3.0);
  CHECK(ml_four({1.0, 1.0, -2.0, 1.0}, z).real() == Approx(expect).epsilon(1e-14));
  CHECK_THROWS_AS(ml_four({0.5, 1.0, 1.0, 2.0}, 0.1), DomainError);
}

TEST_CASE("wright function") {
  CHECK(wright(-0.5, 0.5, 0.0).real() == Approx(1 / std::sqrt(M_PI)).epsilon(1e-15));
  // phi(1, 1; z) = I_0(2 sqrt z)
  CHECK(wright(1, 1, 0.81).real() == Approx(std::cyl_bessel_i(0.0, 1.8)).epsilon(1e-14));
  CHECK(rel(wright(-0.75, 0.25, -1.5), 0.548737862226456334) < 1e-14);
  CHECK(rel(wright(-0.75, 0.25, -3.0), 3.5126361023134109e-4) < 1e-12);
  CHECK(rel(wright(-0.3, 0.5, -40.0), 2.54237495687257109e-36) < 1e-12);
}

TEST_CASE("wright far into the decaying tail keeps its scale") {
  ScaledValue v = wright_scaled(-0.75, 0.25, -8.0);
  CHECK(rel(v.value.value(), 1.1612079380755201709e-187) < 1e-12);
  ScaledValue w = wright_scaled(-0.75, 0.25, -10.0);
  CHECK(w.value.log_abs() == Approx(std::log(5.3957799936356220732) - 458 * std::log(10.0)).epsilon(1e-12));
}

TEST_CASE("fox-wright reductions") {
  FoxWrightSpec s{{{1.0, 1.0}}, {{1.0, 1.5}}};
  CHECK(rel(fox_wright(s, 0.7), ml_two(1.5, 1.0, 0.7)) < 1e-14);
  FoxWrightSpec w{{}, {{0.25, -0.75}}};
  CHECK(rel(fox_wright(w, -1.5), wright(-0.75, 0.25, -1.5)) < 1e-14);
  FoxWrightSpec t{{{2.0, 1.0}, {0.5, 0.5}}, {{1.5, 1.0}}};
  CHECK(fox_wright(t, 0.0).real() == Approx(std::tgamma(2.0) * std::tgamma(0.5) / std::tgamma(1.5)));
  FoxWrightSpec bad{{{1.0, 3.0}}, {{1.0, 0.5}}};
  CHECK_THROWS_AS(fox_wright(bad, 0.1), DomainError);
}

TEST_CASE("truncation bound covers the true error") {
  SeriesValue v = ml_two_eval(1.5, 1, -8.0);
  CHECK(std::abs(v.value.real() + 0.2028715392387281623) <= v.trunc_bound + 1e-16);
  SeriesValue w = wright_eval(-0.75, 0.25, -1.5);
  CHECK(std::abs(w.value.real() - 0.548737862226456334) <= w.trunc_bound + 1e-16);
}

TEST_CASE("repeated evaluation is bitwise stable") {
  CHECK(ml_two(1.37, 0.81, cplx(-7, 2)) == ml_two(1.37, 0.81, cplx(-7, 2)));
  CHECK(wright(-0.6, 0.4, -5.0) == wright(-0.6, 0.4, -5.0));
}

TEST_CASE("reciprocal gamma at poles") {
  CHECK(rgamma(0.0) == 0.0);
  CHECK(rgamma(-3.0) == 0.0);
  CHECK(rgamma(0.5) == Approx(1 / std::sqrt(M_PI)));
}
