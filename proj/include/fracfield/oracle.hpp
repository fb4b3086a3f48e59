#pragma once
#include <complex>
#include <functional>

#include "fracfield/fracops.hpp"
#include "fracfield/problem.hpp"

// Brute-force reference transforms. Quadrature here comes from Boost.Math so
// none of it is shared with the main evaluation paths.
namespace fracfield::oracle {

struct Value {
  cplx value;
  double error;  // estimated absolute error
};

using CHandle = std::function<cplx(double)>;

// int_0^inf e^{-s y} f(y) dy
Value numeric_laplace(const SampledFunction& f, cplx s, double tol = 1e-11);
Value numeric_laplace(const CHandle& f, cplx s, double tol = 1e-11);

// Bromwich inversion on a fixed cotangent contour, N nodes, error from 2N.
Value numeric_inverse_laplace(const std::function<cplx(cplx)>& F, double y, int N = 48,
                              double tol = 1e-7);

// int_0^inf k^(rho-1) cos(k x) h(k) dk
Value cosine_integral(const std::function<double(double)>& h, double rho, double x,
                      double tol = 1e-10);

// Inversion integral for rapidly decaying data, evaluated independently.
// ml_kernel(beta, z) must return E_{mu,beta}(z); passed in explicitly.
using MLHandle = std::function<cplx(double beta, cplx z)>;
Value separation_reference(const ProblemSpec& prob, double x, double y, const MLHandle& ml);

}  // namespace fracfield::oracle
