#pragma once
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "fracfield/error.hpp"

namespace fracfield::quad {

using cplx = std::complex<double>;

struct Result {
  cplx value{0.0, 0.0};
  double error = 0.0;
  int evaluations = 0;
};

using CFunc = std::function<cplx(double)>;

// Globally adaptive Gauss-Kronrod (10/21) on [a,b].
// Stops when error <= max(abs_tol, rel_tol*|I|). Throws QuadratureFailure
// when the interval budget runs out and throw_on_fail is set.
Result gk21(const CFunc& f, double a, double b, double abs_tol, double rel_tol,
            int max_intervals = 2000, bool throw_on_fail = true);

// Integral over [a, inf) of a function that decays, walking panels of the
// given width until the integrand and panel contributions are negligible.
Result semi_infinite(const CFunc& f, double a, double panel, double abs_tol, double rel_tol,
                     double max_extent = 1e7);

// Nodes and weights on [0,1] for the weight (1-t)^a t^b, a,b > -1.
struct JacobiRule {
  std::vector<double> t;
  std::vector<double> w;
};
JacobiRule gauss_jacobi01(int n, double a, double b);

// int_0^1 g(t) (1-t)^a t^b dt with n doubled from n0 until two successive
// rules agree to tol (relative, with absolute floor abs_floor).
Result jacobi_adaptive(const CFunc& g, double a, double b, double tol, double abs_floor,
                       int n0 = 16, int n_max = 512);

// Wynn epsilon extrapolation of a sequence of partial sums.
// Returns the latest estimate and an error estimate.
struct Extrapolated {
  cplx value;
  double error;
};
Extrapolated wynn_epsilon(const std::vector<cplx>& partial_sums);

// int_0^inf f(k) w(k x) dk with w = cos or sin, by summing panels between
// zeros of w and accelerating the panel sums. x may be zero (then w = 1 or 0).
enum class Trig { cos, sin };
Result oscillatory(const CFunc& f, double x, Trig which, double abs_tol, double rel_tol,
                   double decay_scale, int max_panels = 4000);

}  // namespace fracfield::quad
