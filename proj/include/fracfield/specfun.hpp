#pragma once
#include <complex>
#include <utility>
#include <vector>

#include "fracfield/error.hpp"
#include "fracfield/scaled.hpp"

namespace fracfield {

struct MLParams {
  double alpha = 1.0;
  double beta = 1.0;
  double gamma = 1.0;
  double kappa_ml = 1.0;
};

struct FoxWrightSpec {
  std::vector<std::pair<double, double>> upper;  // (a_j, A_j)
  std::vector<std::pair<double, double>> lower;  // (b_j, B_j)
};

struct SeriesOptions {
  int max_terms = 10000;
  // |z|^(1/alpha) above which the two-parameter ML uses its asymptotic form
  double ml_asymptotic_radius = 40.0;
  // relative rounding-error level that triggers the quad-precision pass
  double escalate_tol = 1e-13;
};

struct SeriesValue {
  cplx value;
  double trunc_bound = 0.0;  // absolute bound on truncation + rounding error
  int terms = 0;
  bool extended = false;  // quad precision pass used
};

struct ScaledValue {
  ScaledComplex value;
  double rel_bound = 0.0;  // error bound relative to |value|
  int terms = 0;
};

cplx ml_two(double alpha, double beta, cplx z, const SeriesOptions& opt = {});
SeriesValue ml_two_eval(double alpha, double beta, cplx z, const SeriesOptions& opt = {});
ScaledValue ml_two_scaled(double alpha, double beta, cplx z, const SeriesOptions& opt = {});

cplx ml_one(double alpha, cplx z, const SeriesOptions& opt = {});

cplx ml_three(double alpha, double beta, double gamma, cplx z, const SeriesOptions& opt = {});
SeriesValue ml_three_eval(double alpha, double beta, double gamma, cplx z,
                          const SeriesOptions& opt = {});

cplx ml_four(const MLParams& p, cplx z, const SeriesOptions& opt = {});
SeriesValue ml_four_eval(const MLParams& p, cplx z, const SeriesOptions& opt = {});

cplx wright(double a, double b, cplx z, const SeriesOptions& opt = {});
SeriesValue wright_eval(double a, double b, cplx z, const SeriesOptions& opt = {});
// Log-scaled Wright function; for -1<a<0 and large negative real z this
// switches to a line integral through the saddle point.
ScaledValue wright_scaled(double a, double b, cplx z, const SeriesOptions& opt = {});

cplx fox_wright(const FoxWrightSpec& spec, cplx z, const SeriesOptions& opt = {});
SeriesValue fox_wright_eval(const FoxWrightSpec& spec, cplx z, const SeriesOptions& opt = {});

double rgamma(double x);  // 1/Gamma(x), zero at poles

namespace detail {

// Gamma(off + step*k)
struct GammaArg {
  double off;
  double step;
};

// sum_k coef * prod Gamma(num) / prod Gamma(den) / k! * z^(e0 + e1 k) * exp(i pi turns1 k)
// z^p uses the principal branch.
struct GammaSeries {
  std::vector<GammaArg> num;
  std::vector<GammaArg> den;
  cplx z{0.0, 0.0};
  double e0 = 0.0;
  double e1 = 1.0;
  double turns1 = 0.0;
  cplx coef{1.0, 0.0};
  bool factorial = true;
  bool coincident_on_num_pole = false;  // CoincidentPoles instead of DomainError
  int max_k = -1;                       // finite sum when >= 0
};

ScaledValue sum_gamma_series(const GammaSeries& s, const SeriesOptions& opt);

// phi(-lambda, b; -w) for 0<lambda<1, w>0 via a Bromwich line through the saddle
ScaledValue wright_line_integral(double lambda, double b, double w);

// Asymptotic two-parameter ML for large |z|, 0 < alpha <= 2
ScaledValue ml_asymptotic(double alpha, double beta, cplx z);

}  // namespace detail

}  // namespace fracfield
