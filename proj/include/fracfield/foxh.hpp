#pragma once
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "fracfield/scaled.hpp"
#include "fracfield/specfun.hpp"

namespace fracfield {

using ParamPair = std::pair<double, double>;

// value(x) = prefactor * x^coef_power * H^{m,n}_{p,q}[arg_scale * x^arg_power]
struct HFunctionSpec {
  int m = 1, n = 0, p = 0, q = 1;
  std::vector<ParamPair> upper;  // (a_j, A_j), first n enter Gamma(1 - a_j + A_j s)
  std::vector<ParamPair> lower;  // (b_j, B_j), first m enter Gamma(b_j - B_j s)
  cplx prefactor{1.0, 0.0};
  double arg_power = 1.0;
  cplx arg_scale{1.0, 0.0};
  double coef_power = 0.0;
};

struct AsymptoticParams {
  double alpha_star;
  double m_star;
  double C;
  double B;
};

// Throws DomainError when the spec violates 0<=n<=p, 1<=m<=q or positivity.
void validate(const HFunctionSpec& spec);

// Bare H-function at z via the residue series (no prefactor or argument map).
ScaledValue h_bare_series(const HFunctionSpec& spec, cplx z, const SeriesOptions& opt = {});

// Full spec evaluated at the physical argument x.
cplx h_series(const HFunctionSpec& spec, cplx x, const SeriesOptions& opt = {});
SeriesValue h_series_eval(const HFunctionSpec& spec, cplx x, const SeriesOptions& opt = {});
ScaledValue h_series_scaled(const HFunctionSpec& spec, cplx x, const SeriesOptions& opt = {});

AsymptoticParams asymptotic_params(const HFunctionSpec& spec);
ScaledComplex h_bare_asymptotic(const HFunctionSpec& spec, cplx z);
cplx h_asymptotic(const HFunctionSpec& spec, cplx x);
ScaledComplex h_asymptotic_scaled(const HFunctionSpec& spec, cplx x);

HFunctionSpec ml_as_h(double alpha, double beta);

// int_0^inf k^(rho-1) cos(k x) H[a k^delta] dk as a spec in x. The input is
// read as a bare H (its prefactor is carried, its argument map is not).
HFunctionSpec mellin_cosine_map(const HFunctionSpec& spec, double rho, double delta, cplx a);

HFunctionSpec h_reduce(const HFunctionSpec& spec);

std::string describe(const HFunctionSpec& spec);

}  // namespace fracfield
