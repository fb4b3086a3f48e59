#pragma once
#include <complex>
#include <functional>

#include "fracfield/scaled.hpp"

namespace fracfield {

struct RieszFellerSymbol {
  double alpha = 2.0;
  double theta = 0.0;
};

struct HilferOrder {
  double mu = 2.0;
  double nu = 1.0;
};

enum class Smoothness { smooth, power_singular };

// f(y) for y > 0. A power_singular tag means f(y) = y^exponent * (smooth in y)
// near 0; quadrature puts that power into the weight.
struct SampledFunction {
  std::function<double(double)> f;
  Smoothness tag = Smoothness::smooth;
  double exponent = 0.0;

  double operator()(double y) const { return f(y); }
  double power() const { return tag == Smoothness::power_singular ? exponent : 0.0; }
};

void validate(const RieszFellerSymbol& s);
void validate(const HilferOrder& o, bool solver_range = false);

cplx psi(const RieszFellerSymbol& sym, double kappa);

struct QuadTolerance {
  double rel = 1e-11;
  double abs_floor = 1e-15;
};

double rl_integral(const SampledFunction& f, double mu, double y, const QuadTolerance& tol = {});

double hilfer_derivative(const SampledFunction& f, const HilferOrder& ord, double y,
                         const QuadTolerance& tol = {});

cplx hilfer_laplace_rhs(const HilferOrder& ord, double init0, double init1, cplx s, cplx Fhat);

cplx prabhakar_apply(cplx omega, double mu, const SampledFunction& phi, double y,
                     const QuadTolerance& tol = {});

// Complex-valued density; phi(y) ~ y^exponent near 0.
cplx prabhakar_apply_complex(cplx omega, double mu, const std::function<cplx(double)>& phi,
                             double exponent, double y, const QuadTolerance& tol = {});

// y^(1-rho-vs) E_{mu, 2-rho-vs}(-/+ rhat y^mu), rho = (1-nu)(2-mu); plus_branch
// selects s^mu + rhat (argument -rhat y^mu).
cplx lemma1_kernel(const HilferOrder& ord, double varsigma, cplx rhat, double y,
                   bool plus_branch = true);

}  // namespace fracfield
