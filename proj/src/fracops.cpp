#include "fracfield/fracops.hpp"

#include <cmath>
#include <string>

#include "fracfield/error.hpp"
#include "fracfield/quadrature.hpp"
#include "fracfield/specfun.hpp"

namespace fracfield {

namespace {

void check_y(double y) {
  if (!(y > 0) || !std::isfinite(y)) throw DomainError("evaluation point y must be > 0");
}

// smallest doubled node count at which the rule settles for g
int settle_jacobi(const quad::CFunc& g, double a, double b, const QuadTolerance& tol) {
  cplx prev(0.0);
  for (int n = 8; n <= 512; n *= 2) {
    auto r = quad::gauss_jacobi01(n, a, b);
    cplx s(0.0);
    for (int i = 0; i < n; ++i) s += r.w[i] * g(r.t[i]);
    if (n > 8 && std::abs(s - prev) <= std::max(tol.rel * std::abs(s), tol.abs_floor)) return n;
    prev = s;
  }
  throw QuadratureFailure("inner fractional integral did not settle at 512 nodes");
}

}  // namespace

void validate(const RieszFellerSymbol& s) {
  if (!(s.alpha > 0 && s.alpha <= 2))
    throw DomainError("Riesz-Feller order must satisfy 0 < alpha <= 2");
  if (std::abs(s.theta) > std::min(s.alpha, 2 - s.alpha) + 1e-15)
    throw DomainError("Riesz-Feller skewness must satisfy |theta| <= min(alpha, 2 - alpha)");
}

void validate(const HilferOrder& o, bool solver_range) {
  double lo = solver_range ? 1.0 : 0.0;
  if (!(o.mu > lo && o.mu <= 2))
    throw DomainError(solver_range ? "Hilfer order must satisfy 1 < mu <= 2"
                                   : "Hilfer order must satisfy 0 < mu <= 2");
  if (!(o.nu >= 0 && o.nu <= 1)) throw DomainError("Hilfer type must satisfy 0 <= nu <= 1");
}

cplx psi(const RieszFellerSymbol& sym, double kappa) {
  if (kappa == 0.0) return {0.0, 0.0};
  double mag = std::pow(std::abs(kappa), sym.alpha);
  double ph = (kappa > 0 ? 1.0 : -1.0) * sym.theta * M_PI / 2;
  return std::polar(mag, ph);
}

double rl_integral(const SampledFunction& f, double mu, double y, const QuadTolerance& tol) {
  check_y(y);
  if (mu < 0) throw DomainError("rl_integral: order must be >= 0");
  if (mu == 0) return f(y);
  const double p = f.power();
  if (!(p > -1)) throw DomainError("rl_integral: integrand not integrable at 0 (power <= -1)");
  quad::CFunc g = [&](double t) { return cplx(f(y * t) / std::pow(t, p), 0.0); };
  auto r = quad::jacobi_adaptive(g, mu - 1.0, p, tol.rel, tol.abs_floor);
  return r.value.real() * std::pow(y, mu) * rgamma(mu);
}

double hilfer_derivative(const SampledFunction& f, const HilferOrder& ord, double y,
                         const QuadTolerance& tol) {
  check_y(y);
  validate(ord);
  const int n = ord.mu <= 1.0 ? 1 : 2;
  const double b1 = (1.0 - ord.nu) * (n - ord.mu);
  const double b2 = ord.nu * (n - ord.mu);
  const double p = f.power();

  // F = I^{b1} f on a fixed rule, so F is smooth in its argument
  std::function<double(double)> F;
  quad::JacobiRule inner;
  if (b1 == 0.0) {
    F = [&](double u) { return f(u); };
  } else {
    quad::CFunc g_at_y = [&](double t) { return cplx(f(y * t) / std::pow(t, p), 0.0); };
    int nin = settle_jacobi(g_at_y, b1 - 1.0, p, tol);
    inner = quad::gauss_jacobi01(nin, b1 - 1.0, p);
    const double rg = rgamma(b1);
    F = [&, rg](double u) {
      double s = 0.0;
      for (std::size_t i = 0; i < inner.t.size(); ++i)
        s += inner.w[i] * f(u * inner.t[i]) / std::pow(inner.t[i], p);
      return s * std::pow(u, b1) * rg;
    };
  }

  // G = d^n F / du^n by Richardson-extrapolated central differences
  auto G = [&](double u, double* err) {
    const int levels = 4;
    double h = std::min(0.1 * std::max(1.0, u), 0.25 * u);
    double T[levels][levels];
    double f0 = n == 2 ? F(u) : 0.0;
    for (int i = 0; i < levels; ++i, h *= 0.5) {
      double fp = F(u + h), fm = F(u - h);
      T[i][0] = n == 1 ? (fp - fm) / (2 * h) : (fp - 2 * f0 + fm) / (h * h);
      double fac = 4.0;
      for (int j = 1; j <= i; ++j, fac *= 4.0)
        T[i][j] = T[i][j - 1] + (T[i][j - 1] - T[i - 1][j - 1]) / (fac - 1.0);
    }
    if (err) *err = std::abs(T[levels - 1][levels - 1] - T[levels - 1][levels - 2]);
    return T[levels - 1][levels - 1];
  };

  if (b2 == 0.0) {
    double err;
    double v = G(y, &err);
    if (err > 1e-6 * std::max(1.0, std::abs(v)))
      throw DifferentiationFailure("finite-difference derivative unstable (estimate " +
                                   std::to_string(err) + ")");
    return v;
  }
  // a smooth f with no inner integral keeps a smooth n-th derivative
  const double e = (b1 == 0.0 && f.tag == Smoothness::smooth) ? 0.0 : p + b1 - n;
  if (!(e > -1))
    throw DomainError("hilfer_derivative: inner derivative behaves like y^" + std::to_string(e) +
                      " at 0, outer integral diverges (tag the function's power at 0)");
  double worst = 0.0;
  quad::CFunc g = [&](double t) {
    double err;
    double v = G(y * t, &err);
    worst = std::max(worst, err / std::max(std::abs(v), 1e-300));
    return cplx(v / std::pow(t, e), 0.0);
  };
  auto r = quad::jacobi_adaptive(g, b2 - 1.0, e, std::max(tol.rel, 1e-9), tol.abs_floor, 8, 256);
  if (worst > 1e-5)
    throw DifferentiationFailure("finite-difference derivative unstable inside outer integral");
  return r.value.real() * std::pow(y, b2) * rgamma(b2);
}

cplx hilfer_laplace_rhs(const HilferOrder& ord, double init0, double init1, cplx s, cplx Fhat) {
  validate(ord);
  if (ord.mu <= 1.0) {
    return std::pow(s, ord.mu) * Fhat - std::pow(s, -ord.nu * (1.0 - ord.mu)) * init0;
  }
  const double w = ord.nu * (2.0 - ord.mu);
  return std::pow(s, ord.mu) * Fhat - std::pow(s, 1.0 - w) * init0 - std::pow(s, -w) * init1;
}

cplx prabhakar_apply_complex(cplx omega, double mu, const std::function<cplx(double)>& phi,
                             double exponent, double y, const QuadTolerance& tol) {
  check_y(y);
  if (!(mu > 0)) throw DomainError("prabhakar_apply: mu must be > 0");
  if (!(exponent > -1)) throw DomainError("prabhakar_apply: density not integrable at 0");
  const double ymu = std::pow(y, mu);
  quad::CFunc g = [&](double t) {
    double s = 1.0 - t;
    return ml_two(mu, mu, omega * ymu * std::pow(s, mu)) * phi(y * t) / std::pow(t, exponent);
  };
  auto r = quad::jacobi_adaptive(g, mu - 1.0, exponent, tol.rel, tol.abs_floor);
  return r.value * ymu;
}

cplx prabhakar_apply(cplx omega, double mu, const SampledFunction& phi, double y,
                     const QuadTolerance& tol) {
  return prabhakar_apply_complex(
      omega, mu, [&](double u) { return cplx(phi(u), 0.0); }, phi.power(), y, tol);
}

cplx lemma1_kernel(const HilferOrder& ord, double varsigma, cplx rhat, double y,
                   bool plus_branch) {
  check_y(y);
  validate(ord);
  if (varsigma < 0) throw DomainError("lemma1_kernel: varsigma must be >= 0");
  const double rho = (1.0 - ord.nu) * (2.0 - ord.mu);
  const double beta = 2.0 - rho - varsigma;
  cplx arg = (plus_branch ? -1.0 : 1.0) * rhat * std::pow(y, ord.mu);
  return std::pow(y, beta - 1.0) * ml_two(ord.mu, beta, arg);
}

}  // namespace fracfield
