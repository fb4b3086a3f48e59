#include "fracfield/oracle.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/ooura_fourier_integrals.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <string>

#include "fracfield/error.hpp"

namespace fracfield::oracle {

namespace bq = boost::math::quadrature;

namespace {

double gk(const std::function<double(double)>& f, double a, double b, double tol, double* err) {
  double e = 0.0;
  double v = bq::gauss_kronrod<double, 61>::integrate(f, a, b, 6, tol, &e);
  if (err) *err = e * std::max(1.0, std::abs(v));
  return v;
}

}  // namespace

Value numeric_laplace(const CHandle& f, cplx s, double tol) {
  const double a = s.real();
  if (!(a > 0)) throw DomainError("numeric_laplace: needs Re(s) > 0");
  auto part = [&](bool im) {
    return [&, im](double y) {
      cplx v = std::exp(-s * y) * f(y);
      return im ? v.imag() : v.real();
    };
  };
  Value out{cplx(0.0), 0.0};
  {
    bq::tanh_sinh<double> ts;
    double er = 0, ei = 0;
    double vr = ts.integrate(part(false), 0.0, 1.0, tol * 1e-2, &er);
    double vi = ts.integrate(part(true), 0.0, 1.0, tol * 1e-2, &ei);
    out.value = {vr, vi};
    out.error = (er + ei) * std::max(1.0, std::abs(out.value));
  }
  const double L = std::max(1.0, 4.0 / a);
  double Y = 1.0, prev = INFINITY;
  for (int k = 0; k < 4000; ++k) {
    double er, ei;
    double vr = gk(part(false), Y, Y + L, 1e-14, &er);
    double vi = gk(part(true), Y, Y + L, 1e-14, &ei);
    cplx pnl(vr, vi);
    out.value += pnl;
    out.error += er + ei;
    Y += L;
    double mag = std::abs(pnl);
    double ratio = prev > 0 && std::isfinite(prev) ? mag / prev : 1.0;
    prev = mag;
    if (k >= 2 && ratio < 0.9) {
      double tail = mag * ratio / (1.0 - ratio);
      if (tail <= 0.1 * tol * std::max(std::abs(out.value), 1e-300)) {
        out.error += tail;
        return out;
      }
    }
    if (mag == 0.0 && k >= 2) return out;
  }
  throw TailDominance("numeric_laplace: tail does not decay fast enough (Re s too small?)");
}

Value numeric_laplace(const SampledFunction& f, cplx s, double tol) {
  return numeric_laplace(CHandle([&](double y) { return cplx(f(y), 0.0); }), s, tol);
}

Value numeric_inverse_laplace(const std::function<cplx(cplx)>& F, double y, int N, double tol) {
  if (!(y > 0)) throw DomainError("numeric_inverse_laplace: y must be > 0");
  auto run = [&](int n) {
    cplx sum(0.0);
    for (int k = 0; k < n; ++k) {
      double th = -M_PI + (k + 0.5) * 2.0 * M_PI / n;
      double c = 0.6407 * th;
      double cot = std::cos(c) / std::sin(c);
      cplx z = (n / y) * cplx(-0.6122 + 0.5017 * th * cot, 0.2645 * th);
      double sn = std::sin(c);
      cplx dz = (n / y) * cplx(0.5017 * (cot - c / (sn * sn)), 0.2645);
      sum += std::exp(z * y) * F(z) * dz;
    }
    return sum / cplx(0.0, static_cast<double>(n));
  };
  cplx a = run(N), b = run(2 * N);
  Value out{b, std::abs(a - b)};
  if (out.error > tol * std::max(1.0, std::abs(b)))
    throw ContourFailure("numeric_inverse_laplace: node doubling disagrees by " +
                         std::to_string(out.error));
  return out;
}

Value cosine_integral(const std::function<double(double)>& h, double rho, double x, double tol) {
  auto f = [&](double k) { return std::pow(k, rho - 1.0) * h(k); };
  if (x == 0.0) {
    bq::exp_sinh<double> es;
    double err = 0, L1 = 0;
    double v = es.integrate(f, tol, &err, &L1);
    if (!(err <= 1e-6 * std::max(1.0, L1))) throw SlowDecay("cosine_integral at x=0 did not converge");
    return {cplx(v, 0.0), err * std::max(1.0, std::abs(v))};
  }
  bq::ooura_fourier_cos<double> oc(tol, 8);
  auto [v, rel] = oc.integrate(f, std::abs(x));
  if (!(rel <= 1e-6)) throw SlowDecay("cosine_integral: oscillatory integral did not converge");
  return {cplx(v, 0.0), rel * std::max(std::abs(v), 1e-300)};
}

Value separation_reference(const ProblemSpec& prob, double x, double y, const MLHandle& ml) {
  validate(prob);
  if (!prob.source.is_zero())
    throw DomainError("separation_reference needs zero source (rapidly decaying data only)");
  auto decaying = [](const BoundaryTransform& b) {
    return b.preset == BoundaryTransform::Preset::zero ||
           b.preset == BoundaryTransform::Preset::gaussian ||
           b.preset == BoundaryTransform::Preset::custom;
  };
  if (!decaying(prob.f_hat) || !decaying(prob.g_hat))
    throw SlowDecay("separation_reference: delta data does not decay");
  const double mu = prob.ord.mu, nu = prob.ord.nu, al = prob.sym.alpha, th = prob.sym.theta;
  const double rho = (1.0 - nu) * (2.0 - mu);
  const bool quantum = prob.kind == Kind::wave || prob.kind == Kind::wave_k ||
                       prob.variant == Variant::quantum;
  const bool classical = quantum && al == 2.0 && mu == 2.0 && nu == 1.0 && th == 0.0;
  auto K = [&](double kap) -> cplx {
    cplx fh = prob.f_hat(kap), gh = prob.g_hat(kap);
    if (classical) {
      double om = std::sqrt(kap * kap + prob.k * prob.k);
      double s = om == 0.0 ? y : std::sin(om * y) / om;
      return std::cos(om * y) * fh + s * gh;
    }
    cplx ps = kap == 0.0 ? cplx(0.0) : std::polar(std::pow(std::abs(kap), al),
                                                   (kap > 0 ? 1.0 : -1.0) * th * M_PI / 2);
    cplx lam = quantum ? -(ps + prob.k * prob.k) : ps - prob.k * prob.k;
    cplx z = std::pow(y, mu) * lam;
    cplx out(0.0);
    if (fh != cplx(0.0)) out += std::pow(y, -rho) * ml(1.0 - rho, z) * fh;
    if (gh != cplx(0.0)) out += std::pow(y, 1.0 - rho) * ml(2.0 - rho, z) * gh;
    return out;
  };
  auto integrand = [&](double kap) {
    cplx v = K(kap) * std::exp(cplx(0.0, -kap * x)) + K(-kap) * std::exp(cplx(0.0, kap * x));
    return v.real() / (2.0 * M_PI);
  };
  // cutoff where the kernel has decayed by 1e-22 relative to its maximum
  double kmax = 0.0, peak = 0.0;
  int quiet = 0;
  for (double kap = 0.0; kap < 1e4; kap += 0.25) {
    double m = std::abs(K(kap)) + std::abs(K(-kap));
    peak = std::max(peak, m);
    if (kap > 1.0 && m <= 1e-22 * peak) {
      if (++quiet >= 8) {
        kmax = kap;
        break;
      }
    } else {
      quiet = 0;
    }
  }
  if (kmax == 0.0) throw SlowDecay("separation_reference: kernel does not decay below 1e-22");
  const double panel = x == 0.0 ? 1.0 : std::min(1.0, M_PI / std::abs(x));
  Value out{cplx(0.0), 0.0};
  for (double a = 0.0; a < kmax; a += panel) {
    double err;
    out.value += gk(integrand, a, std::min(a + panel, kmax), 1e-12, &err);
    out.error += err;
  }
  out.error += 1e-22 * peak * kmax;
  return out;
}

}  // namespace fracfield::oracle
