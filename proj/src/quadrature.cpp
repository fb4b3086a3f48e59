#include "fracfield/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <string>

namespace fracfield::quad {

namespace {

constexpr double xgk[11] = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
constexpr double wgk[11] = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600525478613, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr double wg[5] = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Piece {
  double a, b;
  cplx value;
  double error;
};

Piece rule21(const CFunc& f, double a, double b) {
  double c = 0.5 * (a + b), h = 0.5 * (b - a);
  cplx fc = f(c);
  cplx k = fc * wgk[10];
  cplx g(0.0, 0.0);
  for (int j = 0; j < 10; ++j) {
    cplx f1 = f(c - h * xgk[j]), f2 = f(c + h * xgk[j]);
    k += wgk[j] * (f1 + f2);
    if (j % 2 == 1) g += wg[j / 2] * (f1 + f2);
  }
  k *= h;
  g *= h;
  return {a, b, k, std::abs(k - g)};
}

}  // namespace

Result gk21(const CFunc& f, double a, double b, double abs_tol, double rel_tol, int max_intervals,
            bool throw_on_fail) {
  Result r;
  if (a == b) return r;
  std::vector<Piece> pieces{rule21(f, a, b)};
  r.evaluations = 21;
  for (;;) {
    cplx total(0.0, 0.0);
    double err = 0.0;
    for (const auto& p : pieces) {
      total += p.value;
      err += p.error;
    }
    double target = std::max(abs_tol, rel_tol * std::abs(total));
    if (err <= target || static_cast<int>(pieces.size()) >= max_intervals) {
      r.value = total;
      r.error = err;
      if (err > target && throw_on_fail)
        throw QuadratureFailure("adaptive quadrature: interval budget exhausted (error " +
                                std::to_string(err) + ")");
      return r;
    }
    auto worst = std::max_element(pieces.begin(), pieces.end(),
                                  [](const Piece& x, const Piece& y) { return x.error < y.error; });
    double m = 0.5 * (worst->a + worst->b);
    if (m <= worst->a || m >= worst->b) {  // cannot split further
      worst->error = 0.0;
      continue;
    }
    Piece left = rule21(f, worst->a, m), right = rule21(f, m, worst->b);
    *worst = left;
    pieces.push_back(right);
    r.evaluations += 42;
  }
}

Result semi_infinite(const CFunc& f, double a, double panel, double abs_tol, double rel_tol,
                     double max_extent) {
  Result r;
  int quiet = 0;
  double lo = a;
  while (true) {
    double hi = lo + panel;
    double tol = std::max(abs_tol, rel_tol * std::abs(r.value)) * 0.1;
    Result p = gk21(f, lo, hi, tol, 0.0, 200, false);
    r.value += p.value;
    r.error += p.error;
    r.evaluations += p.evaluations;
    double small = std::max(abs_tol, rel_tol * std::abs(r.value)) * 1e-2;
    quiet = (std::abs(p.value) + p.error <= small) ? quiet + 1 : 0;
    if (quiet >= 3) return r;
    lo = hi;
    if (lo - a > max_extent) throw QuadratureFailure("semi-infinite integral did not settle");
  }
}

JacobiRule gauss_jacobi01(int n, double a, double b) {
  if (n < 1 || a <= -1.0 || b <= -1.0) throw DomainError("gauss_jacobi01: bad parameters");
  // Recurrence for the weight (1-x)^a (1+x)^b on [-1,1].
  Eigen::VectorXd diag(n), sub(std::max(n - 1, 1));
  std::vector<double> alpha(n), beta(n, 0.0);
  double ab = a + b;
  for (int k = 0; k < n; ++k) {
    if (k == 0) {
      alpha[k] = (b - a) / (ab + 2.0);
    } else {
      double d = 2.0 * k + ab;
      alpha[k] = (b * b - a * a) / (d * (d + 2.0));
    }
    if (k == 1) {
      beta[k] = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    } else if (k > 1) {
      double d = 2.0 * k + ab;
      beta[k] = 4.0 * k * (k + a) * (k + b) * (k + ab) / (d * d * (d + 1.0) * (d - 1.0));
    }
    diag(k) = alpha[k];
    if (k > 0) sub(k - 1) = std::sqrt(beta[k]);
  }
  JacobiRule rule;
  rule.t.resize(n);
  rule.w.resize(n);
  std::vector<double> x(n);
  if (n == 1) {
    x[0] = alpha[0];
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub.head(n - 1), Eigen::EigenvaluesOnly);
    for (int i = 0; i < n; ++i) x[i] = es.eigenvalues()(i);
  }
  // Beta(a+1, b+1): total mass of the weight on [0,1]
  double mass = std::exp(std::lgamma(a + 1.0) + std::lgamma(b + 1.0) - std::lgamma(a + b + 2.0));
  for (int i = 0; i < n; ++i) {
    double p_prev = 0.0, p = 1.0, s = 1.0;
    for (int k = 0; k + 1 < n; ++k) {
      double next = ((x[i] - alpha[k]) * p - (k > 0 ? std::sqrt(beta[k]) * p_prev : 0.0)) /
                    std::sqrt(beta[k + 1]);
      p_prev = p;
      p = next;
      s += p * p;
    }
    rule.t[i] = 0.5 * (x[i] + 1.0);
    rule.w[i] = mass / s;
  }
  return rule;
}

Result jacobi_adaptive(const CFunc& g, double a, double b, double tol, double abs_floor, int n0,
                       int n_max) {
  auto apply = [&](int n, int& evals) {
    JacobiRule r = gauss_jacobi01(n, a, b);
    cplx s(0.0, 0.0);
    for (int i = 0; i < n; ++i) s += r.w[i] * g(r.t[i]);
    evals += n;
    return s;
  };
  Result res;
  cplx prev = apply(n0, res.evaluations);
  for (int n = 2 * n0; n <= n_max; n *= 2) {
    cplx cur = apply(n, res.evaluations);
    double diff = std::abs(cur - prev);
    if (diff <= std::max(tol * std::abs(cur), abs_floor)) {
      res.value = cur;
      res.error = diff;
      return res;
    }
    prev = cur;
  }
  throw QuadratureFailure("Gauss-Jacobi doubling did not reach tolerance at n=" +
                          std::to_string(n_max));
}

Extrapolated wynn_epsilon(const std::vector<cplx>& s) {
  const std::size_t n = s.size();
  if (n == 0) return {cplx(0.0), INFINITY};
  if (n < 3) return {s.back(), n > 1 ? std::abs(s[n - 1] - s[n - 2]) : INFINITY};
  // e[k][j]: column k of the epsilon table
  std::vector<std::vector<cplx>> e;
  e.push_back(std::vector<cplx>(n + 1, cplx(0.0)));  // column -1
  e.push_back(s);                                    // column 0
  std::vector<cplx> evens{s.back()};
  for (std::size_t k = 1; k < n; ++k) {
    const auto& prev = e[k];
    const auto& prev2 = e[k - 1];
    std::vector<cplx> col;
    for (std::size_t j = 0; j + 1 < prev.size(); ++j) {
      cplx d = prev[j + 1] - prev[j];
      if (std::abs(d) == 0.0 || !std::isfinite(std::abs(d))) {
        col.clear();
        break;
      }
      col.push_back(prev2[j + 1] + 1.0 / d);
    }
    if (col.empty()) break;
    e.push_back(col);
    if (k % 2 == 0) evens.push_back(col.back());
  }
  cplx best = evens.back();
  double err = evens.size() > 1 ? std::abs(evens.back() - evens[evens.size() - 2])
                                 : std::abs(s[n - 1] - s[n - 2]);
  return {best, err};
}

Result oscillatory(const CFunc& f, double x, Trig which, double abs_tol, double rel_tol,
                   double decay_scale, int max_panels) {
  x = std::abs(x);
  if (x == 0.0) {
    if (which == Trig::sin) return {};
    return semi_infinite(f, 0.0, decay_scale, abs_tol, rel_tol);
  }
  auto w = [&](double k) { return which == Trig::cos ? std::cos(k * x) : std::sin(k * x); };
  CFunc g = [&](double k) { return f(k) * w(k); };
  const double period = M_PI / x;
  // first zero: cos at pi/(2x), sin at pi/x
  double lo = 0.0;
  double hi = which == Trig::cos ? 0.5 * period : period;
  // For long periods relative to the decay scale the first panels are split
  // by the adaptive rule; very short periods get grouped.
  int group = std::max(1, static_cast<int>(std::floor(0.25 * decay_scale / period)));
  Result r;
  std::vector<cplx> partial;
  int quiet = 0;
  double prev_w_err = INFINITY;
  cplx prev_w(0.0);
  for (int j = 0; j < max_panels; ++j) {
    double top = hi + (j == 0 ? 0.0 : (group - 1) * period);
    double tol = std::max(abs_tol, rel_tol * std::abs(r.value)) * 0.05;
    Result p = gk21(g, lo, top, tol, 0.0, 400, false);
    r.value += p.value;
    r.error += p.error;
    r.evaluations += p.evaluations;
    partial.push_back(r.value);
    double target = std::max(abs_tol, rel_tol * std::abs(r.value));
    quiet = (std::abs(p.value) <= 1e-3 * target) ? quiet + 1 : 0;
    if (quiet >= 3) return r;
    if (partial.size() >= 12 && group == 1) {
      auto ex = wynn_epsilon(std::vector<cplx>(partial.end() - std::min<std::size_t>(partial.size(), 24),
                                               partial.end()));
      double d = std::abs(ex.value - prev_w);
      if (d <= 0.1 * target && prev_w_err <= 0.1 * target) {
        r.value = ex.value;
        r.error += d;
        return r;
      }
      prev_w_err = d;
      prev_w = ex.value;
    }
    lo = top;
    hi = top + period;
  }
  throw SlowDecay("oscillatory integral: panel sums did not settle; kernel decays too slowly");
}

}  // namespace fracfield::quad
