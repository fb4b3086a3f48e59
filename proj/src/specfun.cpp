#include "fracfield/specfun.hpp"

#include <quadmath.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fracfield/quadrature.hpp"

namespace fracfield {

namespace {

using f128 = __float128;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kEpsQ = 1e-33;
// terms this far below the peak (in log) are beneath quad rounding
constexpr double kNegligible = 92.0;

bool at_pole(double x, double rel) {
  if (x > 0.5) return false;
  double r = std::nearbyint(x);
  return std::abs(x - r) <= rel * std::max(1.0, std::abs(x));
}

// exp(i*pi*t), exact at multiples of 1/2
cplx cispi(double t) {
  t = std::fmod(t, 2.0);
  if (t < 0) t += 2.0;
  if (t == 0.0) return {1.0, 0.0};
  if (t == 0.5) return {0.0, 1.0};
  if (t == 1.0) return {-1.0, 0.0};
  if (t == 1.5) return {0.0, -1.0};
  return {std::cos(M_PI * t), std::sin(M_PI * t)};
}

void cispiq(f128 t, f128& c, f128& s) {
  t = fmodq(t, 2.0Q);
  if (t < 0) t += 2.0Q;
  if (t == 0.0Q) { c = 1; s = 0; return; }
  if (t == 0.5Q) { c = 0; s = 1; return; }
  if (t == 1.0Q) { c = -1; s = 0; return; }
  if (t == 1.5Q) { c = 0; s = -1; return; }
  c = cosq(M_PIq * t);
  s = sinq(M_PIq * t);
}

// log|Gamma(x)| in quad; parity 1 when Gamma(x) < 0
f128 lgamma_q(f128 x, int& parity) {
  parity = 0;
  if (x > 0) return lgammaq(x);
  f128 n = roundq(x);
  f128 fr = x - n;
  f128 sn = sinq(M_PIq * fr);  // sin(pi x) = (-1)^n sin(pi fr)
  long ni = static_cast<long>(n);
  bool neg = (sn < 0) != (ni % 2 != 0);
  parity = neg ? 1 : 0;
  return logq(M_PIq) - logq(fabsq(sn)) - lgammaq(1 - x);
}

double arg_turns(cplx z) {
  if (z.imag() == 0.0) return z.real() < 0 ? 1.0 : 0.0;
  return std::arg(z) / M_PI;
}

struct Kahan {
  double s = 0, c = 0;
  void add(double x) {
    double y = x - c;
    double t = s + y;
    c = (t - s) - y;
    s = t;
  }
};
struct KahanQ {
  f128 s = 0, c = 0;
  void add(f128 x) {
    f128 y = x - c;
    f128 t = s + y;
    c = (t - s) - y;
    s = t;
  }
};

struct TermInfo {
  double L;      // log|term| without coef
  int parity;    // sign flips from Gamma factors
  double cond;   // magnitude of the log-sum, for error estimation
  bool zero;
};

[[noreturn]] void throw_num_pole(const detail::GammaSeries& s, double x, int k) {
  std::string msg = "Gamma pole in numerator at argument " + std::to_string(x) + " (k=" +
                    std::to_string(k) + ")";
  if (s.coincident_on_num_pole) throw CoincidentPoles(msg);
  throw DomainError(msg);
}

}  // namespace

double rgamma(double x) {
  if (at_pole(x, 1e-14)) return 0.0;
  if (x < 170.0) return 1.0 / std::tgamma(x);
  int sg;
  double l = lgamma_r(x, &sg);
  return sg * std::exp(-l);
}

namespace detail {

ScaledValue sum_gamma_series(const GammaSeries& s, const SeriesOptions& opt) {
  ScaledValue out;
  if (s.coef == cplx(0.0, 0.0)) return out;
  const bool finite = s.max_k >= 0;
  const int cap = finite ? s.max_k : opt.max_terms;

  if (s.z == cplx(0.0, 0.0)) {
    if (s.e0 > 0) return out;
    if (s.e0 < 0) throw DomainError("series: negative power of zero argument");
    // only the k = 0 term survives
    cplx v = s.coef;
    for (auto g : s.num) {
      if (at_pole(g.off, 1e-9)) throw_num_pole(s, g.off, 0);
      v *= std::tgamma(g.off);
    }
    for (auto g : s.den) v *= rgamma(g.off);
    out.value = scaled_from(v);
    out.terms = 1;
    return out;
  }

  const double logabs = std::log(std::abs(s.z));
  const double tz = arg_turns(s.z);

  // pass 1: log magnitudes in double
  std::vector<TermInfo> info;
  info.reserve(64);
  double Lmax = -INFINITY;
  int kpeak = 0, below = 0;
  bool settled = finite;
  for (int k = 0; k <= cap; ++k) {
    TermInfo t{0.0, 0, 2.0, false};
    for (auto g : s.num) {
      double x = g.off + g.step * k;
      if (at_pole(x, 1e-9)) throw_num_pole(s, x, k);
      int sg;
      double lg = lgamma_r(x, &sg);
      t.L += lg;
      t.cond += std::abs(lg);
      if (sg < 0) t.parity ^= 1;
    }
    for (auto g : s.den) {
      double x = g.off + g.step * k;
      if (at_pole(x, 1e-13)) {
        t.zero = true;
        break;
      }
      int sg;
      double lg = lgamma_r(x, &sg);
      t.L -= lg;
      t.cond += std::abs(lg);
      if (sg < 0) t.parity ^= 1;
    }
    if (s.factorial) {
      double lf = std::lgamma(k + 1.0);
      t.L -= lf;
      t.cond += lf;
    }
    double e = s.e0 + s.e1 * k;
    t.L += e * logabs;
    t.cond += std::abs(e * logabs) + std::abs(e * tz + s.turns1 * k) * M_PI;
    info.push_back(t);
    if (t.zero) {
      if (!finite && k > kpeak && k >= 8 && Lmax > -INFINITY && ++below >= 3) {
        settled = true;
        break;
      }
      continue;
    }
    if (t.L > Lmax) {
      Lmax = t.L;
      kpeak = k;
    }
    if (finite) continue;
    if (k > kpeak && k >= 8 && t.L < Lmax - kNegligible) {
      if (++below >= 3) {
        settled = true;
        break;
      }
    } else {
      below = 0;
    }
  }
  if (!settled)
    throw NonConvergence("series did not converge within " + std::to_string(cap) + " terms");
  if (Lmax == -INFINITY) return out;  // every term vanishes

  const int K = static_cast<int>(info.size()) - 1;

  auto tail_after = [&](int stop) {
    double t = 0.0;
    for (int k = stop + 1; k <= K; ++k)
      if (!info[k].zero) t += std::exp(info[k].L - Lmax);
    return t + (finite ? 0.0 : std::exp(-kNegligible));
  };

  // pass 2: double precision
  Kahan sr, si;
  double sumabs_err = 0.0;
  int stop = K, small_run = 0;
  for (int k = 0; k <= K; ++k) {
    const auto& t = info[k];
    if (t.zero) continue;
    double mag = std::exp(t.L - Lmax);
    cplx term = mag * cispi((s.e0 + s.e1 * k) * tz + s.turns1 * k + t.parity);
    sr.add(term.real());
    si.add(term.imag());
    sumabs_err += mag * t.cond * kEps;
    double part = std::hypot(sr.s, si.s);
    if (!finite && k > kpeak && mag <= kEps * part) {
      if (++small_run >= 3) {
        stop = k;
        break;
      }
    } else {
      small_run = 0;
    }
  }
  cplx sum(sr.s, si.s);
  double round_err = sumabs_err + 4 * kEps * std::abs(sum);
  double tail = tail_after(stop);
  out.terms = stop + 1;

  if (round_err > opt.escalate_tol * std::abs(sum)) {
    // quad precision pass
    KahanQ qr, qi;
    f128 logabs_q = logq(static_cast<f128>(std::abs(s.z)));
    if (s.z.imag() == 0.0) logabs_q = logq(fabsq(static_cast<f128>(s.z.real())));
    f128 tz_q = tz;
    f128 Lmax_q = Lmax;
    f128 err_q = 0;
    small_run = 0;
    stop = K;
    for (int k = 0; k <= K; ++k) {
      if (info[k].zero) continue;
      f128 L = 0;
      int parity = 0;
      for (auto g : s.num) {
        int p;
        L += lgamma_q(static_cast<f128>(g.off) + static_cast<f128>(g.step) * k, p);
        parity ^= p;
      }
      for (auto g : s.den) {
        int p;
        L -= lgamma_q(static_cast<f128>(g.off) + static_cast<f128>(g.step) * k, p);
        parity ^= p;
      }
      if (s.factorial) L -= lgammaq(static_cast<f128>(k) + 1);
      f128 e = static_cast<f128>(s.e0) + static_cast<f128>(s.e1) * k;
      L += e * logabs_q;
      f128 c, sn;
      cispiq(e * tz_q + static_cast<f128>(s.turns1) * k + parity, c, sn);
      f128 mag = expq(L - Lmax_q);
      qr.add(mag * c);
      qi.add(mag * sn);
      err_q += mag * static_cast<f128>(info[k].cond) * kEpsQ;
      f128 part = hypotq(qr.s, qi.s);
      if (!finite && k > kpeak && mag <= kEpsQ * part) {
        if (++small_run >= 3) {
          stop = k;
          break;
        }
      } else {
        small_run = 0;
      }
    }
    sum = cplx(static_cast<double>(qr.s), static_cast<double>(qi.s));
    round_err = static_cast<double>(err_q) + 4 * kEps * std::abs(sum);
    tail = tail_after(stop);
    out.terms = stop + 1;
  }

  out.value = ScaledComplex{sum * s.coef, Lmax}.normalized();
  double mag = std::abs(sum);
  out.rel_bound = mag > 0 ? (round_err + tail) / mag : INFINITY;
  return out;
}

ScaledValue ml_asymptotic(double alpha, double beta, cplx z) {
  if (!(alpha > 0.0 && alpha <= 2.0)) throw DomainError("ML asymptotic: needs 0 < alpha <= 2");
  const double az = std::abs(z);
  const double phi = (z.imag() == 0.0 && z.real() < 0) ? M_PI : std::arg(z);
  const double r = std::pow(az, 1.0 / alpha);
  const double logr = std::log(az) / alpha;
  ScaledComplex acc;
  for (int m = -2; m <= 2; ++m) {
    double ang = phi + 2.0 * M_PI * m;
    double lim = alpha * M_PI;
    double w;
    if (std::abs(std::abs(ang) - lim) <= 1e-14 * lim) w = 0.5;
    else if (std::abs(ang) < lim) w = 1.0;
    else continue;
    double th = ang / alpha;
    // zeta^(1-beta) e^zeta / alpha with zeta = r e^{i th}
    double ls = r * std::cos(th) + (1.0 - beta) * logr;
    double ph = r * std::sin(th) + (1.0 - beta) * th;
    acc = acc + ScaledComplex{w / alpha * cplx(std::cos(ph), std::sin(ph)), ls};
  }
  // algebraic part, truncated at its smallest term
  cplx alg(0.0, 0.0);
  cplx zinv = 1.0 / z;
  cplx zp(1.0, 0.0);
  double last = INFINITY, err = 0.0;
  for (int k = 1; k <= 400; ++k) {
    zp *= zinv;
    double x = beta - alpha * k;
    if (at_pole(x, 1e-13)) continue;
    cplx t = zp * rgamma(x);
    double a = std::abs(t);
    if (a > last) break;  // asymptotic series starts to grow
    alg -= t;
    last = a;
    err = a;
    if (a <= kEps * std::abs(alg) * 1e-3) break;
  }
  ScaledComplex total = acc + scaled_from(alg);
  ScaledValue out;
  out.value = total;
  double mag = std::exp(total.log_abs());
  double exp_part = std::exp(acc.log_abs() - total.log_abs());  // relative weight
  out.rel_bound = (err + 4 * kEps * std::abs(alg)) / std::max(mag, 1e-300) +
                  (r + 4.0) * kEps * (std::isfinite(exp_part) ? exp_part : 1.0);
  if (!std::isfinite(out.rel_bound)) out.rel_bound = 10 * kEps;
  out.terms = 0;
  return out;
}

namespace {
// log(1 + i u) - i u
cplx log1p_iu_minus(double u) {
  double im;
  if (std::abs(u) < 0.1) {
    double u2 = u * u, term = u, acc = 0.0;
    for (int k = 1; k <= 12; ++k) {
      term *= -u2;
      acc += term / (2 * k + 1);
    }
    im = acc;
  } else {
    im = std::atan(u) - u;
  }
  return {0.5 * std::log1p(u * u), im};
}
// exp(v) - 1 - v
cplx exp_m1_mv(cplx v) {
  if (std::abs(v) < 0.5) {
    cplx term = v, acc(0.0);
    for (int k = 2; k <= 24; ++k) {
      term *= v / static_cast<double>(k);
      acc += term;
    }
    return acc;
  }
  return std::exp(v) - 1.0 - v;
}
}  // namespace

ScaledValue wright_line_integral(double lambda, double b, double w) {
  if (!(lambda > 0 && lambda < 1 && w > 0)) throw DomainError("wright_line_integral: bad parameters");
  const double c = std::pow(w * lambda, 1.0 / (1.0 - lambda));
  const double fc = c - c / lambda;
  // s = c (1 + i u); the linear part of the phase cancels exactly at the saddle
  quad::CFunc g = [&](double u) {
    cplx lm = log1p_iu_minus(u);
    cplx l1 = lm + cplx(0.0, u);
    cplx ex = -(c / lambda) * (exp_m1_mv(lambda * l1) + lambda * lm);
    return std::exp(ex - b * l1);
  };
  const double width = 1.0 / std::sqrt(c * (1.0 - lambda));
  const double panel = c >= 1.0 ? width : std::min(std::max(width, 0.05 / c), 2.0 * M_PI / c);
  quad::Result r = quad::semi_infinite(g, 0.0, panel, 0.0, 1e-14, std::max(1e7 / c, 1e4 * width));
  ScaledValue out;
  out.value =
      ScaledComplex{cplx(r.value.real() / M_PI, 0.0), fc + (1.0 - b) * std::log(c)}.normalized();
  out.rel_bound = r.error / std::max(std::abs(r.value.real()), 1e-300) + 1e-13;
  out.terms = r.evaluations;
  return out;
}

}  // namespace detail

namespace {

SeriesValue to_value(const ScaledValue& sv) {
  SeriesValue v;
  v.value = sv.value.value();
  v.trunc_bound = sv.rel_bound * std::abs(v.value);
  v.terms = sv.terms;
  return v;
}

void check_alpha(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("alpha must be > 0");
}

}  // namespace

ScaledValue ml_two_scaled(double alpha, double beta, cplx z, const SeriesOptions& opt) {
  check_alpha(alpha);
  if (alpha <= 2.0 && z != cplx(0.0)) {
    const double r = std::pow(std::abs(z), 1.0 / alpha);
    if (r > opt.ml_asymptotic_radius) return detail::ml_asymptotic(alpha, beta, z);
    // below the radius the expansion is still used when its own bound is tight
    if (r > 0.25 * opt.ml_asymptotic_radius) {
      ScaledValue a = detail::ml_asymptotic(alpha, beta, z);
      if (a.rel_bound <= 1e-14) return a;
    }
  }
  detail::GammaSeries s;
  s.den = {{beta, alpha}};
  s.factorial = false;
  s.z = z;
  return detail::sum_gamma_series(s, opt);
}

SeriesValue ml_two_eval(double alpha, double beta, cplx z, const SeriesOptions& opt) {
  return to_value(ml_two_scaled(alpha, beta, z, opt));
}

cplx ml_two(double alpha, double beta, cplx z, const SeriesOptions& opt) {
  return ml_two_eval(alpha, beta, z, opt).value;
}

cplx ml_one(double alpha, cplx z, const SeriesOptions& opt) { return ml_two(alpha, 1.0, z, opt); }

SeriesValue ml_four_eval(const MLParams& p, cplx z, const SeriesOptions& opt) {
  check_alpha(p.alpha);
  if (!(p.kappa_ml > 0.0)) throw DomainError("kappa_ml must be > 0");
  if (!(p.alpha > p.kappa_ml - 1.0))
    throw DomainError("four-parameter ML needs alpha > kappa_ml - 1");
  if (p.gamma == 1.0 && p.kappa_ml == 1.0) return ml_two_eval(p.alpha, p.beta, z, opt);
  if (at_pole(p.gamma, 1e-14)) {
    // (gamma)_{kappa n} with gamma a non-positive integer: a polynomial when
    // kappa is an integer
    if (p.kappa_ml != std::nearbyint(p.kappa_ml))
      throw DomainError("non-positive integer gamma with non-integer kappa_ml");
    const int g = static_cast<int>(-std::nearbyint(p.gamma));
    const int kap = static_cast<int>(std::nearbyint(p.kappa_ml));
    cplx sum(0.0), zp(1.0);
    double fact = 1.0;
    for (int n = 0; n * kap <= g; ++n) {
      double poch = 1.0;
      for (int j = 0; j < kap * n; ++j) poch *= (p.gamma + j);
      if (n > 0) fact *= n;
      sum += poch * zp * rgamma(p.alpha * n + p.beta) / fact;
      zp *= z;
    }
    SeriesValue v;
    v.value = sum;
    v.trunc_bound = 8 * kEps * std::abs(sum);
    v.terms = g / kap + 1;
    return v;
  }
  detail::GammaSeries s;
  s.num = {{p.gamma, p.kappa_ml}};
  s.den = {{p.beta, p.alpha}};
  s.z = z;
  int sg;
  double lg = lgamma_r(p.gamma, &sg);
  s.coef = sg * std::exp(-lg);
  return to_value(detail::sum_gamma_series(s, opt));
}

cplx ml_four(const MLParams& p, cplx z, const SeriesOptions& opt) {
  return ml_four_eval(p, z, opt).value;
}

SeriesValue ml_three_eval(double alpha, double beta, double gamma, cplx z,
                          const SeriesOptions& opt) {
  return ml_four_eval(MLParams{alpha, beta, gamma, 1.0}, z, opt);
}

cplx ml_three(double alpha, double beta, double gamma, cplx z, const SeriesOptions& opt) {
  return ml_three_eval(alpha, beta, gamma, z, opt).value;
}

ScaledValue wright_scaled(double a, double b, cplx z, const SeriesOptions& opt) {
  if (!(a > -1.0)) throw DomainError("wright: needs a > -1");
  const bool line_ok = a < 0.0 && z.imag() == 0.0 && z.real() < 0.0;
  detail::GammaSeries s;
  s.den = {{b, a}};
  s.z = z;
  try {
    ScaledValue v = detail::sum_gamma_series(s, opt);
    if (!line_ok || v.rel_bound <= 1e-12) return v;
  } catch (const NonConvergence&) {
    if (!line_ok) throw;
  }
  return detail::wright_line_integral(-a, b, -z.real());
}

SeriesValue wright_eval(double a, double b, cplx z, const SeriesOptions& opt) {
  return to_value(wright_scaled(a, b, z, opt));
}

cplx wright(double a, double b, cplx z, const SeriesOptions& opt) {
  return wright_eval(a, b, z, opt).value;
}

SeriesValue fox_wright_eval(const FoxWrightSpec& spec, cplx z, const SeriesOptions& opt) {
  double delta = 1.0, rho = 1.0;
  detail::GammaSeries s;
  for (auto [a, A] : spec.upper) {
    if (!(A > 0)) throw DomainError("fox_wright: A_j must be > 0");
    delta -= A;
    rho *= std::pow(A, -A);
    s.num.push_back({a, A});
  }
  for (auto [b, B] : spec.lower) {
    // negative B_j allowed (Wright functions of negative order)
    if (!std::isfinite(B)) throw DomainError("fox_wright: B_j must be finite");
    delta += B;
    if (B != 0.0) rho *= std::pow(std::abs(B), B);
    s.den.push_back({b, B});
  }
  if (delta < -1e-14)
    throw DomainError("fox_wright: divergent parameter balance (1 + sum B - sum A < 0)");
  if (std::abs(delta) <= 1e-14 && std::abs(z) >= rho)
    throw DomainError("fox_wright: |z| outside the radius of convergence");
  s.z = z;
  return to_value(detail::sum_gamma_series(s, opt));
}

cplx fox_wright(const FoxWrightSpec& spec, cplx z, const SeriesOptions& opt) {
  return fox_wright_eval(spec, z, opt).value;
}

}  // namespace fracfield
