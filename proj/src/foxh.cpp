#include "fracfield/foxh.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fracfield {

namespace {

constexpr double kSame = 1e-12;

bool same_pair(const ParamPair& x, const ParamPair& y) {
  return std::abs(x.first - y.first) <= kSame * std::max(1.0, std::abs(x.first)) &&
         std::abs(x.second - y.second) <= kSame * std::max(1.0, std::abs(x.second));
}

double m_star_of(const HFunctionSpec& s) {
  double v = 0.0;
  for (auto& l : s.lower) v += l.second;
  for (auto& u : s.upper) v -= u.second;
  return v;
}

double c_const_of(const HFunctionSpec& s) {
  double logc = 0.0;
  for (auto& u : s.upper) logc += u.second * std::log(u.second);
  for (auto& l : s.lower) logc -= l.second * std::log(l.second);
  return std::exp(logc);
}

// Residue series for the poles of Gamma(b_h - B_h s), s = (b_h + k)/B_h.
detail::GammaSeries pole_series(const HFunctionSpec& s, int h, cplx z) {
  detail::GammaSeries g;
  const double bh = s.lower[h].first, Bh = s.lower[h].second;
  const double s0 = bh / Bh, s1 = 1.0 / Bh;
  for (int j = 0; j < s.m; ++j) {
    if (j == h) continue;
    auto [b, B] = s.lower[j];
    g.num.push_back({b - B * s0, -B * s1});
  }
  for (int j = 0; j < s.n; ++j) {
    auto [a, A] = s.upper[j];
    g.num.push_back({1.0 - a + A * s0, A * s1});
  }
  for (int j = s.m; j < s.q; ++j) {
    auto [b, B] = s.lower[j];
    g.den.push_back({1.0 - b + B * s0, B * s1});
  }
  for (int j = s.n; j < s.p; ++j) {
    auto [a, A] = s.upper[j];
    g.den.push_back({a - A * s0, -A * s1});
  }
  g.z = z;
  g.e0 = s0;
  g.e1 = s1;
  g.turns1 = 1.0;
  g.coef = 1.0 / Bh;
  g.coincident_on_num_pole = true;
  return g;
}

// Poles of Gamma(1 - a_i + A_i s) (left) must not meet poles of Gamma(b_h - B_h s) (right).
void check_pole_separation(const HFunctionSpec& s) {
  for (int h = 0; h < s.m; ++h)
    for (int i = 0; i < s.n; ++i) {
      auto [b, B] = s.lower[h];
      auto [a, A] = s.upper[i];
      for (int k = 0; k < 200; ++k) {
        // right pole (b+k)/B equals left pole (a-1-l)/A for some l >= 0
        double l = a - 1.0 - A * (b + k) / B;
        if (l < -0.5) break;
        if (std::abs(l - std::nearbyint(l)) <= 1e-9 * std::max(1.0, std::abs(l)))
          throw DomainError("H-function undefined: left and right Gamma poles overlap");
      }
    }
}

ScaledComplex cpow_scaled(cplx x, double c) {
  if (c == 0.0) return {cplx(1.0, 0.0), 0.0};
  cplx lx = std::log(x);
  return ScaledComplex{std::exp(cplx(0.0, c * lx.imag())), c * lx.real()};
}

}  // namespace

void validate(const HFunctionSpec& s) {
  if (s.p != static_cast<int>(s.upper.size()) || s.q != static_cast<int>(s.lower.size()))
    throw DomainError("H spec: p, q must match the parameter list lengths");
  if (!(0 <= s.n && s.n <= s.p && 1 <= s.m && s.m <= s.q))
    throw DomainError("H spec: need 0 <= n <= p and 1 <= m <= q");
  for (auto& u : s.upper)
    if (!(u.second > 0)) throw DomainError("H spec: A_j must be > 0");
  for (auto& l : s.lower)
    if (!(l.second > 0)) throw DomainError("H spec: B_j must be > 0");
}

ScaledValue h_bare_series(const HFunctionSpec& s, cplx z, const SeriesOptions& opt) {
  validate(s);
  const double ms = m_star_of(s);
  if (ms < -1e-14)
    throw NonConvergence("H residue series diverges: sum B - sum A < 0");
  if (std::abs(ms) <= 1e-14 && std::abs(z) >= 1.0 / c_const_of(s))
    throw NonConvergence("H residue series: |z| outside the convergence disc");
  check_pole_separation(s);

  auto wright_form = [&]() {
    // H^{1,0}_{1,1}[z|(a,A);(b,B)] = (1/B) z^(b/B) phi(-A/B, a - A b/B; -z^(1/B))
    auto [a, A] = s.upper[0];
    auto [b, B] = s.lower[0];
    double zr = z.real();
    ScaledValue w = wright_scaled(-A / B, a - A * b / B, -std::pow(zr, 1.0 / B), opt);
    w.value = w.value * ScaledComplex{cplx(1.0 / B, 0.0), (b / B) * std::log(zr)};
    return w;
  };
  const bool wright_ok = s.m == 1 && s.n == 0 && s.p == 1 && s.q == 1 && z.imag() == 0.0 &&
                         z.real() > 0.0 && s.upper[0].second < s.lower[0].second;

  ScaledComplex total;
  std::vector<std::pair<double, double>> errs;  // (log|v_h|, rel_h)
  int terms = 0;
  try {
    for (int h = 0; h < s.m; ++h) {
      ScaledValue v = detail::sum_gamma_series(pole_series(s, h, z), opt);
      total = total + v.value;
      errs.push_back({v.value.log_abs(), v.rel_bound});
      terms += v.terms;
    }
  } catch (const NonConvergence&) {
    if (wright_ok) return wright_form();
    throw;
  }
  ScaledValue out;
  out.value = total;
  out.terms = terms;
  double lt = total.log_abs();
  double rel = 0.0;
  for (auto [lv, r] : errs)
    if (std::isfinite(lv)) rel += r * std::exp(lv - lt);
  out.rel_bound = std::isfinite(lt) ? rel : 0.0;
  if (wright_ok && out.rel_bound > 1e-12) return wright_form();
  return out;
}

ScaledValue h_series_scaled(const HFunctionSpec& s, cplx x, const SeriesOptions& opt) {
  validate(s);
  if (x == cplx(0.0, 0.0)) {
    // leading behaviour x^(arg_power * b_h/B_h + coef_power)
    double emin = INFINITY;
    for (int h = 0; h < s.m; ++h)
      emin = std::min(emin, s.arg_power * s.lower[h].first / s.lower[h].second + s.coef_power);
    if (emin > 1e-14) return {};
    if (emin < -1e-14) throw DomainError("H spec is singular at x = 0");
    cplx c(0.0, 0.0);
    for (int h = 0; h < s.m; ++h) {
      double e = s.arg_power * s.lower[h].first / s.lower[h].second + s.coef_power;
      if (std::abs(e - emin) > 1e-14) continue;
      detail::GammaSeries g = pole_series(s, h, s.arg_scale);
      g.max_k = 0;
      c += detail::sum_gamma_series(g, opt).value.value();
    }
    ScaledValue out;
    out.value = scaled_from(c * s.prefactor);
    out.rel_bound = 1e-15;
    out.terms = 1;
    return out;
  }
  cplx z = s.arg_power == 1.0 ? s.arg_scale * x : s.arg_scale * std::pow(x, s.arg_power);
  if (x.imag() == 0.0 && x.real() > 0.0 && s.arg_scale.imag() == 0.0)
    z = cplx(s.arg_scale.real() * std::pow(x.real(), s.arg_power), 0.0);
  ScaledValue v = h_bare_series(s, z, opt);
  v.value = v.value * cpow_scaled(x, s.coef_power) * s.prefactor;
  return v;
}

SeriesValue h_series_eval(const HFunctionSpec& s, cplx x, const SeriesOptions& opt) {
  ScaledValue v = h_series_scaled(s, x, opt);
  SeriesValue r;
  r.value = v.value.value();
  r.trunc_bound = v.rel_bound * std::abs(r.value);
  r.terms = v.terms;
  return r;
}

cplx h_series(const HFunctionSpec& s, cplx x, const SeriesOptions& opt) {
  return h_series_eval(s, x, opt).value;
}

AsymptoticParams asymptotic_params(const HFunctionSpec& s) {
  validate(s);
  if (s.n != 0 || s.q != s.m)
    throw DomainError("H asymptotic form needs n = 0 and q = m");
  AsymptoticParams ap{};
  double sa = 0, sb = 0;
  for (auto& u : s.upper) sa += u.first;
  for (auto& l : s.lower) sb += l.first;
  ap.alpha_star = sa - sb + (s.q - s.p + 1) / 2.0;
  ap.m_star = m_star_of(s);
  if (!(ap.m_star > 0)) throw DomainError("H asymptotic form needs m* = sum B - sum A > 0");
  ap.C = c_const_of(s);
  double logB = 0.5 * (s.m - s.p - 1) * std::log(2.0 * M_PI) +
                (1.0 - ap.alpha_star) / ap.m_star * std::log(ap.C) - 0.5 * std::log(ap.m_star);
  for (auto& u : s.upper) logB += (0.5 - u.first) * std::log(u.second);
  for (int k = 0; k < s.m; ++k) logB += (s.lower[k].first - 0.5) * std::log(s.lower[k].second);
  ap.B = std::exp(logB);
  return ap;
}

ScaledComplex h_bare_asymptotic(const HFunctionSpec& s, cplx z) {
  AsymptoticParams ap = asymptotic_params(s);
  cplx lz = std::log(z);
  cplx e = -ap.m_star * std::pow(ap.C, 1.0 / ap.m_star) * std::exp(lz / ap.m_star);
  cplx pw = (1.0 - ap.alpha_star) / ap.m_star * lz;
  cplx tot = e + pw;
  return ScaledComplex{ap.B * std::exp(cplx(0.0, tot.imag())), tot.real()}.normalized();
}

ScaledComplex h_asymptotic_scaled(const HFunctionSpec& s, cplx x) {
  cplx z = s.arg_scale * std::pow(x, s.arg_power);
  if (x.imag() == 0.0 && x.real() > 0.0 && s.arg_scale.imag() == 0.0)
    z = cplx(s.arg_scale.real() * std::pow(x.real(), s.arg_power), 0.0);
  return h_bare_asymptotic(s, z) * cpow_scaled(x, s.coef_power) * s.prefactor;
}

cplx h_asymptotic(const HFunctionSpec& s, cplx x) { return h_asymptotic_scaled(s, x).value(); }

HFunctionSpec ml_as_h(double alpha, double beta) {
  if (!(alpha > 0)) throw DomainError("ml_as_h: alpha must be > 0");
  HFunctionSpec s;
  s.m = 1;
  s.n = 1;
  s.p = 1;
  s.q = 2;
  s.upper = {{0.0, 1.0}};
  s.lower = {{0.0, 1.0}, {1.0 - beta, alpha}};
  s.arg_scale = -1.0;
  return s;
}

HFunctionSpec mellin_cosine_map(const HFunctionSpec& s, double rho, double delta, cplx a) {
  validate(s);
  if (!(delta > 0)) throw ValidityError("cosine map: delta must be > 0");
  std::vector<std::string> fails;
  double bmin = INFINITY;
  for (int j = 0; j < s.m; ++j) bmin = std::min(bmin, s.lower[j].first / s.lower[j].second);
  if (!(rho + delta * bmin > 0))
    fails.push_back("rho + delta*min(b_j/B_j) > 0 fails (value " +
                    std::to_string(rho + delta * bmin) + ")");
  if (s.n > 0) {
    double amax = -INFINITY;
    for (int j = 0; j < s.n; ++j)
      amax = std::max(amax, (s.upper[j].first - 1.0) / s.upper[j].second);
    if (!(rho + delta * amax < 1.5))
      fails.push_back("rho + delta*max((a_j-1)/A_j) < 3/2 fails (value " +
                      std::to_string(rho + delta * amax) + ")");
  }
  double theta = 0.0;
  for (int j = 0; j < s.p; ++j) theta += (j < s.n ? 1 : -1) * s.upper[j].second;
  for (int j = 0; j < s.q; ++j) theta += (j < s.m ? 1 : -1) * s.lower[j].second;
  if (!(theta > 0))
    fails.push_back("theta* > 0 fails (theta* = " + std::to_string(theta) + ")");
  else if (!(std::abs(std::arg(a)) < M_PI * theta / 2))
    fails.push_back("|arg a| < pi*theta*/2 fails (|arg a| = " + std::to_string(std::abs(std::arg(a))) +
                    ", theta* = " + std::to_string(theta) + ")");
  if (!fails.empty()) {
    std::string msg = "Mellin-cosine map validity:";
    for (auto& f : fails) msg += " " + f + ";";
    throw ValidityError(msg);
  }
  HFunctionSpec r;
  r.m = s.n + 1;
  r.n = s.m;
  r.p = s.q + 1;
  r.q = s.p + 2;
  for (auto& l : s.lower) r.upper.push_back({1.0 - l.first, l.second});
  r.upper.push_back({0.5 * (1.0 + rho), 0.5 * delta});
  r.lower.push_back({rho, delta});
  for (auto& u : s.upper) r.lower.push_back({1.0 - u.first, u.second});
  r.lower.push_back({0.5 * (1.0 + rho), 0.5 * delta});
  r.prefactor = M_PI * s.prefactor;
  r.coef_power = -rho;
  r.arg_power = delta;
  r.arg_scale = 1.0 / a;
  return r;
}

HFunctionSpec h_reduce(const HFunctionSpec& in) {
  validate(in);
  HFunctionSpec s = in;
  bool changed = true;
  while (changed) {
    changed = false;
    // Gamma(1-a_i+A_i s) over Gamma(1-b_j+B_j s): i <= n against j > m
    for (int i = 0; i < s.n && !changed; ++i)
      for (int j = s.m; j < s.q && !changed; ++j)
        if (same_pair(s.upper[i], s.lower[j])) {
          s.upper.erase(s.upper.begin() + i);
          s.lower.erase(s.lower.begin() + j);
          --s.n;
          --s.p;
          --s.q;
          changed = true;
        }
    // Gamma(b_j-B_j s) over Gamma(a_i-A_i s): j <= m against i > n, keeping m >= 1
    for (int j = 0; j < s.m && s.m > 1 && !changed; ++j)
      for (int i = s.n; i < s.p && !changed; ++i)
        if (same_pair(s.lower[j], s.upper[i])) {
          s.upper.erase(s.upper.begin() + i);
          s.lower.erase(s.lower.begin() + j);
          --s.m;
          --s.p;
          --s.q;
          changed = true;
        }
  }
  return s;
}

std::string describe(const HFunctionSpec& s) {
  std::ostringstream os;
  os.precision(10);
  os << "H^{" << s.m << "," << s.n << "}_{" << s.p << "," << s.q << "}[";
  for (std::size_t i = 0; i < s.upper.size(); ++i)
    os << (i ? "," : "") << "(" << s.upper[i].first << "," << s.upper[i].second << ")";
  os << ";";
  for (std::size_t i = 0; i < s.lower.size(); ++i)
    os << (i ? "," : "") << "(" << s.lower[i].first << "," << s.lower[i].second << ")";
  os << "]";
  return os.str();
}

}  // namespace fracfield
