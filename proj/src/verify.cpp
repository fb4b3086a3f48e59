#include "fracfield/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <future>
#include <random>
#include <sstream>

#include "fracfield/error.hpp"
#include "fracfield/foxh.hpp"
#include "fracfield/fracops.hpp"
#include "fracfield/oracle.hpp"
#include "fracfield/solver.hpp"
#include "fracfield/specfun.hpp"

namespace fracfield::verify {

namespace {

constexpr double kEps = 2.220446049250313e-16;

struct Outcome {
  double error;
  std::string detail;
};

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

Check run(const std::string& suite, const std::string& name, double tol, const Options& opt,
          const std::function<Outcome()>& body, double time_limit = 0.0) {
  Check c;
  c.suite = suite;
  c.name = name;
  c.tol = opt.tol_override > 0 ? opt.tol_override : tol;
  auto t0 = std::chrono::steady_clock::now();
  try {
    Outcome o = body();
    c.error = o.error;
    c.detail = o.detail;
    c.pass = std::isfinite(o.error) && o.error <= c.tol;
  } catch (...) {
    c.error = INFINITY;
    c.pass = false;
    try {
      throw;
    } catch (const std::exception& e) {
      c.detail = current_error_name() + ": " + e.what();
    } catch (...) {
      c.detail = "unknown exception";
    }
  }
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (time_limit > 0 && c.seconds > time_limit) {
    c.pass = false;
    c.detail += (c.detail.empty() ? "" : "; ") + std::string("runtime ") + fmt(c.seconds) +
                " s exceeds " + fmt(time_limit) + " s";
  }
  return c;
}

// Several sub-checks with their own tolerances folded into one ratio check.
struct Part {
  double error;
  double tol;
  std::string label;
};

Outcome fold(const std::vector<Part>& parts) {
  double worst = 0.0;
  std::string d;
  for (const auto& p : parts) {
    worst = std::max(worst, std::isfinite(p.error) ? p.error / p.tol : INFINITY);
    d += (d.empty() ? "" : "; ") + p.label + " err " + fmt(p.error) + " (tol " + fmt(p.tol) + ")";
  }
  return {worst, d};
}

double rho_of(double mu, double nu) { return (1.0 - nu) * (2.0 - mu); }

// ---- criterion bodies ------------------------------------------------------

Outcome ml_identities(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(-6.0, 6.0);
  double worst = 0.0;
  int n = 0;
  for (int i = 0; i < 10; ++i) {
    double z = U(rng);
    worst = std::max(worst, rel(ml_two(1, 1, z), std::exp(z)));
    worst = std::max(worst, rel(ml_two(2, 1, -z * z), std::cos(z)));
    worst = std::max(worst, rel(ml_two(2, 1, z * z), std::cosh(z)));
    worst = std::max(worst, rel(ml_two(2, 2, -z * z), std::sin(z) / z));
    n += 4;
  }
  return {worst, std::to_string(n) + " points (exp, cos, cosh, sinc), max relative error"};
}

Outcome ml_laplace_pairs() {
  struct T {
    double a, b, c;
  };
  double worst = 0.0;
  for (T t : {T{1.5, 1, 0.8}, T{2, 2, 1}, T{1.2, 0.7, 0.5}}) {
    oracle::CHandle f = [t](double y) {
      return std::pow(y, t.b - 1.0) * ml_two(t.a, t.b, t.c * std::pow(y, t.a));
    };
    for (double s : {2.0, 3.0, 5.0}) {
      cplx num = oracle::numeric_laplace(f, s).value;
      double exact = std::pow(s, t.a - t.b) / (std::pow(s, t.a) - t.c);
      worst = std::max(worst, rel(num, exact));
    }
  }
  return {worst, "3 triples x 3 s, max relative error"};
}

Outcome lemma1_inversion() {
  double worst = 0.0;
  int n = 0;
  for (double mu : {1.25, 1.5, 1.9})
    for (double nu : {0.0, 0.5, 1.0})
      for (double vs : {0.0, 1.0}) {
        HilferOrder ord{mu, nu};
        auto F = [=](cplx s) { return std::pow(s, vs - nu * (2.0 - mu)) / (std::pow(s, mu) + 1.0); };
        for (double y : {0.5, 1.0, 2.0}) {
          cplx ref = oracle::numeric_inverse_laplace(F, y).value;
          cplx v = lemma1_kernel(ord, vs, 1.0, y, true);
          worst = std::max(worst, std::abs(v - ref));
          ++n;
        }
      }
  return {worst, std::to_string(n) + " points (varsigma 0 and 1), max absolute error"};
}

std::vector<std::pair<std::string, SampledFunction>> rl_corpus() {
  return {
      {"1", {[](double) { return 1.0; }}},
      {"y", {[](double y) { return y; }}},
      {"exp(-y)", {[](double y) { return std::exp(-y); }}},
      {"cos(2y)", {[](double y) { return std::cos(2 * y); }}},
      {"y^-0.3", {[](double y) { return std::pow(y, -0.3); }, Smoothness::power_singular, -0.3}},
      {"y^0.5 exp(-y)",
       {[](double y) { return std::sqrt(y) * std::exp(-y); }, Smoothness::power_singular, 0.5}},
  };
}

double prabhakar_vs_rl() {
  double worst = 0.0;
  for (const auto& [name, f] : rl_corpus())
    for (double mu : {0.5, 1.5, 2.0})
      for (double y : {0.5, 2.0}) {
        cplx p = prabhakar_apply(0.0, mu, f, y);
        double r = rl_integral(f, mu, y);
        worst = std::max(worst, std::abs(p - r) / std::max(1.0, std::abs(r)));
      }
  return worst;
}

double prabhakar_delta_power() {
  const double beta = 0.3, mu = 1.5;
  SampledFunction phi{[=](double y) { return std::pow(y, -beta) / std::tgamma(1 - beta); },
                      Smoothness::power_singular, -beta};
  double worst = 0.0;
  for (double y : {0.5, 1.0, 2.0}) {
    cplx q = prabhakar_apply(-1.0, mu, phi, y);
    cplx c = std::pow(y, mu - beta) * ml_two(mu, mu - beta + 1, -std::pow(y, mu));
    worst = std::max(worst, std::abs(q - c));
  }
  return worst;
}

Outcome hml_roundtrip(std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x5bd1e995ULL);
  std::uniform_real_distribution<double> R(0.2, 3.0), P(-M_PI, M_PI);
  std::vector<cplx> zs = {-3.0, -2.0, -0.5, 0.3, 1.0, 2.5, cplx(0, 3.0)};
  for (int i = 0; i < 4; ++i) zs.push_back(std::polar(R(rng), P(rng)));
  double worst = 0.0;
  int n = 0;
  for (double a : {1.1, 1.5, 2.0})
    for (double b : {0.5, 1.0, 2.0}) {
      HFunctionSpec s = ml_as_h(a, b);
      for (cplx z : zs) {
        worst = std::max(worst, rel(h_series(s, z), ml_two(a, b, z)));
        ++n;
      }
    }
  return {worst, std::to_string(n) + " points over 9 (alpha, beta) pairs, |z| <= 3"};
}

Outcome cosine_map_point() {
  const double mu = 1.5, nu = 0.5, al = 2.0, y = 1.0, x = 0.5;
  const double beta = 1.0 - rho_of(mu, nu);
  auto h = [=](double k) { return ml_two(mu, beta, -std::pow(y, mu) * std::pow(k, al)).real(); };
  cplx ref = oracle::cosine_integral(h, 1.0, x).value;
  HFunctionSpec mapped = mellin_cosine_map(ml_as_h(mu, beta), 1.0, al, std::pow(y, mu));
  HFunctionSpec red = h_reduce(mapped);
  cplx v = h_series(red, x);
  return {std::abs(v - ref), "quadrature " + fmt(ref.real()) + " vs mapped H " + fmt(v.real()) +
                                 " (" + describe(red) + ")"};
}

ProblemSpec dalembert_problem() {
  ProblemSpec p;
  p.kind = Kind::wave;
  p.variant = Variant::quantum;
  p.sym = {2.0, 0.0};
  p.ord = {2.0, 1.0};
  p.f_hat = BoundaryTransform::gaussian(0.5);
  return p;
}

Outcome dalembert_grid() {
  ProblemSpec p = dalembert_problem();
  GridSpec g{GridSpec::uniform(-3.0, 3.0, 11), GridSpec::uniform(0.25, 2.75, 11)};
  auto rows = solve_grid(p, g, Method::automatic);
  double worst = 0.0;
  int failed = 0;
  for (const auto& r : rows) {
    if (!r.error_flag.empty()) {
      ++failed;
      worst = INFINITY;
      continue;
    }
    double ex = 0.5 * (p.f_hat.physical(r.x - r.y) + p.f_hat.physical(r.x + r.y));
    worst = std::max(worst, std::abs(r.N - ex));
  }
  return {worst, "11x11 grid, " + std::to_string(failed) + " failed points, max absolute error"};
}

ProblemSpec laplace_delta(double mu, double nu) {
  ProblemSpec p;
  p.kind = Kind::laplace;
  p.variant = Variant::quantum;
  p.sym = {2.0, 0.0};
  p.ord = {mu, nu};
  p.f_hat = BoundaryTransform::delta();
  return p;
}

Outcome series_vs_closed() {
  ProblemSpec p = laplace_delta(1.5, 0.5);
  double worst = 0.0;
  for (double y : {0.5, 1.0, 2.0})
    for (double w : {0.1, 0.5, 1.0, 1.5, 2.0}) {
      double x = w * std::pow(y, 0.75);
      worst = std::max(worst, rel(solution_series(p, x, y), solve_closed_form(p, x, y)));
    }
  return {worst, "15 points with |x|/y^(mu/2) <= 2, max relative error"};
}

Outcome asymptotic_ratio() {
  std::vector<Part> parts;
  for (double mu : {1.25, 1.5}) {
    ProblemSpec p = laplace_delta(mu, 0.5);
    for (auto [w, tol] : {std::pair{10.0, 0.05}, std::pair{20.0, 0.02}}) {
      ScaledComplex a = solution_asymptotic_scaled(p, w, 1.0);
      ScaledComplex s = solution_series_scaled(p, w, 1.0);
      double r = std::exp(a.log_abs() - s.log_abs());
      parts.push_back({std::abs(r - 1.0), tol, "mu=" + fmt(mu) + " w=" + fmt(w)});
    }
  }
  return fold(parts);
}

Outcome transform_residual() {
  struct Case {
    ProblemSpec p;
    std::vector<double> kappas, ss;
    std::string label;
  };
  std::vector<Case> cases;
  {
    ProblemSpec p;
    p.kind = Kind::poisson;
    p.variant = Variant::quantum;
    p.sym = {1.7, 0.0};
    p.ord = {1.5, 0.5};
    p.f_hat = BoundaryTransform::gaussian(1.0);
    p.g_hat = BoundaryTransform::gaussian(0.5);
    p.source.preset = SourceSpec::Preset::delta_power;
    p.source.beta = 0.3;
    cases.push_back({p, {0.5, 1.0, 2.0}, {1.0, 2.0, 4.0}, "poisson"});
  }
  {
    ProblemSpec p;
    p.kind = Kind::helmholtz;
    p.variant = Variant::riesz_feller;
    p.sym = {1.7, 0.0};
    p.ord = {1.25, 0.0};
    p.k = 1.0;
    p.f_hat = BoundaryTransform::gaussian(1.0);
    p.source.preset = SourceSpec::Preset::delta_delta;
    cases.push_back({p, {0.5, 1.0, 1.5}, {2.0, 3.0, 5.0}, "helmholtz"});
  }
  std::vector<Part> parts;
  for (const auto& c : cases) {
    double worst = 0.0;
    for (double kap : c.kappas)
      for (double s : c.ss) {
        oracle::CHandle N = [&](double y) { return fourier_kernel(c.p, kap, y); };
        cplx NN = oracle::numeric_laplace(N, s).value;
        double f0 = c.p.f_hat(kap).real(), g0 = c.p.g_hat(kap).real();
        cplx PP(0.0);
        if (c.p.source.preset == SourceSpec::Preset::delta_delta) PP = 1.0;
        if (c.p.source.preset == SourceSpec::Preset::delta_power)
          PP = std::pow(s, c.p.source.beta - 1.0);
        cplx lam = lambda_symbol(c.p, kap);
        cplx res = hilfer_laplace_rhs(c.p.ord, f0, g0, s, NN) - lam * NN - PP;
        const double nu = c.p.ord.nu, mu = c.p.ord.mu;
        double scale = std::abs(std::pow(s, 1.0 - nu * (2 - mu)) * f0) +
                       std::abs(std::pow(s, -nu * (2 - mu)) * g0) + std::abs(PP);
        worst = std::max(worst, std::abs(res) / scale);
      }
    parts.push_back({worst, 1e-6, c.label + " (9 pairs)"});
  }
  Outcome o = fold(parts);
  o.error *= 1e-6;  // back to a relative residual
  return o;
}

Outcome boundary_recovery() {
  ProblemSpec p;
  p.kind = Kind::laplace;
  p.variant = Variant::quantum;
  p.sym = {1.7, 0.0};
  p.ord = {1.5, 0.5};
  p.f_hat = BoundaryTransform::gaussian(1.0);
  const double mu = p.ord.mu, rho = rho_of(mu, p.ord.nu);
  const double r = std::pow(2.0, mu);
  SolveOptions so;
  so.rel_tol = 1e-10;
  std::vector<double> xs = {-1.0, -0.3, 0.0, 0.5, 1.2};
  std::vector<std::future<double>> jobs;
  for (double x : xs)
    jobs.push_back(std::async(std::launch::async, [&, x]() {
      SampledFunction N{[&, x](double y) { return solve_pointwise(p, x, y, so); },
                        Smoothness::power_singular, -rho};
      double R[3];
      for (int i = 0; i < 3; ++i) R[i] = rl_integral(N, rho, 0.1 / (1 << i), {1e-8, 1e-12});
      double a1 = (r * R[1] - R[0]) / (r - 1), a2 = (r * R[2] - R[1]) / (r - 1);
      double ext = (r * r * a2 - a1) / (r * r - 1);
      return std::abs(ext - p.f_hat.physical(x));
    }));
  double worst = 0.0;
  for (auto& j : jobs) worst = std::max(worst, j.get());
  return {worst, "5 x-values, y in {0.1, 0.05, 0.025} extrapolated in y^mu"};
}

const char* kCriterionNames[] = {
    "",
    "ML reduction identities",
    "ML Laplace pairs",
    "first inversion lemma",
    "Prabhakar convolution",
    "H / ML equivalence",
    "Mellin-cosine mapping",
    "d'Alembert reduction",
    "series vs closed form",
    "asymptotic ratio",
    "transform-domain residual",
    "boundary recovery",
};

}  // namespace

int criterion_count() { return 11; }

Check criterion(int id, const Options& opt) {
  const std::string s = "acceptance";
  const std::string name = std::to_string(id) + " " +
                           (id >= 1 && id <= 11 ? kCriterionNames[id] : "unknown");
  switch (id) {
    case 1: return run(s, name, 1e-10, opt, [&] { return ml_identities(opt.seed); }, 1.0);
    case 2: return run(s, name, 1e-6, opt, ml_laplace_pairs, 10.0);
    case 3: return run(s, name, 1e-5, opt, lemma1_inversion);
    case 4:
      return run(s, name, 1.0, opt, [] {
        return fold({{prabhakar_vs_rl(), 1e-8, "omega=0 vs R-L"},
                     {prabhakar_delta_power(), 1e-6, "delta_power closed form"}});
      });
    case 5: return run(s, name, 1e-8, opt, [&] { return hml_roundtrip(opt.seed); });
    case 6: return run(s, name, 1e-4, opt, cosine_map_point);
    case 7: return run(s, name, 1e-6, opt, dalembert_grid, 30.0);
    case 8: return run(s, name, 1e-8, opt, series_vs_closed);
    case 9: return run(s, name, 1.0, opt, asymptotic_ratio);
    case 10: return run(s, name, 1e-6, opt, transform_residual);
    case 11: return run(s, name, 1e-3, opt, boundary_recovery);
  }
  throw ValidityError("no acceptance criterion " + std::to_string(id));
}

namespace {

std::vector<Check> identities(const Options& opt) {
  const std::string s = "identities";
  std::vector<Check> out;
  out.push_back(run(s, "ml_reductions", 1e-10, opt, [&] { return ml_identities(opt.seed); }));
  out.push_back(run(s, "ml_three_gamma1", 1e-12, opt, [] {
    double w = 0;
    for (double a : {0.8, 1.5, 2.3})
      for (double b : {0.5, 1.0, 1.7})
        for (cplx z : {cplx(-2.0), cplx(0.5), cplx(1.5, 1.0)})
          w = std::max(w, rel(ml_three(a, b, 1.0, z), ml_two(a, b, z)));
    return Outcome{w, "27 points"};
  }));
  out.push_back(run(s, "ml_four_kappa1", 1e-12, opt, [] {
    double w = 0;
    for (double a : {0.8, 1.5})
      for (double g : {0.7, 2.0})
        for (cplx z : {cplx(-2.0), cplx(0.5), cplx(1.5, 1.0)})
          w = std::max(w, rel(ml_four({a, 1.2, g, 1.0}, z), ml_three(a, 1.2, g, z)));
    return Outcome{w, "12 points"};
  }));
  out.push_back(run(s, "wright_at_zero", 1e-14, opt, [] {
    double w = 0;
    for (auto [a, b] : {std::pair{-0.5, 0.5}, {0.7, 1.3}, {-0.75, 2.5}})
      w = std::max(w, rel(wright(a, b, 0.0), 1.0 / std::tgamma(b)));
    return Outcome{w, "1/Gamma(b)"};
  }));
  out.push_back(run(s, "fox_wright_reductions", 1e-12, opt, [] {
    double e1 = rel(fox_wright({{{1, 1}}, {{1.0, 1.5}}}, 0.7), ml_two(1.5, 1.0, 0.7));
    double e2 = rel(fox_wright({{}, {{0.25, -0.75}}}, -1.5), wright(-0.75, 0.25, -1.5));
    return Outcome{std::max(e1, e2), "1Psi1 vs ML, 0Psi1 vs Wright"};
  }));
  out.push_back(run(s, "truncation_bound_overestimates", 1.0, opt, [] {
    // references from 50-digit summation
    struct R {
      SeriesValue v;
      long double ref;
    };
    std::vector<R> rs = {
        {ml_two_eval(1.5, 1.0, -8.0), -0.2028715392387281623L},
        {ml_three_eval(1.0, 1.0, 2.0, 0.3), 1.75481644984880400L},
        {ml_four_eval({1.5, 1.0, 2.0, 1.2}, 0.5), 2.14927922001952714L},
        {wright_eval(-0.75, 0.25, -1.5), 0.548737862226456334L},
    };
    double w = 0;
    for (const auto& r : rs) {
      double err = std::abs(static_cast<long double>(r.v.value.real()) - r.ref);
      double bound = r.v.trunc_bound + 8 * kEps * std::abs(static_cast<double>(r.ref));
      w = std::max(w, err / bound);
    }
    return Outcome{w, "true error / (reported bound + rounding), 4 oracle values"};
  }));
  out.push_back(run(s, "deterministic", 0.0, opt, [] {
    cplx a = ml_two(1.3, 0.8, cplx(-4.0, 1.0)), b = ml_two(1.3, 0.8, cplx(-4.0, 1.0));
    cplx c = wright(-0.6, 0.4, -5.0), d = wright(-0.6, 0.4, -5.0);
    return Outcome{(a == b && c == d) ? 0.0 : 1.0, "bitwise repeat"};
  }));
  return out;
}

std::vector<Check> laplace_pairs(const Options& opt) {
  const std::string s = "laplace_pairs";
  std::vector<Check> out;
  out.push_back(run(s, "ml_kernel_pairs", 1e-6, opt, ml_laplace_pairs));
  out.push_back(run(s, "constant", 1e-12, opt, [] {
    return Outcome{rel(oracle::numeric_laplace(oracle::CHandle([](double) { return cplx(1.0); }), 2.0).value, 0.5),
                   "L[1](2) = 1/2"};
  }));
  out.push_back(run(s, "lemma1_kernel_pairs", 1e-5, opt, [] {
    double w = 0;
    for (double mu : {1.25, 1.5, 2.0})
      for (double nu : {0.0, 0.5, 1.0})
        for (double vs : {0.0, 0.75, 1.0}) {
          HilferOrder ord{mu, nu};
          oracle::CHandle f = [=](double y) { return lemma1_kernel(ord, vs, 1.0, y, true); };
          for (double sv : {1.0, 2.0, 4.0}) {
            cplx num = oracle::numeric_laplace(f, sv).value;
            double ex = std::pow(sv, vs - nu * (2 - mu)) / (std::pow(sv, mu) + 1.0);
            w = std::max(w, rel(num, ex));
          }
        }
    return Outcome{w, "81 (mu, nu, varsigma, s) points"};
  }));
  out.push_back(run(s, "contour_inversion", 1e-7, opt, [] {
    double e1 = std::abs(oracle::numeric_inverse_laplace([](cplx z) { return 1.0 / (z * z); }, 3.0).value - 3.0);
    double e2 = std::abs(
        oracle::numeric_inverse_laplace([](cplx z) { return 1.0 / (z * z + 1.0); }, M_PI / 2).value - 1.0);
    return Outcome{std::max(e1, e2), "1/s^2 at 3, 1/(s^2+1) at pi/2"};
  }));
  return out;
}

std::vector<Check> lemmas(const Options& opt) {
  const std::string s = "lemmas";
  std::vector<Check> out;
  out.push_back(run(s, "lemma1_inversion", 1e-5, opt, lemma1_inversion));
  out.push_back(run(s, "prabhakar_omega0", 1e-8, opt, [] { return Outcome{prabhakar_vs_rl(), "36 cases"}; }));
  out.push_back(run(s, "prabhakar_delta_power", 1e-6, opt,
                    [] { return Outcome{prabhakar_delta_power(), "beta=0.3 mu=1.5 omega=-1"}; }));
  out.push_back(run(s, "prabhakar_cos_kernel", 1e-9, opt, [] {
    SampledFunction one{[](double) { return 1.0; }};
    double w0 = 1.3, w = 0;
    for (double y : {0.5, 2.0}) {
      cplx v = prabhakar_apply(-w0 * w0, 2.0, one, y);
      w = std::max(w, std::abs(v - (1 - std::cos(w0 * y)) / (w0 * w0)));
    }
    return Outcome{w, "phi=1, mu=2"};
  }));
  out.push_back(run(s, "lemma1_classical", 1e-12, opt, [] {
    double om = 1.7, w = 0;
    for (double y : {0.3, 1.0, 2.5}) {
      w = std::max(w, std::abs(lemma1_kernel({2.0, 0.5}, 1.0, om * om, y) - std::cos(om * y)));
      w = std::max(w, std::abs(lemma1_kernel({2.0, 0.5}, 0.0, om * om, y) - std::sin(om * y) / om));
    }
    return Outcome{w, "cos and sin pairs"};
  }));
  out.push_back(run(s, "psi_conjugate_symmetry", 0.0, opt, [] {
    double w = 0;
    for (double a : {1.2, 1.5, 1.9})
      for (double k : {0.3, 1.0, 4.0}) {
        RieszFellerSymbol sym{a, std::min(a, 2 - a) * 0.8};
        w = std::max(w, std::abs(psi(sym, -k) - std::conj(psi(sym, k))));
      }
    return Outcome{w, "exact"};
  }));
  out.push_back(run(s, "rl_semigroup", 1e-9, opt, [] {
    SampledFunction f{[](double y) { return std::exp(-y) * std::cos(y); }};
    double w = 0;
    for (double y : {0.5, 1.5}) {
      SampledFunction inner{[&](double u) { return rl_integral(f, 0.4, u); },
                            Smoothness::power_singular, 0.4};
      w = std::max(w, std::abs(rl_integral(inner, 0.7, y) - rl_integral(f, 1.1, y)));
    }
    return Outcome{w, "I^0.7 I^0.4 = I^1.1"};
  }));
  out.push_back(run(s, "hilfer_examples", 1e-5, opt, [] {
    std::vector<Part> parts;
    SampledFunction sn{[](double y) { return std::sin(y); }};
    parts.push_back({std::abs(hilfer_derivative(sn, {2.0, 1.0}, 1.2) + std::sin(1.2)), 1e-5, "caputo limit"});
    SampledFunction cube{[](double y) { return y * y * y; }, Smoothness::power_singular, 3.0};
    double w = 0;
    for (double nu : {0.0, 0.5, 1.0}) {
      double ex = 6.0 / std::tgamma(2.5) * std::pow(1.3, 1.5);
      w = std::max(w, std::abs(hilfer_derivative(cube, {1.5, nu}, 1.3) - ex) / ex);
    }
    parts.push_back({w, 1e-6, "y^3 power rule"});
    SampledFunction one{[](double) { return 1.0; }};
    double ex = std::pow(0.8, -0.5) / std::tgamma(0.5);
    parts.push_back({std::abs(hilfer_derivative(one, {0.5, 0.0}, 0.8) - ex) / ex, 1e-6, "R-L of constant"});
    return fold(parts);
  }));
  return out;
}

std::vector<Check> hfunction(const Options& opt) {
  const std::string s = "hfunction";
  std::vector<Check> out;
  out.push_back(run(s, "ml_as_h_roundtrip", 1e-8, opt, [&] { return hml_roundtrip(opt.seed); }));
  out.push_back(run(s, "ml_as_h_exp", 1e-12, opt, [] {
    return Outcome{rel(h_series(ml_as_h(1.0, 1.0), 1.0), std::exp(1.0)), "z=1 gives e"};
  }));
  out.push_back(run(s, "cosine_map_quadrature", 1e-4, opt, cosine_map_point));
  out.push_back(run(s, "cosine_map_dimensions", 0.0, opt, [] {
    double bad = 0;
    for (auto [a, b] : {std::pair{1.5, 0.75}, {1.25, 1.0}, {1.9, 0.6}}) {
      HFunctionSpec in = ml_as_h(a, b);
      HFunctionSpec o = mellin_cosine_map(in, 1.0, 2.0, 1.0);
      if (o.m != in.n + 1 || o.n != in.m || o.p != in.q + 1 || o.q != in.p + 2) bad += 1;
    }
    return Outcome{bad, "(m', n', p', q') = (n+1, m, q+1, p+2)"};
  }));
  out.push_back(run(s, "reduce_preserves_value", 1e-12, opt, [] {
    HFunctionSpec sp;
    sp.m = 1, sp.n = 1, sp.p = 2, sp.q = 2;
    sp.upper = {{0.2, 0.5}, {0.75, 0.75}};
    sp.lower = {{1.0, 1.0}, {0.2, 0.5}};
    HFunctionSpec r = h_reduce(sp);
    double w = (r.p == 1 && r.q == 1 && r.n == 0) ? 0.0 : 1.0;
    for (double z : {0.3, 1.0, 2.5}) w = std::max(w, rel(h_series(sp, z), h_series(r, z)));
    return Outcome{w, describe(sp) + " -> " + describe(r)};
  }));
  out.push_back(run(s, "reduce_structure", 0.0, opt, [] {
    const double c = 0.75, mu = 1.5;
    HFunctionSpec sp;
    sp.m = 2, sp.n = 0, sp.p = 2, sp.q = 2;
    sp.upper = {{c, mu / 2}, {1.0, 0.5}};
    sp.lower = {{1.0, 1.0}, {1.0, 0.5}};
    HFunctionSpec r = h_reduce(sp);
    bool ok = r.m == 1 && r.n == 0 && r.p == 1 && r.q == 1 && r.upper[0] == ParamPair{c, mu / 2} &&
              r.lower[0] == ParamPair{1.0, 1.0};
    return Outcome{ok ? 0.0 : 1.0, describe(r)};
  }));
  out.push_back(run(s, "asymptotic_params", 1e-6, opt, [] {
    HFunctionSpec sp;
    sp.upper = {{0.75, 0.75}};
    sp.lower = {{1.0, 1.0}};
    sp.p = 1;
    AsymptoticParams a = asymptotic_params(sp);
    double e = std::max(std::abs(a.m_star - 0.25), std::abs(a.C - std::pow(0.75, 0.75)));
    return Outcome{e, "m* = 0.25, C = 0.75^0.75"};
  }));
  out.push_back(run(s, "asymptotic_monotone", 0.05, opt, [] {
    HFunctionSpec sp;
    sp.upper = {{0.75, 0.75}};
    sp.lower = {{1.0, 1.0}};
    sp.p = 1;
    double prev = INFINITY, worst = 0;
    std::string d;
    for (double z : {5.0, 10.0, 20.0}) {
      double r = std::exp(h_asymptotic_scaled(sp, z).log_abs() - h_series_scaled(sp, z).value.log_abs());
      double e = std::abs(r - 1);
      if (e > prev * 1.05) worst = INFINITY;
      prev = e;
      worst = std::max(worst, z >= 10 ? e : 0.0);
      d += "z=" + fmt(z) + ": " + fmt(r) + " ";
    }
    return Outcome{worst, d};
  }));
  out.push_back(run(s, "zero_argument", 0.0, opt, [] {
    HFunctionSpec sp;
    sp.upper = {{0.75, 0.75}};
    sp.lower = {{1.0, 1.0}};
    sp.p = 1;
    return Outcome{std::abs(h_series(sp, 0.0)), "all b/B > 0"};
  }));
  return out;
}

std::vector<Check> solutions(const Options& opt) {
  const std::string s = "solutions";
  std::vector<Check> out;
  out.push_back(run(s, "dalembert_grid", 1e-6, opt, dalembert_grid));
  out.push_back(run(s, "helmholtz_vs_separation", 1e-6, opt, [] {
    ProblemSpec p = dalembert_problem();
    p.kind = Kind::helmholtz;
    p.k = 1.0;
    double w = 0;
    auto ml = [](double b, cplx z) { return ml_two(2.0, b, z); };
    for (double x : {-1.0, 0.0, 0.6, 2.0})
      for (double y : {0.5, 1.5}) {
        double ref = oracle::separation_reference(p, x, y, ml).value.real();
        w = std::max(w, std::abs(solve_pointwise(p, x, y) - ref));
      }
    return Outcome{w, "8 points, k=1"};
  }));
  out.push_back(run(s, "series_vs_closed_form", 1e-8, opt, series_vs_closed));
  out.push_back(run(s, "series_vs_closed_form_g_delta", 1e-8, opt, [] {
    ProblemSpec p = laplace_delta(1.5, 0.0);
    p.f_hat = BoundaryTransform::zero();
    p.g_hat = BoundaryTransform::delta();
    double w = 0;
    for (double x : {0.2, 0.7, 1.5}) w = std::max(w, rel(solution_series(p, x, 1.3), solve_closed_form(p, x, 1.3)));
    return Outcome{w, "nu=0, g delta"};
  }));
  out.push_back(run(s, "closed_form_vs_regularized", 1e-5, opt, [] {
    ProblemSpec p = laplace_delta(1.5, 0.5);
    SolveOptions o;
    o.regularize_delta = true;
    double v = solve_pointwise(p, 0.7, 1.2, o), c = solve_closed_form(p, 0.7, 1.2);
    return Outcome{std::abs(v - c), "(x, y) = (0.7, 1.2)"};
  }));
  out.push_back(run(s, "asymptotic_ratio", 1.0, opt, asymptotic_ratio));
  out.push_back(run(s, "transform_residual", 1e-6, opt, transform_residual));
  out.push_back(run(s, "boundary_recovery", 1e-3, opt, boundary_recovery));
  out.push_back(run(s, "reality", 1e-8, opt, [] {
    ProblemSpec p;
    p.kind = Kind::laplace;
    p.variant = Variant::quantum;
    p.sym = {1.7, 0.25};
    p.ord = {1.5, 0.5};
    p.f_hat = BoundaryTransform::gaussian(1.0);
    double w = 0;
    for (double x : {-0.8, 0.4, 1.5}) w = std::max(w, std::abs(solve_pointwise_detail(p, x, 0.7).imag_residual));
    return Outcome{w, "theta=0.25, max |imaginary residual|"};
  }));
  out.push_back(run(s, "reduction_chain", 0.0, opt, [] {
    ProblemSpec base;
    base.kind = Kind::poisson;
    base.variant = Variant::quantum;
    base.sym = {1.8, 0.0};
    base.ord = {1.5, 0.5};
    base.f_hat = BoundaryTransform::gaussian(0.8);
    ProblemSpec h = base, l = base, w = base;
    h.kind = Kind::helmholtz;
    l.kind = Kind::laplace;
    w.kind = Kind::wave;
    double d = 0;
    for (double x : {0.0, 0.9}) {
      double v = solve_pointwise(base, x, 0.6);
      d = std::max({d, std::abs(solve_pointwise(h, x, 0.6) - v), std::abs(solve_pointwise(l, x, 0.6) - v),
                    std::abs(solve_pointwise(w, x, 0.6) - v)});
    }
    return Outcome{d, "helmholtz k=0, laplace, wave vs poisson (bitwise)"};
  }));
  out.push_back(run(s, "variant_sign_symmetry", 0.0, opt, [] {
    ProblemSpec q;
    q.sym = {1.6, 0.0};
    q.ord = {1.5, 0.5};
    ProblemSpec r = q;
    r.variant = Variant::riesz_feller;
    double d = 0;
    for (double k : {-2.0, 0.5, 3.0}) d = std::max(d, std::abs(lambda_symbol(r, k) + lambda_symbol(q, k)));
    return Outcome{d, "Lambda_rf = -Lambda_quantum"};
  }));
  out.push_back(run(s, "auto_vs_closed_form_grid", 1e-5, opt, [] {
    ProblemSpec p = laplace_delta(1.5, 0.5);
    GridSpec g{{-1.0, 0.3, 1.1}, {0.5, 1.5}};
    auto a = solve_grid(p, g, Method::automatic), c = solve_grid(p, g, Method::closed_form);
    double d = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
      d = std::max(d, a[i].error_flag.empty() && c[i].error_flag.empty() ? std::abs(a[i].N - c[i].N) : INFINITY);
    return Outcome{d, "6 points"};
  }));
  out.push_back(run(s, "empty_grid", 0.0, opt, [] {
    return Outcome{static_cast<double>(solve_grid(dalembert_problem(), GridSpec{}).size()), "no rows"};
  }));
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> n = {"identities", "laplace_pairs", "lemmas", "hfunction",
                                             "solutions"};
  return n;
}

std::vector<Check> run_suite(const std::string& suite, const Options& opt) {
  if (suite == "identities") return identities(opt);
  if (suite == "laplace_pairs") return laplace_pairs(opt);
  if (suite == "lemmas") return lemmas(opt);
  if (suite == "hfunction") return hfunction(opt);
  if (suite == "solutions") return solutions(opt);
  if (suite == "all") {
    std::vector<Check> all;
    for (const auto& n : suite_names()) {
      auto c = run_suite(n, opt);
      all.insert(all.end(), c.begin(), c.end());
    }
    return all;
  }
  throw ValidityError("unknown suite '" + suite +
                      "' (identities, laplace_pairs, lemmas, hfunction, solutions, all)");
}

nlohmann::json report(const std::string& suite, const Options& opt, const std::vector<Check>& checks) {
  nlohmann::json arr = nlohmann::json::array();
  int passed = 0;
  for (const auto& c : checks) {
    passed += c.pass;
    arr.push_back({{"suite", c.suite},
                   {"name", c.name},
                   {"pass", c.pass},
                   {"error", std::isfinite(c.error) ? nlohmann::json(c.error) : nlohmann::json("inf")},
                   {"tol", c.tol},
                   {"detail", c.detail}});
  }
  return {{"suite", suite},
          {"seed", opt.seed},
          {"passed", passed},
          {"failed", static_cast<int>(checks.size()) - passed},
          {"checks", arr}};
}

}  // namespace fracfield::verify
