#include "fracfield/solver.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <thread>

#include "fracfield/error.hpp"
#include "fracfield/fracops.hpp"
#include "fracfield/quadrature.hpp"

namespace fracfield {

std::vector<double> GridSpec::uniform(double start, double stop, int count) {
  if (count < 0) throw ValidityError("grid count must be >= 0");
  std::vector<double> v(count);
  for (int i = 0; i < count; ++i)
    v[i] = count == 1 ? start : start + (stop - start) * i / (count - 1);
  return v;
}

Method method_from_string(const std::string& s) {
  if (s == "auto") return Method::automatic;
  if (s == "pointwise") return Method::pointwise;
  if (s == "closed_form") return Method::closed_form;
  if (s == "series") return Method::series;
  throw ValidityError("unknown method '" + s + "'");
}

std::string to_string(Method m) {
  switch (m) {
    case Method::automatic: return "auto";
    case Method::pointwise: return "pointwise";
    case Method::closed_form: return "closed_form";
    case Method::series: return "series";
  }
  return "?";
}

cplx fourier_kernel(const ProblemSpec& p, double kappa, double y) {
  if (!(y > 0)) throw DomainError("fourier_kernel: y must be > 0");
  const double mu = p.ord.mu, rho = rho_of(p.ord);
  const cplx z = std::pow(y, mu) * lambda_symbol(p, kappa);
  cplx out(0.0);
  cplx fh = p.f_hat(kappa);
  if (fh != cplx(0.0)) out += std::pow(y, -rho) * ml_two(mu, 1.0 - rho, z) * fh;
  cplx gh = p.g_hat(kappa);
  if (gh != cplx(0.0)) out += std::pow(y, 1.0 - rho) * ml_two(mu, 2.0 - rho, z) * gh;
  switch (p.source.preset) {
    case SourceSpec::Preset::zero: break;
    case SourceSpec::Preset::delta_delta:
      out += std::pow(y, mu - 1.0) * ml_two(mu, mu, z);
      break;
    case SourceSpec::Preset::delta_power: {
      double b = p.source.beta;
      out += std::pow(y, mu - b) * ml_two(mu, mu - b + 1.0, z);
      break;
    }
    case SourceSpec::Preset::custom: {
      if (!p.source.custom) throw DomainError("custom source has no handle");
      auto phi = [&](double u) { return p.source.custom(kappa, u); };
      out += prabhakar_apply_complex(lambda_symbol(p, kappa), mu, phi, p.source.custom_exponent, y);
      break;
    }
  }
  return out;
}

namespace {

bool has_delta(const ProblemSpec& p) {
  return p.f_hat.preset == BoundaryTransform::Preset::delta ||
         p.g_hat.preset == BoundaryTransform::Preset::delta ||
         p.source.preset == SourceSpec::Preset::delta_delta ||
         p.source.preset == SourceSpec::Preset::delta_power;
}

double decay_scale(const ProblemSpec& p, double eps) {
  double s = INFINITY;
  for (const auto* b : {&p.f_hat, &p.g_hat})
    if (b->preset == BoundaryTransform::Preset::gaussian) s = std::min(s, 1.0 / b->width);
  if (eps > 0) s = std::min(s, 1.0 / std::sqrt(eps));
  return std::isfinite(s) ? s : 1.0;
}

struct Inversion {
  cplx value;
  double error;
};

Inversion invert(const ProblemSpec& p, double x, double y, double eps, const SolveOptions& opt) {
  auto damp = [eps](double k) { return eps > 0 ? std::exp(-eps * k * k) : 1.0; };
  quad::CFunc ks = [&](double k) {
    return (fourier_kernel(p, k, y) + fourier_kernel(p, -k, y)) * damp(k);
  };
  quad::CFunc ka = [&](double k) {
    return (fourier_kernel(p, k, y) - fourier_kernel(p, -k, y)) * damp(k);
  };
  const double scale = decay_scale(p, eps);
  auto rc = quad::oscillatory(ks, x, quad::Trig::cos, opt.abs_tol, opt.rel_tol, scale);
  // an odd part only appears for skewed symbols or non-symmetric data
  quad::Result rs;
  bool symmetric = p.sym.theta == 0.0 &&
                   p.f_hat.preset != BoundaryTransform::Preset::custom &&
                   p.g_hat.preset != BoundaryTransform::Preset::custom &&
                   p.source.preset != SourceSpec::Preset::custom;
  if (!symmetric && x != 0.0)
    rs = quad::oscillatory(ka, x, quad::Trig::sin, opt.abs_tol, opt.rel_tol, scale);
  cplx v = (rc.value - cplx(0.0, 1.0) * rs.value) / (2.0 * M_PI);
  return {v, (rc.error + rs.error) / (2.0 * M_PI)};
}

void require_catalogued(const ProblemSpec& p, const char* what) {
  if (effective_variant(p) != Variant::quantum)
    throw NoClosedForm(std::string(what) + ": catalogued only for the quantum variant");
  if (p.sym.theta != 0.0) throw NoClosedForm(std::string(what) + ": catalogued only for theta = 0");
  if (p.k != 0.0) throw NoClosedForm(std::string(what) + ": catalogued only for k = 0");
}

}  // namespace

PointwiseValue solve_pointwise_detail(const ProblemSpec& p, double x, double y,
                                      const SolveOptions& opt) {
  validate(p);
  if (!(y > 0)) throw DomainError("solve_pointwise: y must be > 0");
  PointwiseValue out;
  if (has_delta(p)) {
    if (!opt.regularize_delta)
      throw SlowDecay(
          "delta data give an algebraically decaying kernel; use closed_form or enable "
          "regularization");
    Inversion n1 = invert(p, x, y, opt.eps0, opt);
    Inversion n2 = invert(p, x, y, opt.eps0 / 2, opt);
    Inversion n4 = invert(p, x, y, opt.eps0 / 4, opt);
    cplx v = (8.0 * n4.value - 6.0 * n2.value + n1.value) / 3.0;
    out.value = v.real();
    out.imag_residual = v.imag();
    out.error = std::abs(v - n4.value) * 0.1 + n4.error;
    out.regularized = true;
    return out;
  }
  Inversion r = invert(p, x, y, 0.0, opt);
  out.value = r.value.real();
  out.imag_residual = r.value.imag();
  out.error = r.error;
  return out;
}

double solve_pointwise(const ProblemSpec& p, double x, double y, const SolveOptions& opt) {
  return solve_pointwise_detail(p, x, y, opt).value;
}

std::vector<DeltaTerm> delta_terms(const ProblemSpec& p) {
  const double mu = p.ord.mu, rho = rho_of(p.ord);
  std::vector<DeltaTerm> t;
  auto boundary = [&](const BoundaryTransform& b, double beta) {
    if (b.preset == BoundaryTransform::Preset::zero) return;
    if (b.preset != BoundaryTransform::Preset::delta)
      throw NoClosedForm("closed forms are catalogued for delta boundary data only");
    t.push_back({1.0, beta});
  };
  boundary(p.f_hat, 1.0 - rho);
  boundary(p.g_hat, 2.0 - rho);
  switch (p.source.preset) {
    case SourceSpec::Preset::zero: break;
    case SourceSpec::Preset::delta_delta: t.push_back({1.0, mu}); break;
    case SourceSpec::Preset::delta_power: t.push_back({1.0, mu - p.source.beta + 1.0}); break;
    case SourceSpec::Preset::custom: throw NoClosedForm("custom sources have no catalogued closed form");
  }
  return t;
}

HFunctionSpec closed_form_spec(const ProblemSpec& p, double beta, double y) {
  try {
    return h_reduce(mellin_cosine_map(ml_as_h(p.ord.mu, beta), 1.0, p.sym.alpha,
                                      cplx(std::pow(y, p.ord.mu), 0.0)));
  } catch (const ValidityError& e) {
    throw NoClosedForm(std::string("closed form unavailable: ") + e.what());
  }
}

ScaledComplex solve_closed_form_scaled(const ProblemSpec& p, double x, double y) {
  validate(p);
  if (!(y > 0)) throw DomainError("solve_closed_form: y must be > 0");
  require_catalogued(p, "closed form");
  ScaledComplex total;
  for (auto [c, beta] : delta_terms(p)) {
    HFunctionSpec s = closed_form_spec(p, beta, y);
    ScaledValue v = h_series_scaled(s, std::abs(x));
    total = total + v.value * cplx(c * std::pow(y, beta - 1.0) / M_PI, 0.0);
  }
  return total;
}

double solve_closed_form(const ProblemSpec& p, double x, double y) {
  return solve_closed_form_scaled(p, x, y).value().real();
}

ScaledComplex solution_series_scaled(const ProblemSpec& p, double x, double y) {
  validate(p);
  if (!(y > 0)) throw DomainError("solution_series: y must be > 0");
  try {
    require_catalogued(p, "series form");
  } catch (const NoClosedForm& e) {
    throw NoSeriesForm(e.what());
  }
  if (p.sym.alpha != 2.0) throw NoSeriesForm("series form needs alpha = 2");
  if (p.ord.mu >= 2.0) throw NoSeriesForm("series form needs mu < 2 (Wright order -mu/2 > -1)");
  std::vector<DeltaTerm> terms;
  try {
    terms = delta_terms(p);
  } catch (const NoClosedForm& e) {
    throw NoSeriesForm(e.what());
  }
  const double mu = p.ord.mu;
  const double w = std::abs(x) / std::pow(y, mu / 2);
  ScaledComplex total;
  for (auto [c, beta] : terms) {
    ScaledValue v = wright_scaled(-mu / 2, beta - mu / 2, cplx(-w, 0.0));
    total = total + v.value * cplx(0.5 * c * std::pow(y, beta - 1.0 - mu / 2), 0.0);
  }
  return total;
}

double solution_series(const ProblemSpec& p, double x, double y) {
  return solution_series_scaled(p, x, y).value().real();
}

ScaledComplex solution_asymptotic_scaled(const ProblemSpec& p, double x, double y,
                                         double threshold) {
  validate(p);
  if (!(y > 0)) throw DomainError("solution_asymptotic: y must be > 0");
  try {
    require_catalogued(p, "asymptotic form");
  } catch (const NoClosedForm& e) {
    throw NoSeriesForm(e.what());
  }
  if (p.sym.alpha != 2.0) throw NoSeriesForm("asymptotic form needs alpha = 2");
  const double w = std::abs(x) / std::pow(y, p.ord.mu / 2);
  if (w < threshold)
    throw OutOfRegime("asymptotic form needs |x|/y^(mu/2) >= " + std::to_string(threshold) +
                      " (got " + std::to_string(w) + ")");
  ScaledComplex total;
  for (auto [c, beta] : delta_terms(p)) {
    HFunctionSpec s = closed_form_spec(p, beta, y);
    ScaledComplex v = h_asymptotic_scaled(s, std::abs(x));
    total = total + v * cplx(c * std::pow(y, beta - 1.0) / M_PI, 0.0);
  }
  return total;
}

double solution_asymptotic(const ProblemSpec& p, double x, double y, double threshold) {
  return solution_asymptotic_scaled(p, x, y, threshold).value().real();
}

std::string current_error_name() {
  try {
    throw;
  } catch (const NonConvergence&) { return "NonConvergence";
  } catch (const QuadratureFailure&) { return "QuadratureFailure";
  } catch (const DifferentiationFailure&) { return "DifferentiationFailure";
  } catch (const ContourFailure&) { return "ContourFailure";
  } catch (const TailDominance&) { return "TailDominance";
  } catch (const SlowDecay&) { return "SlowDecay";
  } catch (const CoincidentPoles&) { return "CoincidentPoles";
  } catch (const DomainError&) { return "DomainError";
  } catch (const ValidityError&) { return "ValidityError";
  } catch (const NoClosedForm&) { return "NoClosedForm";
  } catch (const NoSeriesForm&) { return "NoSeriesForm";
  } catch (const OutOfRegime&) { return "OutOfRegime";
  } catch (const std::exception&) { return "Error";
  } catch (...) { return "UnknownError"; }
}

std::vector<GridRow> solve_grid(const ProblemSpec& p, const GridSpec& grid, Method method,
                                const SolveOptions& opt) {
  validate(p);
  const std::size_t nx = grid.x.size(), ny = grid.y.size();
  for (double y : grid.y)
    if (!(y > 0)) throw ValidityError("grid y values must be strictly positive");
  std::vector<GridRow> rows(nx * ny);
  if (rows.empty()) return rows;

  auto eval = [&](std::size_t idx) {
    GridRow& r = rows[idx];
    r.y = grid.y[idx / nx];
    r.x = grid.x[idx % nx];
    r.N = std::nan("");
    r.imag_residual = 0.0;
    r.method = to_string(method);
    try {
      switch (method) {
        case Method::closed_form: r.N = solve_closed_form(p, r.x, r.y); break;
        case Method::series: r.N = solution_series(p, r.x, r.y); break;
        case Method::pointwise: {
          auto v = solve_pointwise_detail(p, r.x, r.y, opt);
          r.N = v.value;
          r.imag_residual = v.imag_residual;
          break;
        }
        case Method::automatic: {
          try {
            r.N = solve_closed_form(p, r.x, r.y);
            r.method = "closed_form";
          } catch (const NoClosedForm&) {
            SolveOptions o = opt;
            if (has_delta(p)) o.regularize_delta = true;
            auto v = solve_pointwise_detail(p, r.x, r.y, o);
            r.N = v.value;
            r.imag_residual = v.imag_residual;
            r.method = v.regularized ? "pointwise_regularized" : "pointwise";
          } catch (const CoincidentPoles&) {
            SolveOptions o = opt;
            o.regularize_delta = true;
            auto v = solve_pointwise_detail(p, r.x, r.y, o);
            r.N = v.value;
            r.imag_residual = v.imag_residual;
            r.method = "pointwise_regularized";
          }
          break;
        }
      }
    } catch (...) {
      r.error_flag = current_error_name();
    }
  };

  unsigned nt = opt.threads > 0 ? static_cast<unsigned>(opt.threads)
                                : std::max(1u, std::thread::hardware_concurrency());
  nt = std::min<unsigned>(nt, static_cast<unsigned>(rows.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < rows.size(); i = next++) eval(i);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < nt; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return rows;
}

void write_csv(std::ostream& os, const std::vector<GridRow>& rows) {
  os << "x,y,N,imag_residual,method,error_flag\n";
  char buf[128];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,", r.x, r.y, r.N, r.imag_residual);
    os << buf << r.method << ',' << r.error_flag << '\n';
  }
}

}  // namespace fracfield
