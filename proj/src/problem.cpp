#include "fracfield/problem.hpp"

#include <cmath>

#include "fracfield/error.hpp"

namespace fracfield {

cplx BoundaryTransform::operator()(double kappa) const {
  switch (preset) {
    case Preset::zero: return {0.0, 0.0};
    case Preset::delta: return {1.0, 0.0};
    case Preset::gaussian: return {std::exp(-0.5 * width * width * kappa * kappa), 0.0};
    case Preset::custom:
      if (!custom) throw DomainError("custom boundary transform has no handle");
      return custom(kappa);
  }
  return {0.0, 0.0};
}

double BoundaryTransform::physical(double x) const {
  switch (preset) {
    case Preset::zero: return 0.0;
    case Preset::gaussian:
      return std::exp(-0.5 * x * x / (width * width)) / (width * std::sqrt(2.0 * M_PI));
    default: throw DomainError("physical boundary values only exist for zero/gaussian presets");
  }
}

double rho_of(const HilferOrder& ord) { return (1.0 - ord.nu) * (2.0 - ord.mu); }

Variant effective_variant(const ProblemSpec& p) {
  if (p.kind == Kind::wave || p.kind == Kind::wave_k) return Variant::quantum;
  return p.variant;
}

void validate(const ProblemSpec& p) {
  const char* range = " (admissible range of the solution formulas)";
  if (!(p.sym.alpha > 1.0 && p.sym.alpha <= 2.0))
    throw ValidityError("alpha = " + std::to_string(p.sym.alpha) + " violates 1 < alpha <= 2" + range);
  if (!(std::abs(p.sym.theta) <= std::min(p.sym.alpha, 2.0 - p.sym.alpha) + 1e-15))
    throw ValidityError("theta = " + std::to_string(p.sym.theta) +
                        " violates |theta| <= min(alpha, 2 - alpha)");
  if (!(p.ord.mu > 1.0 && p.ord.mu <= 2.0))
    throw ValidityError("mu = " + std::to_string(p.ord.mu) + " violates 1 < mu <= 2" + range);
  if (!(p.ord.nu >= 0.0 && p.ord.nu <= 1.0))
    throw ValidityError("nu = " + std::to_string(p.ord.nu) + " violates 0 <= nu <= 1");
  if (!(p.k >= 0.0) || !std::isfinite(p.k)) throw ValidityError("wave number k must be >= 0");
  if (p.k != 0.0 && p.kind != Kind::helmholtz && p.kind != Kind::wave_k)
    throw ValidityError("k must be 0 unless kind is helmholtz or wave_k");
  if (p.kind == Kind::laplace && !p.source.is_zero())
    throw ValidityError("laplace kind takes no source term (use poisson)");
  if (p.source.preset == SourceSpec::Preset::delta_power && !(p.source.beta < 1.0))
    throw ValidityError("delta_power source needs beta < 1");
  if (p.f_hat.preset == BoundaryTransform::Preset::gaussian && !(p.f_hat.width > 0))
    throw ValidityError("gaussian width must be > 0");
  if (p.g_hat.preset == BoundaryTransform::Preset::gaussian && !(p.g_hat.width > 0))
    throw ValidityError("gaussian width must be > 0");
}

cplx lambda_symbol(const ProblemSpec& p, double kappa) {
  cplx ps = psi(p.sym, kappa);
  double k2 = p.k * p.k;
  if (effective_variant(p) == Variant::riesz_feller) return ps - k2;
  return -(ps + k2);
}

std::string to_string(Kind k) {
  switch (k) {
    case Kind::laplace: return "laplace";
    case Kind::poisson: return "poisson";
    case Kind::helmholtz: return "helmholtz";
    case Kind::wave: return "wave";
    case Kind::wave_k: return "wave_k";
  }
  return "?";
}

std::string to_string(Variant v) { return v == Variant::quantum ? "quantum" : "riesz_feller"; }

Kind kind_from_string(const std::string& s) {
  if (s == "laplace") return Kind::laplace;
  if (s == "poisson") return Kind::poisson;
  if (s == "helmholtz") return Kind::helmholtz;
  if (s == "wave") return Kind::wave;
  if (s == "wave_k") return Kind::wave_k;
  throw ValidityError("unknown kind '" + s + "'");
}

Variant variant_from_string(const std::string& s) {
  if (s == "quantum") return Variant::quantum;
  if (s == "riesz_feller") return Variant::riesz_feller;
  throw ValidityError("unknown variant '" + s + "'");
}

}  // namespace fracfield
