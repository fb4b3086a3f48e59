#pragma once
#include <complex>
#include <functional>
#include <string>

#include "fracfield/fracops.hpp"

namespace fracfield {

enum class Kind { laplace, poisson, helmholtz, wave, wave_k };
enum class Variant { riesz_feller, quantum };

// Fourier transform of boundary data, f_hat(kappa) = int f(x) e^{i kappa x} dx.
struct BoundaryTransform {
  enum class Preset { zero, delta, gaussian, custom };
  Preset preset = Preset::zero;
  double width = 1.0;  // gaussian: f_hat = exp(-w^2 kappa^2 / 2)
  std::function<cplx(double)> custom;

  cplx operator()(double kappa) const;
  // physical-space value, available for zero and gaussian presets
  double physical(double x) const;
  bool is_zero() const { return preset == Preset::zero; }

  static BoundaryTransform zero() { return {}; }
  static BoundaryTransform delta() { return {Preset::delta, 1.0, {}}; }
  static BoundaryTransform gaussian(double w) { return {Preset::gaussian, w, {}}; }
};

struct SourceSpec {
  enum class Preset { zero, delta_delta, delta_power, custom };
  Preset preset = Preset::zero;
  double beta = 0.0;  // delta_power: Phi = delta(x) y^-beta / Gamma(1-beta)
  // custom: Phi_hat(kappa, y), behaving like y^custom_exponent near y = 0
  std::function<cplx(double, double)> custom;
  double custom_exponent = 0.0;

  bool is_zero() const { return preset == Preset::zero; }
};

struct ProblemSpec {
  Kind kind = Kind::laplace;
  Variant variant = Variant::quantum;
  RieszFellerSymbol sym{2.0, 0.0};
  HilferOrder ord{2.0, 1.0};
  double k = 0.0;
  BoundaryTransform f_hat;
  BoundaryTransform g_hat;
  SourceSpec source;
};

// Throws ValidityError describing the violated parameter range.
void validate(const ProblemSpec& prob);

// rho = (1 - nu)(2 - mu)
double rho_of(const HilferOrder& ord);

// Argument multiplier Lambda(kappa) of the ML kernels (E(y^mu Lambda)).
cplx lambda_symbol(const ProblemSpec& prob, double kappa);

// Sign convention actually used (wave kinds always use the quantum sign).
Variant effective_variant(const ProblemSpec& prob);

std::string to_string(Kind k);
std::string to_string(Variant v);
Kind kind_from_string(const std::string& s);
Variant variant_from_string(const std::string& s);

}  // namespace fracfield
