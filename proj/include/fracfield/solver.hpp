#pragma once
#include <iosfwd>
#include <string>
#include <vector>

#include "fracfield/foxh.hpp"
#include "fracfield/problem.hpp"
#include "fracfield/scaled.hpp"
#include "fracfield/specfun.hpp"

namespace fracfield {

struct GridSpec {
  std::vector<double> x;
  std::vector<double> y;
  static std::vector<double> uniform(double start, double stop, int count);
};

enum class Method { automatic, pointwise, closed_form, series };
Method method_from_string(const std::string& s);
std::string to_string(Method m);

struct SolveOptions {
  double abs_tol = 1e-13;
  double rel_tol = 1e-11;
  // delta data: multiply the kernel by exp(-eps kappa^2) for eps0, eps0/2, eps0/4
  // and extrapolate to eps = 0
  bool regularize_delta = false;
  double eps0 = 4e-3;
  int threads = 0;  // 0: hardware concurrency
  double asymptotic_threshold = 5.0;
};

// kappa-space integrand before the e^{-i kappa x} factor
cplx fourier_kernel(const ProblemSpec& prob, double kappa, double y);

struct PointwiseValue {
  double value = 0.0;
  double imag_residual = 0.0;
  double error = 0.0;
  bool regularized = false;
};
PointwiseValue solve_pointwise_detail(const ProblemSpec& prob, double x, double y,
                                      const SolveOptions& opt = {});
double solve_pointwise(const ProblemSpec& prob, double x, double y, const SolveOptions& opt = {});

// Delta-data terms coef * y^(beta'-1) E_{mu,beta'}(y^mu Lambda) in kappa space.
struct DeltaTerm {
  double coef;
  double beta;
};
// Throws NoClosedForm when the data are not all delta-type presets.
std::vector<DeltaTerm> delta_terms(const ProblemSpec& prob);

// Reduced H spec (in x) for one delta term at height y; value(x) equals the
// inverse transform of E_{mu,beta}(-y^mu |kappa|^alpha) times pi.
HFunctionSpec closed_form_spec(const ProblemSpec& prob, double beta, double y);

ScaledComplex solve_closed_form_scaled(const ProblemSpec& prob, double x, double y);
double solve_closed_form(const ProblemSpec& prob, double x, double y);

ScaledComplex solution_series_scaled(const ProblemSpec& prob, double x, double y);
double solution_series(const ProblemSpec& prob, double x, double y);

ScaledComplex solution_asymptotic_scaled(const ProblemSpec& prob, double x, double y,
                                         double threshold = 5.0);
double solution_asymptotic(const ProblemSpec& prob, double x, double y, double threshold = 5.0);

struct GridRow {
  double x, y, N, imag_residual;
  std::string method;
  std::string error_flag;  // empty when the point succeeded
};

std::vector<GridRow> solve_grid(const ProblemSpec& prob, const GridSpec& grid,
                                Method method = Method::automatic, const SolveOptions& opt = {});

void write_csv(std::ostream& os, const std::vector<GridRow>& rows);

// Short class name for the exception currently being handled.
std::string current_error_name();

}  // namespace fracfield
