#pragma once
#include <cmath>
#include <complex>

namespace fracfield {

using cplx = std::complex<double>;

// value = mantissa * exp(log_scale). Used where results over/underflow double.
struct ScaledComplex {
  cplx mantissa{0.0, 0.0};
  double log_scale = 0.0;

  cplx value() const {
    if (mantissa == cplx(0.0, 0.0)) return {0.0, 0.0};
    return mantissa * std::exp(log_scale);
  }
  // log|value|; -inf for zero
  double log_abs() const {
    double a = std::abs(mantissa);
    if (a == 0.0) return -INFINITY;
    return std::log(a) + log_scale;
  }
  ScaledComplex normalized() const {
    double a = std::abs(mantissa);
    if (a == 0.0 || !std::isfinite(a)) return *this;
    return {mantissa / a, log_scale + std::log(a)};
  }
};

inline ScaledComplex operator*(const ScaledComplex& a, const ScaledComplex& b) {
  return ScaledComplex{a.mantissa * b.mantissa, a.log_scale + b.log_scale}.normalized();
}

inline ScaledComplex operator*(const ScaledComplex& a, cplx c) {
  return ScaledComplex{a.mantissa * c, a.log_scale}.normalized();
}

inline ScaledComplex operator+(const ScaledComplex& a, const ScaledComplex& b) {
  if (a.mantissa == cplx(0.0)) return b;
  if (b.mantissa == cplx(0.0)) return a;
  double s = std::max(a.log_scale, b.log_scale);
  cplx m = a.mantissa * std::exp(a.log_scale - s) + b.mantissa * std::exp(b.log_scale - s);
  return ScaledComplex{m, s}.normalized();
}

inline ScaledComplex scaled_from(cplx v) { return ScaledComplex{v, 0.0}.normalized(); }

}  // namespace fracfield
