// Copyright 2026 The threelines Authors
// SPDX-License-Identifier: Apache-2.0

#include "threelines/kernels.hpp"

#include <cmath>
#include <string>

namespace threelines {

namespace {

constexpr double kPoleRadius = 1e-12;

void require_height(double y, const char* what) {
  if (!(y > 0.0 && y < 1.0)) {
    throw DomainError(std::string(what) + ": height must lie in (0,1), got " + std::to_string(y));
  }
}

void require_finite(double x) {
  if (!std::isfinite(x)) throw NonFiniteError("kernel argument must be finite");
}

// cosh(pi x) - cos(pi y) = D / (2e) with e = exp(-pi |x|)
struct Denominator {
  double e;
  double d;
};

// half_angle_sq is sin^2(pi y / 2), or cos^2(pi y / 2) for the reflected kernel
Denominator denominator_from(double half_angle_sq, double x) {
  const double ax = kPi * std::abs(x);
  const double e = std::exp(-ax);
  const double one_minus_e = -std::expm1(-ax);
  return {e, one_minus_e * one_minus_e + 4.0 * e * half_angle_sq};
}

Denominator denominator(double y, double x) {
  const double s = std::sin(0.5 * kPi * y);
  return denominator_from(s * s, x);
}

}  // namespace

Complex cexpm1(Complex w) {
  const double a = w.real();
  const double b = w.imag();
  const double sh = std::sin(0.5 * b);
  const double re = std::expm1(a) * std::cos(b) - 2.0 * sh * sh;
  const double im = std::exp(a) * std::sin(b);
  return {re, im};
}

double poisson(double y, double x) {
  require_height(y, "poisson");
  require_finite(x);
  const auto [e, d] = denominator(y, x);
  return std::sin(kPi * y) * e / d;
}

double log_poisson(double y, double x) {
  require_height(y, "log_poisson");
  require_finite(x);
  const auto [e, d] = denominator(y, x);
  return std::log(std::sin(kPi * y)) - kPi * std::abs(x) - std::log(d);
}

double poisson_reflected(double y, double x) {
  require_height(y, "poisson_reflected");
  require_finite(x);
  // poisson(1 - y, x) without rounding 1 - y
  const double c = std::cos(0.5 * kPi * y);
  const auto [e, d] = denominator_from(c * c, x);
  return std::sin(kPi * y) * e / d;
}

Complex poisson_complex(Alpha alpha, StripPoint z) {
  const double a = alpha.value();
  const Complex ia(0.0, a);
  Complex w = z.to_complex();
  if (std::abs(w - ia) < kPoleRadius || std::abs(w + ia) < kPoleRadius) {
    throw PoleError("poisson_complex: evaluation at a pole");
  }
  // even in z; work in Re z >= 0 where e^{-pi z} is bounded
  if (w.real() < 0.0) w = -w;
  const Complex e1 = cexpm1(-kPi * (w - ia));
  const Complex e2 = cexpm1(-kPi * (w + ia));
  return std::sin(kPi * a) * std::exp(-kPi * w) / (e1 * e2);
}

double poisson_ft(double y, double k) {
  require_height(y, "poisson_ft");
  require_finite(k);
  const double a = 1.0 - y;
  const double ak = std::abs(k);
  if (ak < 1e-6) return a + a * (a * a - 1.0) * k * k / 6.0;
  return std::exp(-y * ak) * std::expm1(-2.0 * a * ak) / std::expm1(-2.0 * ak);
}

double conjugate_poisson(double y, double x) {
  require_height(y, "conjugate_poisson");
  require_finite(x);
  if (x == 0.0) return 0.0;
  const auto [e, d] = denominator(y, x);
  const double one_minus_e2 = -std::expm1(-2.0 * kPi * std::abs(x));
  return std::copysign(0.5 * one_minus_e2 / d, x);
}

Complex strip_cauchy_kernel(Complex w) {
  if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
    throw NonFiniteError("strip_cauchy_kernel argument must be finite");
  }
  const double sign = w.real() < 0.0 ? -1.0 : 1.0;
  const Complex v = sign * w;
  // coth(pi v / 2) = -(2 + E) / E with E = e^{-pi v} - 1
  const Complex e = cexpm1(-kPi * v);
  if (std::abs(e) == 0.0) throw PoleError("strip_cauchy_kernel: evaluation at a pole");
  return sign * Complex(0.0, 0.5) * (-(2.0 + e) / e);
}

Complex blaschke(Alpha alpha, StripPoint z) {
  const double a = alpha.value();
  const Complex ia(0.0, a);
  const Complex w = z.to_complex();
  if (std::abs(w + ia) < kPoleRadius) throw PoleError("blaschke: evaluation at the pole -i alpha");
  if (w.real() > 0.0) {
    return -std::polar(1.0, -kPi * a) * cexpm1(-kPi * (w - ia)) / cexpm1(-kPi * (w + ia));
  }
  return -std::polar(1.0, kPi * a) * cexpm1(kPi * (w - ia)) / cexpm1(kPi * (w + ia));
}

Complex poisson_blaschke_product(Alpha alpha, StripPoint z) {
  const double a = alpha.value();
  const Complex ia(0.0, a);
  const Complex w = z.to_complex();
  if (std::abs(w + ia) < kPoleRadius) {
    throw PoleError("poisson_blaschke_product: evaluation at the pole -i alpha");
  }
  const double s = std::sin(kPi * a);
  if (w.real() > 0.0) {
    const Complex e2 = cexpm1(-kPi * (w + ia));
    return -s * std::exp(-kPi * (w + ia)) / (e2 * e2);
  }
  const Complex g = cexpm1(kPi * (w + ia));
  return -s * std::exp(kPi * (w + ia)) / (g * g);
}

}  // namespace threelines
