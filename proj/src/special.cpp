// Copyright 2026 The threelines Authors
// SPDX-License-Identifier: Apache-2.0

#include "threelines/special.hpp"

#include <array>
#include <cmath>

namespace threelines {

namespace {

constexpr long double factorial(int n) {
  long double f = 1.0L;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// B_{2k} / (2k+1)! for k = 1..14
constexpr std::array<double, 14> kBernoulliCoeffs = [] {
  constexpr std::array<long double, 14> b2k = {
      1.0L / 6.0L,           -1.0L / 30.0L,          1.0L / 42.0L,
      -1.0L / 30.0L,         5.0L / 66.0L,           -691.0L / 2730.0L,
      7.0L / 6.0L,           -3617.0L / 510.0L,      43867.0L / 798.0L,
      -174611.0L / 330.0L,   854513.0L / 138.0L,     -236364091.0L / 2730.0L,
      8553103.0L / 6.0L,     -23749461029.0L / 870.0L};
  std::array<double, 14> out{};
  for (int k = 1; k <= 14; ++k) out[k - 1] = static_cast<double>(b2k[k - 1] / factorial(2 * k + 1));
  return out;
}();

// sum_{n>=1} z^n / n^2, used for |z| <= 1/2
Complex power_series(Complex z) {
  Complex sum = 0.0;
  Complex zn = z;
  for (int n = 1; n < 200; ++n) {
    const Complex term = zn / (static_cast<double>(n) * n);
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
    zn *= z;
  }
  return sum;
}

// Li2 expressed through u = -log(1 - z); valid for |u| < 2 pi
Complex bernoulli_series(Complex u) {
  const Complex u2 = u * u;
  Complex acc = 0.0;
  for (auto it = kBernoulliCoeffs.rbegin(); it != kBernoulliCoeffs.rend(); ++it) {
    acc = acc * u2 + *it;
  }
  return u - 0.25 * u2 + u * u2 * acc;
}

// Li2(w) for |w| <= 1, given w and an accurate 1 - w.
Complex dilog_disk(Complex w, Complex one_minus_w) {
  if (std::abs(w) <= 0.5) return power_series(w);
  if (w.real() <= 0.5) return bernoulli_series(-std::log(one_minus_w));
  // reflection: 1 - w lies in the disk with Re(1-w) < 1/2
  return -bernoulli_series(-std::log(w)) + kZeta2 - std::log(w) * std::log(one_minus_w);
}

void require_finite(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw NonFiniteError("dilog argument must be finite");
  }
}

// Li2(t + i0) for real t > 1, through reflection so it does not lean on inversion
Complex dilog_above_cut(double t) {
  const Complex log_one_minus(std::log(t - 1.0), -kPi);
  return kZeta2 - std::log(t) * log_one_minus - dilog(Complex(1.0 - t, 0.0));
}

}  // namespace

Complex dilog(Complex z) {
  require_finite(z);
  if (z.imag() == 0.0) {
    if (z.real() == 1.0) return kZeta2;
    if (z.real() > 1.0) throw CutError("dilog: real argument > 1 lies on the branch cut");
  }
  if (std::norm(z) <= 1.0) return dilog_disk(z, 1.0 - z);
  // inversion, valid off [0, inf)
  const Complex w = 1.0 / z;
  const Complex log_minus_z = std::log(-z);
  return -dilog_disk(w, 1.0 - w) - kZeta2 - 0.5 * log_minus_z * log_minus_z;
}

double clausen2(double theta) {
  if (!std::isfinite(theta)) throw NonFiniteError("clausen2 argument must be finite");
  double t = std::remainder(theta, 2.0 * kPi);
  const double sign = t < 0.0 ? -1.0 : 1.0;
  t = std::abs(t);
  if (t == 0.0) return 0.0;
  if (t < 1e-2) {
    // theta - theta log theta + sum |B_2k| theta^(2k+1) / (2k (2k+1)!)
    const double t2 = t * t;
    const double tail = t * t2 * (1.0 / 72.0 + t2 * (1.0 / 14400.0 + t2 * (1.0 / 1270080.0)));
    return sign * (t - t * std::log(t) + tail);
  }
  const double s = std::sin(0.5 * t);
  const Complex z = std::polar(1.0, t);
  const Complex one_minus_z(2.0 * s * s, -std::sin(t));
  return sign * dilog_disk(z, one_minus_z).imag();
}

DilogResiduals dilog_identity_residuals(Complex z) {
  require_finite(z);
  const bool real_axis = z.imag() == 0.0;
  const double x = z.real();
  DilogResiduals r;
  if (!(real_axis && (x == 0.0 || x > 1.0))) {
    // on (0,1] take the principal log(-z) = log x + i pi, which pairs with Li2(1/z) from above
    const bool positive = real_axis && x > 0.0;
    const Complex l = positive ? Complex(std::log(x), kPi) : std::log(-z);
    const Complex inv = positive && x < 1.0 ? dilog_above_cut(1.0 / x) : dilog(1.0 / z);
    r.inversion = std::abs(dilog(z) + inv + kZeta2 + 0.5 * l * l);
  }
  if (!(real_axis && (x <= 0.0 || x >= 1.0))) {
    r.reflection =
        std::abs(dilog(1.0 - z) + dilog(z) - kZeta2 + std::log(z) * std::log(1.0 - z));
  }
  if (!(real_axis && std::abs(x) > 1.0)) {
    r.duplication = std::abs(0.5 * dilog(z * z) - dilog(-z) - dilog(z));
  }
  if (!r.inversion && !r.reflection && !r.duplication) {
    throw CutError("no dilogarithm identity applies at this argument");
  }
  return r;
}

}  // namespace threelines
