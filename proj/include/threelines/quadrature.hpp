// Copyright 2026 The threelines Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <vector>

#include "threelines/domain.hpp"

namespace threelines {

/// Tail certificate |f(x)| <= scale * (1 + |x - center|)^poly_growth * exp(-tail_rate * |x - center|)
/// for |x - center| >= x0.
struct Envelope {
  double tail_rate = 0.0;
  double poly_growth = 0.0;
  double x0 = 0.0;
  double scale = 1.0;
  double center = 0.0;

  double bound(double x) const;
};

template <class T>
struct BasicLineFunction {
  std::function<T(double)> eval;
  Envelope envelope;
  /// Points where the integrand has a kink or a sharp feature; panels are split there.
  std::vector<double> breakpoints;

  T operator()(double x) const { return eval(x); }
};

using LineFunction = BasicLineFunction<double>;
using ComplexLineFunction = BasicLineFunction<Complex>;

template <class T>
struct BasicQuadratureResult {
  T value{};
  double err_estimate = 0.0;
  long evaluations = 0;
};

using QuadratureResult = BasicQuadratureResult<double>;
using ComplexQuadratureResult = BasicQuadratureResult<Complex>;

/// Samples |f| at center +- 2 x0 and +- 4 x0 and throws EnvelopeError if the
/// certificate is violated. Debug builds run this from make_line_function.
void check_envelope(const LineFunction& f);
void check_envelope(const ComplexLineFunction& f);

LineFunction make_line_function(std::function<double(double)> eval, Envelope env,
                                std::vector<double> breakpoints = {});
ComplexLineFunction make_complex_line_function(std::function<Complex(double)> eval, Envelope env,
                                               std::vector<double> breakpoints = {});

/// Half-width X of the window [center - X, center + X] outside of which the
/// envelope integral is below tail_budget. Throws EnvelopeError for tail_rate <= 0.
double truncation_radius(const Envelope& env, double tail_budget);

/// Adaptive Gauss-Kronrod (15/31) global bisection over a finite interval.
QuadratureResult integrate_interval(const std::function<double(double)>& f, double a, double b,
                                    const Tolerance& tol, const std::vector<double>& breakpoints = {});
ComplexQuadratureResult integrate_interval_complex(const std::function<Complex(double)>& f, double a,
                                                   double b, const Tolerance& tol,
                                                   const std::vector<double>& breakpoints = {});

/// Integral over the real line; the tail beyond the envelope window is discarded.
QuadratureResult integrate_line(const LineFunction& f, const Tolerance& tol = {});
ComplexQuadratureResult integrate_line(const ComplexLineFunction& f, const Tolerance& tol = {});

struct SupResult {
  double argmax = 0.0;
  double max = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
};

inline constexpr int kSupScanIntervals = 4096;

/// Abscissa of grid node i in [0, kSupScanIntervals] used by the scans; callers
/// precomputing values on the same grid get bitwise-equal abscissae.
inline double sup_scan_node(double lo, double hi, int i) {
  return i == kSupScanIntervals ? hi : lo + (hi - lo) / kSupScanIntervals * i;
}

/// Global maximizer of |f| on [lo, hi]: grid scan with kSupScanIntervals
/// steps, then golden-section refinement around the best grid point.
/// The grid is evaluated with OpenMP.
SupResult sup_scan_interval(const LineFunction& f, double lo, double hi, const Tolerance& tol = {});
/// Serial reference of sup_scan_interval; results are bitwise identical.
SupResult sup_scan_interval_serial(const LineFunction& f, double lo, double hi,
                                   const Tolerance& tol = {});

SupResult sup_scan(const LineFunction& f, double window, const Tolerance& tol = {});
SupResult sup_scan_serial(const LineFunction& f, double window, const Tolerance& tol = {});

/// L^p norm on the real line. For p = inf the scan window is widened until
/// the envelope certifies nothing larger lies outside.
double lp_norm(const LineFunction& f, const Exponent& p, const Tolerance& tol = {});

}  // namespace threelines
