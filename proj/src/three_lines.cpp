// Copyright 2026 The threelines Authors
// SPDX-License-Identifier: Apache-2.0

#include "threelines/three_lines.hpp"

#include <cmath>

#include "threelines/kernels.hpp"
#include "threelines/quadrature.hpp"
#include "threelines/special.hpp"

namespace threelines {

namespace {

double log_I_closed(double a) {
  return -(1.0 - a) * std::log(4.0 * (1.0 - a) * std::sin(kPi * a)) + clausen2(2.0 * kPi * a) / kPi;
}

double log_I_quadrature(double a, const Tolerance& tol) {
  const double log_norm = std::log(1.0 - a);
  // for |t| >= 1: P_a <= 1.1 e^{-pi|t|} and |log(P_a/(1-a))| <= pi|t| + |log sin| + |log(1-a)| + 1
  const double scale = 1.1 * (kPi + std::abs(std::log(std::sin(kPi * a))) + std::abs(log_norm) + 1.0);
  LineFunction f{[a, log_norm](double t) { return poisson(a, t) * (log_poisson(a, t) - log_norm); },
                 Envelope{kPi, 1.0, 1.0, scale, 0.0},
                 {0.0}};
  return integrate_line(f, tol).value;
}

}  // namespace

const char* to_string(Route r) { return r == Route::ClosedForm ? "closed_form" : "quadrature"; }

double log_I(Alpha alpha, Route route, const Tolerance& tol) {
  return route == Route::ClosedForm ? log_I_closed(alpha.value()) : log_I_quadrature(alpha.value(), tol);
}

OptimalValue log_H(const Exponent& p, const Exponent& q, Alpha alpha, Route route, const Tolerance& tol) {
  double lh = 0.0;
  if (p.recip() != 0.0) lh += p.recip() * log_I(alpha, route, tol);
  if (q.recip() != 0.0) lh += q.recip() * log_I(alpha.flipped(), route, tol);
  return {lh, std::exp(lh), route};
}

double duality_target(Alpha alpha) {
  const double a = alpha.value();
  return std::exp(-std::log(4.0 * std::sin(kPi * a)) - a * std::log(a) - (1.0 - a) * std::log1p(-a));
}

double duality_defect(const Exponent& p, const Exponent& q, Alpha alpha, Route route, const Tolerance& tol) {
  const double h = log_H(p, q, alpha, route, tol).h;
  const double hs = log_H(conjugate(p), conjugate(q), alpha, route, tol).h;
  return std::abs(h * hs - duality_target(alpha));
}

double loglinear_defect(const Exponent& p0, const Exponent& q0, const Exponent& p1, const Exponent& q1,
                        double t, Alpha alpha, Route route, const Tolerance& tol) {
  const Exponent pt = interpolate_exponent(p0, p1, t);
  const Exponent qt = interpolate_exponent(q0, q1, t);
  const double l0 = log_H(p0, q0, alpha, route, tol).log_h;
  const double l1 = log_H(p1, q1, alpha, route, tol).log_h;
  const double lt = log_H(pt, qt, alpha, route, tol).log_h;
  return std::abs(lt - (1.0 - t) * l0 - t * l1);
}

double flip_defect(const Exponent& p, const Exponent& q, Alpha alpha, Route route, const Tolerance& tol) {
  return std::abs(log_H(p, q, alpha, route, tol).log_h - log_H(q, p, alpha.flipped(), route, tol).log_h);
}

double stein_bound(const Exponent& s0, const Exponent& s1, Alpha alpha, double m0_norm, double m1_norm) {
  if (!(m0_norm >= 0.0) || !(m1_norm >= 0.0)) throw DomainError("stein_bound needs nonnegative norms");
  const double a = alpha.value();
  return log_H(s0, s1, alpha).h * std::pow(m0_norm, 1.0 - a) * std::pow(m1_norm, a);
}

}  // namespace threelines
