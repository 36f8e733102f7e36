// Copyright 2026 The threelines Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "threelines/domain.hpp"

namespace threelines {

enum class Route { ClosedForm, Quadrature };

const char* to_string(Route r);

struct OptimalValue {
  double log_h = 0.0;
  double h = 1.0;
  Route route = Route::ClosedForm;
};

/// I(alpha) = log H_{1,inf}(alpha), either through the Clausen closed form or
/// by integrating P_alpha log(P_alpha / (1 - alpha)) over the line.
double log_I(Alpha alpha, Route route = Route::ClosedForm, const Tolerance& tol = {});

/// log H_{p,q}(alpha) = I(alpha)/p + I(1 - alpha)/q. Zero weights are skipped,
/// so the Hadamard corner (inf, inf) is exactly 1 on either route.
OptimalValue log_H(const Exponent& p, const Exponent& q, Alpha alpha, Route route = Route::ClosedForm,
                   const Tolerance& tol = {});

/// 1 / (4 sin(pi alpha) alpha^alpha (1 - alpha)^(1 - alpha)), the value of H_{p,q} H_{p*,q*}.
double duality_target(Alpha alpha);

double duality_defect(const Exponent& p, const Exponent& q, Alpha alpha, Route route = Route::ClosedForm,
                      const Tolerance& tol = {});

double loglinear_defect(const Exponent& p0, const Exponent& q0, const Exponent& p1, const Exponent& q1,
                        double t, Alpha alpha, Route route = Route::ClosedForm, const Tolerance& tol = {});

/// |log H_{p,q}(alpha) - log H_{q,p}(1 - alpha)|.
double flip_defect(const Exponent& p, const Exponent& q, Alpha alpha, Route route = Route::ClosedForm,
                   const Tolerance& tol = {});

/// H_{s0,s1}(alpha) * m0_norm^(1 - alpha) * m1_norm^alpha.
double stein_bound(const Exponent& s0, const Exponent& s1, Alpha alpha, double m0_norm, double m1_norm);

}  // namespace threelines
