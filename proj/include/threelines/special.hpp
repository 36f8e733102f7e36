// Copyright 2026 The threelines Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>

#include "threelines/domain.hpp"

namespace threelines {

/// Li2(1) = pi^2 / 6.
inline constexpr double kZeta2 = kPi * kPi / 6.0;

/// Principal branch of the dilogarithm, cut along [1, inf).
///
/// |z| <= 1/2 sums the power series directly. Elsewhere the argument is
/// mapped into the closed unit disk with Re z <= 1/2 by inversion and
/// reflection, and the series in u = -log(1-z) with Bernoulli coefficients
/// is summed there. That series converges for |u| < 2 pi and stays below
/// |u| ~ 1.3 on the reduced region, including the points exp(+-i pi/3)
/// where neither identity shrinks |z|.
///
/// Real z > 1 throws CutError; z == 1 returns pi^2/6.
Complex dilog(Complex z);

/// Clausen function Cl2(theta) = Im Li2(exp(i theta)).
double clausen2(double theta);

/// Absolute defects of the inversion, reflection and duplication identities.
/// A field is empty when z lies on a cut excluded by that identity.
struct DilogResiduals {
  std::optional<double> inversion;
  std::optional<double> reflection;
  std::optional<double> duplication;
};

/// Throws CutError when no identity applies at z.
DilogResiduals dilog_identity_residuals(Complex z);

}  // namespace threelines
