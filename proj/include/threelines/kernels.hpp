// Copyright 2026 The threelines Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "threelines/domain.hpp"

namespace threelines {

/// e^w - 1 without cancellation for small |w|.
Complex cexpm1(Complex w);

/// Poisson kernel of the unit strip, (1/2) sin(pi y) / (cosh(pi x) - cos(pi y)), for 0 < y < 1.
double poisson(double y, double x);
/// log of poisson(y, x); linear in |x| for large |x|, never underflows.
double log_poisson(double y, double x);
/// (1/2) sin(pi y) / (cosh(pi x) + cos(pi y)), which is poisson(1 - y, x).
double poisson_reflected(double y, double x);

/// Meromorphic continuation of the kernel; throws PoleError within 1e-12 of +-i alpha.
Complex poisson_complex(Alpha alpha, StripPoint z);

/// Fourier transform sinh((1-y) k) / sinh(k).
double poisson_ft(double y, double k);

/// Harmonic conjugate (1/2) sinh(pi x) / (cosh(pi x) - cos(pi y)).
double conjugate_poisson(double y, double x);

/// (i/2) coth(pi w / 2); its boundary trace at w = x + iy is poisson + i conjugate_poisson.
Complex strip_cauchy_kernel(Complex w);

/// Blaschke factor of the strip with its zero at i alpha and pole at -i alpha.
Complex blaschke(Alpha alpha, StripPoint z);

/// poisson_complex(alpha, z) * blaschke(alpha, z) with the pole at i alpha cancelled;
/// equals 1 / (4 sin(pi alpha)) there.
Complex poisson_blaschke_product(Alpha alpha, StripPoint z);

}  // namespace threelines
