// Copyright 2026 The threelines Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "threelines/domain.hpp"

namespace threelines {

/// Everything needed to evaluate the optimizer h = e^phi and its dual m for
/// one (p, q, alpha). Built once; all evaluations below are reentrant.
struct OptimizerContext {
  Exponent p;
  Exponent q;
  Alpha alpha;
  Tolerance tol;
  /// log H_{p,q}(alpha) from the closed form.
  double log_h_alpha;
  /// Phase slope: e^{-beta alpha} h(i alpha) = 1 / (1 - alpha).
  double beta;
  /// Product-formula constant; 1 for the constructed pair.
  double kappa;
  /// Multiplier of the top Euler-Lagrange equation (see compute_c).
  double c;

  /// Default quadrature tolerance for phi; tight enough for finite-difference checks.
  static Tolerance default_tolerance() { return {1e-13, 1e-13, 4000}; }

  static OptimizerContext build(const Exponent& p, const Exponent& q, Alpha alpha,
                                const Tolerance& tol = default_tolerance());
};

/// Which of the two convolution parts to compute.
struct PartMask {
  bool bottom = true;
  bool top = true;
};
PartMask part_mask(const Exponent& p, const Exponent& q);

/// phi is linear in the weights: phi = bottom/p + top/q, and the two parts
/// depend on alpha and z only. Grid sweeps over (p, q) reuse them.
struct PhiParts {
  Complex bottom = 0.0;
  Complex top = 0.0;
};
struct RealPhiParts {
  double bottom = 0.0;
  double top = 0.0;
};

RealPhiParts phi_real_parts(Alpha alpha, StripPoint z, const Tolerance& tol, PartMask mask = {});
PhiParts phi_parts(Alpha alpha, StripPoint z, const Tolerance& tol, PartMask mask = {});

/// Weighted sums; zero weights drop their part entirely, so (inf, inf) gives exactly 0.
double combine(const Exponent& p, const Exponent& q, const RealPhiParts& parts);
Complex combine(const Exponent& p, const Exponent& q, const PhiParts& parts);

/// Re phi(x + iy) = (1/p) (P_y * f)(x) + (1/q) (P_{1-y} * g)(x),
/// f = log(P_alpha / (1 - alpha)), g = log(P_{1-alpha} / alpha); needs 0 < y < 1.
double phi_real(const OptimizerContext& ctx, StripPoint z);
/// Harmonic conjugate of phi_real normalized by Im phi(i alpha) = 0.
double phi_imag(const OptimizerContext& ctx, StripPoint z);
/// Both parts from one complex quadrature with the coth completion kernel.
Complex phi(const OptimizerContext& ctx, StripPoint z);

Complex optimizer_h(const OptimizerContext& ctx, StripPoint z);
/// h(z) e^{i beta z}, the optimizer paired with m in the Euler-Lagrange system.
Complex optimizer_h_tilde(const OptimizerContext& ctx, StripPoint z);

struct BoundaryModuli {
  double bottom = 1.0;
  double top = 1.0;
};

/// |h_0(x)| = (P_alpha(x) / (1 - alpha))^{1/p}, |h_1(x)| = (P_{1-alpha}(x) / alpha)^{1/q}.
BoundaryModuli boundary_moduli(const OptimizerContext& ctx, double x);
/// |m_0(x)| and |m_{-1}(x)| implied by the definition of m and the exact traces of h.
BoundaryModuli dual_boundary_moduli(const OptimizerContext& ctx, double x);

/// Default heights for boundary extrapolation, nearest the boundary last.
std::vector<double> default_boundary_heights();

/// Limit of a smooth function of the height as the height tends to 0,
/// by polynomial (Neville) extrapolation through the samples.
double extrapolate_to_zero(const std::vector<double>& heights, const std::vector<double>& values);

/// Traces of phi on y = 0 and y = 1, extrapolated from interior heights.
struct BoundaryTrace {
  Complex bottom;
  Complex top;
};
BoundaryTrace phi_boundary_trace(const OptimizerContext& ctx, double x,
                                 const std::vector<double>& heights = default_boundary_heights());

/// Parts of the traces on y = 0 and y = 1.
struct BoundaryTraceParts {
  PhiParts at_bottom;
  PhiParts at_top;
};
BoundaryTraceParts phi_boundary_trace_parts(Alpha alpha, double x, const Tolerance& tol, PartMask mask = {},
                                            const std::vector<double>& heights = default_boundary_heights());
BoundaryTrace combine(const Exponent& p, const Exponent& q, const BoundaryTraceParts& parts);

double compute_beta(const Exponent& p, const Exponent& q, Alpha alpha);

/// m(z) = P_alpha(z) e^{i beta z} / ((1 - alpha) h*(z)) on the lower strip -1 < Im z < 0
/// (the boundary lines are allowed). Within 1e-3 of -i alpha the regular part m - P_alpha
/// is formed from the cancelled expression and checked for boundedness.
Complex dual_m(const OptimizerContext& ctx, StripPoint z);
/// m - P_alpha, bounded near -i alpha.
Complex dual_m_regular_part(const OptimizerContext& ctx, StripPoint z);
/// m*(z) = conj(m(conj z)) on the upper strip.
Complex dual_m_star(const OptimizerContext& ctx, StripPoint z);

/// Quadrature norms of the boundary values.
struct OptimizerNorms {
  double h0_p;
  double h1_q;
  double h1_tilde_q;
  double m0_pstar;
  double m1_qstar;
};
OptimizerNorms optimizer_norms(const OptimizerContext& ctx);

/// kappa of the product formula: ||m_0||_{p*}^{p*} for p > 1, ||h_0||_1 for p = 1.
double compute_kappa(const Exponent& p, const Exponent& q, Alpha alpha, double beta, const Tolerance& tol);

/// Multiplier of the top Euler-Lagrange equation h~_1 = -c m_{-1} |m_{-1}|^{q*-2}.
/// For q > 1 this is alpha / ((1 - alpha) ||m_{-1}||_{q*}^{q*}); for q = 1 the
/// equation degenerates and the limiting constant ||m_{-1}||_inf = |m_{-1}| is returned.
double compute_c(const Exponent& p, const Exponent& q, Alpha alpha, double beta, const Tolerance& tol);

struct ELResiduals {
  /// Modulus form, gated.
  double r0;
  double r1;
  /// Phase form with m entering as is, and conjugated. Reported only.
  double phase0_plain;
  double phase0_conj;
  double phase1_plain;
  double phase1_conj;
};

/// Euler-Lagrange residuals at x from boundary traces extrapolated from the interior.
ELResiduals el_residuals(const OptimizerContext& ctx, double x,
                         const std::vector<double>& heights = default_boundary_heights());

ELResiduals el_residuals_from_trace(const OptimizerContext& ctx, double x, const BoundaryTrace& trace);

/// |h~(z) m*(z) - kappa P_alpha(z) / (1 - alpha)| for 0 < Im z < 1, z != i alpha.
double product_residual(const OptimizerContext& ctx, StripPoint z);

/// Re phi(x + iy) + pi ((1-y)/p + y/q) |x|.
double decay_defect(const OptimizerContext& ctx, double x, double y);
/// Limit of decay_defect as |x| -> inf.
double decay_limit(const OptimizerContext& ctx, double y);

/// g(z) = m*(z) B_alpha(z), with the pole of m* at i alpha cancelled.
Complex blaschke_g(const OptimizerContext& ctx, StripPoint z);
/// g_0(x) on the bottom line from the extrapolated trace of phi.
Complex blaschke_g_boundary(const OptimizerContext& ctx, double x,
                            const std::vector<double>& heights = default_boundary_heights());

/// (||m_0||_{p*} / (1 - alpha))^{1-alpha} (||m_{-1}||_{q*} / alpha)^alpha.
double dual_objective(const OptimizerContext& ctx, const OptimizerNorms& norms);
double dual_objective(const OptimizerContext& ctx);

/// Cauchy-Riemann defect of (Re phi, Im phi) at z from fourth-order central
/// differences with step h; the second-order stencil's h^2 error would dominate
/// within ~0.1 of the boundary when alpha is small.
double cauchy_riemann_residual(const OptimizerContext& ctx, StripPoint z, double h = 1e-4);

/// The defect (u_x - v_y) + i (u_y + v_x) of each part; it combines linearly like phi.
struct CauchyRiemannParts {
  Complex bottom;
  Complex top;
};
CauchyRiemannParts cauchy_riemann_parts(Alpha alpha, StripPoint z, const Tolerance& tol, PartMask mask = {},
                                        double h = 1e-4);

}  // namespace threelines
