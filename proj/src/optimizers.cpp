// Copyright 2026 The threelines Authors
// SPDX-License-Identifier: Apache-2.0

#include "threelines/optimizers.hpp"

#include <algorithm>
#include <cmath>

#include "threelines/kernels.hpp"
#include "threelines/quadrature.hpp"
#include "threelines/three_lines.hpp"

namespace threelines {

namespace {

// Boundary data f = log(P_a / (1 - a)) and its reflection g = log(P_{1-a} / a),
// with the constants hoisted out of the integrand.
struct BoundaryData {
  double a;
  double log_sin;
  double sin_half_sq;  // sin^2(pi a / 2)
  double cos_half_sq;  // cos^2(pi a / 2) = sin^2(pi (1-a) / 2)
  double log_1ma;
  double log_a;
  double bound_f;  // |f(t)| <= pi |t| + bound_f
  double bound_g;

  explicit BoundaryData(double alpha) : a(alpha) {
    log_sin = std::log(std::sin(kPi * a));
    const double s = std::sin(0.5 * kPi * a);
    const double c = std::cos(0.5 * kPi * a);
    sin_half_sq = s * s;
    cos_half_sq = c * c;
    log_1ma = std::log1p(-a);
    log_a = std::log(a);
    const double log4 = std::log(4.0);
    bound_f = std::abs(log_sin) + std::max(log4, std::abs(std::log(4.0 * sin_half_sq))) + std::abs(log_1ma);
    bound_g = std::abs(log_sin) + std::max(log4, std::abs(std::log(4.0 * cos_half_sq))) + std::abs(log_a);
  }

  // log(cosh(pi t) - cos(pi y)) + log 2 - pi|t| written stably, for half_sq = sin^2(pi y / 2)
  static double log_den(double half_sq, double t) {
    const double at = kPi * std::abs(t);
    const double e = std::exp(-at);
    const double om = -std::expm1(-at);
    return std::log(om * om + 4.0 * e * half_sq);
  }

  double f(double t) const { return log_sin - kPi * std::abs(t) - log_den(sin_half_sq, t) - log_1ma; }
  double g(double t) const { return log_sin - kPi * std::abs(t) - log_den(cos_half_sq, t) - log_a; }
};

constexpr double kKernelTailScale = 1.1;    // P_y(s) <= 1.1 e^{-pi|s|} for |s| >= 1
constexpr double kConjugateTailScale = 6.6; // |Q_y(s) - sign(s)/2| <= 3.3 e^{-pi|s|} for |s| >= 1

double weight_p(const OptimizerContext& ctx) { return ctx.p.recip(); }
double weight_q(const OptimizerContext& ctx) { return ctx.q.recip(); }

void require_interior(StripPoint z, const char* what) {
  if (!(z.y > 0.0 && z.y < 1.0)) throw DomainError(std::string(what) + ": needs 0 < Im z < 1");
}

}  // namespace

OptimizerContext OptimizerContext::build(const Exponent& p, const Exponent& q, Alpha alpha, const Tolerance& tol) {
  const double beta = compute_beta(p, q, alpha);
  OptimizerContext ctx{p, q, alpha, tol, log_H(p, q, alpha).log_h, beta, 1.0, 1.0};
  // norms of exact boundary moduli only need the scalar-kernel tolerance
  const Tolerance norm_tol{1e-12, 1e-12, tol.max_refinements};
  ctx.kappa = compute_kappa(p, q, alpha, beta, norm_tol);
  ctx.c = compute_c(p, q, alpha, beta, norm_tol);
  return ctx;
}

double compute_beta(const Exponent& p, const Exponent& q, Alpha alpha) {
  const double a = alpha.value();
  return (log_H(p, q, alpha).log_h + std::log1p(-a)) / a;
}

RealPhiParts phi_real_parts(Alpha alpha, StripPoint z, const Tolerance& tol, PartMask mask) {
  require_interior(z, "phi_real_parts");
  RealPhiParts out;
  const BoundaryData bd(alpha.value());
  const double x = z.x;
  const double sy = std::sin(kPi * z.y);
  const double sh = std::sin(0.5 * kPi * z.y);
  const double ch = std::cos(0.5 * kPi * z.y);
  // P_y(s) = sin(pi y) e / D with e = e^{-pi|s|}; P_{1-y} swaps sin^2 and cos^2 of the half angle
  auto kernel = [sy](double s, double half_sq) {
    const double as = kPi * std::abs(s);
    const double e = std::exp(-as);
    const double om = -std::expm1(-as);
    return sy * e / (om * om + 4.0 * e * half_sq);
  };
  if (mask.bottom) {
    const double sh2 = sh * sh;
    LineFunction f{[&](double t) { return kernel(x - t, sh2) * bd.f(t); },
                   Envelope{kPi, 1.0, 1.0, kKernelTailScale * (kPi + kPi * std::abs(x) + bd.bound_f), x},
                   {x, 0.0}};
    out.bottom = integrate_line(f, tol).value;
  }
  if (mask.top) {
    const double ch2 = ch * ch;
    LineFunction g{[&](double t) { return kernel(x - t, ch2) * bd.g(t); },
                   Envelope{kPi, 1.0, 1.0, kKernelTailScale * (kPi + kPi * std::abs(x) + bd.bound_g), x},
                   {x, 0.0}};
    out.top = integrate_line(g, tol).value;
  }
  return out;
}

PhiParts phi_parts(Alpha alpha, StripPoint z, const Tolerance& tol, PartMask mask) {
  require_interior(z, "phi_parts");
  PhiParts out;
  const double a = alpha.value();
  const BoundaryData bd(a);
  const Complex w = z.to_complex();
  const Complex i(0.0, 1.0);
  const double x = z.x;
  const double half = 0.5 * std::abs(x);
  // both the kernel and the normalized conjugate kernel are below this envelope beyond |t - x/2| >= |x|/2 + 1
  const double tail = (kConjugateTailScale + kKernelTailScale) * std::exp(kPi * half);
  if (mask.bottom) {
    ComplexLineFunction f{
        [&](double t) { return (strip_cauchy_kernel(w - t) - i * conjugate_poisson(a, -t)) * bd.f(t); },
        Envelope{kPi, 1.0, half + 1.0, tail * (kPi + kPi * std::abs(x) + bd.bound_f), 0.5 * x},
        {x, 0.0}};
    out.bottom = integrate_line(f, tol).value;
  }
  if (mask.top) {
    ComplexLineFunction g{
        [&](double t) { return (strip_cauchy_kernel(i - w + t) + i * conjugate_poisson(1.0 - a, -t)) * bd.g(t); },
        Envelope{kPi, 1.0, half + 1.0, tail * (kPi + kPi * std::abs(x) + bd.bound_g), 0.5 * x},
        {x, 0.0}};
    out.top = integrate_line(g, tol).value;
  }
  return out;
}

PartMask part_mask(const Exponent& p, const Exponent& q) { return {p.recip() != 0.0, q.recip() != 0.0}; }

double combine(const Exponent& p, const Exponent& q, const RealPhiParts& parts) {
  double v = 0.0;
  if (p.recip() != 0.0) v += p.recip() * parts.bottom;
  if (q.recip() != 0.0) v += q.recip() * parts.top;
  return v;
}

Complex combine(const Exponent& p, const Exponent& q, const PhiParts& parts) {
  Complex v = 0.0;
  if (p.recip() != 0.0) v += p.recip() * parts.bottom;
  if (q.recip() != 0.0) v += q.recip() * parts.top;
  return v;
}

double phi_real(const OptimizerContext& ctx, StripPoint z) {
  require_interior(z, "phi_real");
  return combine(ctx.p, ctx.q, phi_real_parts(ctx.alpha, z, ctx.tol, part_mask(ctx.p, ctx.q)));
}

double phi_imag(const OptimizerContext& ctx, StripPoint z) {
  require_interior(z, "phi_imag");
  const double up = weight_p(ctx);
  const double uq = weight_q(ctx);
  if (up == 0.0 && uq == 0.0) return 0.0;
  const double a = ctx.alpha.value();
  const BoundaryData bd(a);
  const double x = z.x;
  const double y = z.y;
  auto integrand = [&](double t) {
    double v = 0.0;
    if (up != 0.0) v += up * (conjugate_poisson(y, x - t) - conjugate_poisson(a, -t)) * bd.f(t);
    if (uq != 0.0) v -= uq * (conjugate_poisson(1.0 - y, x - t) - conjugate_poisson(1.0 - a, -t)) * bd.g(t);
    return v;
  };
  const double half = 0.5 * std::abs(x);
  const double scale = kConjugateTailScale * std::exp(kPi * half) *
                       (up * (kPi + kPi * half + bd.bound_f) + uq * (kPi + kPi * half + bd.bound_g));
  LineFunction f{integrand, Envelope{kPi, 1.0, half + 1.0, scale, 0.5 * x}, {x, 0.0}};
  return integrate_line(f, ctx.tol).value;
}

Complex phi(const OptimizerContext& ctx, StripPoint z) {
  require_interior(z, "phi");
  return combine(ctx.p, ctx.q, phi_parts(ctx.alpha, z, ctx.tol, part_mask(ctx.p, ctx.q)));
}

Complex optimizer_h(const OptimizerContext& ctx, StripPoint z) { return std::exp(phi(ctx, z)); }

Complex optimizer_h_tilde(const OptimizerContext& ctx, StripPoint z) {
  return std::exp(phi(ctx, z) + Complex(0.0, ctx.beta) * z.to_complex());
}

BoundaryModuli boundary_moduli(const OptimizerContext& ctx, double x) {
  const double a = ctx.alpha.value();
  const double up = weight_p(ctx);
  const double uq = weight_q(ctx);
  BoundaryModuli out;
  if (up != 0.0) out.bottom = std::exp(up * (log_poisson(a, x) - std::log1p(-a)));
  if (uq != 0.0) out.top = std::exp(uq * (log_poisson(1.0 - a, x) - std::log(a)));
  return out;
}

BoundaryModuli dual_boundary_moduli(const OptimizerContext& ctx, double x) {
  const double a = ctx.alpha.value();
  const double vp = ctx.p.conj_recip();
  const double vq = ctx.q.conj_recip();
  BoundaryModuli out;
  out.bottom = vp == 0.0 ? 1.0 : std::exp(vp * (log_poisson(a, x) - std::log1p(-a)));
  const double shape = vq == 0.0 ? 0.0 : vq * (log_poisson(1.0 - a, x) - std::log(a));
  out.top = std::exp(ctx.beta + std::log(a) - std::log1p(-a) + shape);
  return out;
}

std::vector<double> default_boundary_heights() { return {4e-4, 2e-4, 1e-4}; }

double extrapolate_to_zero(const std::vector<double>& heights, const std::vector<double>& values) {
  if (heights.size() != values.size() || heights.empty()) {
    throw DomainError("extrapolation needs matching, nonempty samples");
  }
  std::vector<double> p = values;
  const std::size_t n = p.size();
  for (std::size_t m = 1; m < n; ++m) {
    for (std::size_t i = 0; i + m < n; ++i) {
      const double hi = heights[i];
      const double hj = heights[i + m];
      p[i] = (hj * p[i] - hi * p[i + 1]) / (hj - hi);
    }
  }
  return p[0];
}

BoundaryTraceParts phi_boundary_trace_parts(Alpha alpha, double x, const Tolerance& tol, PartMask mask,
                                            const std::vector<double>& heights) {
  std::vector<double> br, bi, tr, ti;
  for (double h : heights) {
    const PhiParts lo = phi_parts(alpha, {x, h}, tol, mask);
    const PhiParts hi = phi_parts(alpha, {x, 1.0 - h}, tol, mask);
    for (const PhiParts* pp : {&lo, &hi}) {
      br.push_back(pp->bottom.real());
      bi.push_back(pp->bottom.imag());
      tr.push_back(pp->top.real());
      ti.push_back(pp->top.imag());
    }
  }
  // samples alternate between y = h and y = 1 - h
  auto pick = [&](const std::vector<double>& v, int offset) {
    std::vector<double> out;
    for (std::size_t k = offset; k < v.size(); k += 2) out.push_back(v[k]);
    return extrapolate_to_zero(heights, out);
  };
  BoundaryTraceParts out;
  out.at_bottom = {{pick(br, 0), pick(bi, 0)}, {pick(tr, 0), pick(ti, 0)}};
  out.at_top = {{pick(br, 1), pick(bi, 1)}, {pick(tr, 1), pick(ti, 1)}};
  return out;
}

BoundaryTrace combine(const Exponent& p, const Exponent& q, const BoundaryTraceParts& parts) {
  return {combine(p, q, parts.at_bottom), combine(p, q, parts.at_top)};
}

BoundaryTrace phi_boundary_trace(const OptimizerContext& ctx, double x, const std::vector<double>& heights) {
  return combine(ctx.p, ctx.q,
                 phi_boundary_trace_parts(ctx.alpha, x, ctx.tol, part_mask(ctx.p, ctx.q), heights));
}

Complex dual_m_star(const OptimizerContext& ctx, StripPoint z) {
  require_interior(z, "dual_m_star");
  const Complex w = z.to_complex();
  return poisson_complex(ctx.alpha, z) * std::exp(-Complex(0.0, ctx.beta) * w - phi(ctx, z)) /
         (1.0 - ctx.alpha.value());
}

Complex dual_m_regular_part(const OptimizerContext& ctx, StripPoint z) {
  if (!(z.y < 0.0 && z.y > -1.0)) throw DomainError("dual_m: needs -1 < Im z < 0");
  const Complex w = z.to_complex();
  const Complex phi_star = std::conj(phi(ctx, z.conj()));
  const Complex exponent = Complex(0.0, ctx.beta) * w - std::log1p(-ctx.alpha.value()) - phi_star;
  return poisson_complex(ctx.alpha, z) * cexpm1(exponent);
}

Complex dual_m(const OptimizerContext& ctx, StripPoint z) {
  const double a = ctx.alpha.value();
  const Complex w = z.to_complex();
  if (!(z.y <= 0.0 && z.y >= -1.0)) throw DomainError("dual_m: needs -1 <= Im z <= 0");
  if (std::abs(w + Complex(0.0, a)) < 1e-3) {
    const Complex reg = dual_m_regular_part(ctx, z);
    if (std::abs(reg) > 1e3) throw PoleError("dual_m: pole at -i alpha not cancelled");
    return poisson_complex(ctx.alpha, z) + reg;
  }
  // boundary lines use the exact traces of h
  Complex phi_star;
  if (z.y == 0.0 || z.y == -1.0) {
    const BoundaryTrace tr = phi_boundary_trace(ctx, z.x);
    phi_star = std::conj(z.y == 0.0 ? tr.bottom : tr.top);
  } else {
    phi_star = std::conj(phi(ctx, z.conj()));
  }
  return poisson_complex(ctx.alpha, z) * std::exp(Complex(0.0, ctx.beta) * w - phi_star) / (1.0 - a);
}

namespace {

// Lp norm to relative accuracy: a coarse pass fixes the magnitude, so that small
// norms (|m_{-1}|^{q*} can integrate to 1e-8) are not swamped by an absolute tolerance.
double relative_lp_norm(const LineFunction& f, const Exponent& e, const Tolerance& tol) {
  if (e.is_infinite()) return lp_norm(f, e, tol);
  const double coarse = lp_norm(f, e, Tolerance{1e-6, 1e-6, tol.max_refinements});
  const double mass = std::pow(coarse, e.value());
  if (!(mass > 0.0) || !std::isfinite(mass)) return coarse;
  return lp_norm(f, e, Tolerance{tol.rel_tol * mass, tol.rel_tol, tol.max_refinements});
}

}  // namespace

double compute_kappa(const Exponent& p, const Exponent& q, Alpha alpha, double beta, const Tolerance& tol) {
  const double a = alpha.value();
  const Envelope env{kPi, 0.0, 1.0, kKernelTailScale / std::min(a, 1.0 - a), 0.0};
  OptimizerContext tmp{p, q, alpha, tol, 0.0, beta, 1.0, 1.0};
  if (!p.is_infinite() && p.recip() != 1.0) {
    const LineFunction m0{[&tmp](double x) { return dual_boundary_moduli(tmp, x).bottom; },
                          Envelope{kPi * p.conj_recip(), 0.0, 1.0, std::pow(env.scale, p.conj_recip()), 0.0},
                          {0.0}};
    return std::pow(relative_lp_norm(m0, conjugate(p), tol), conjugate(p).value());
  }
  if (p.recip() == 1.0) {
    const LineFunction h0{[&tmp](double x) { return boundary_moduli(tmp, x).bottom; }, env, {0.0}};
    return relative_lp_norm(h0, p, tol);
  }
  // p = inf: p* = 1
  const LineFunction m0{[&tmp](double x) { return dual_boundary_moduli(tmp, x).bottom; }, env, {0.0}};
  return relative_lp_norm(m0, Exponent::from_p(1), tol);
}

double compute_c(const Exponent& p, const Exponent& q, Alpha alpha, double beta, const Tolerance& tol) {
  const double a = alpha.value();
  OptimizerContext tmp{p, q, alpha, tol, 0.0, beta, 1.0, 1.0};
  const double vq = q.conj_recip();
  const double peak = std::exp(beta) * a / (1.0 - a) * std::pow(kKernelTailScale / a, vq);
  const LineFunction m1{[&tmp](double x) { return dual_boundary_moduli(tmp, x).top; },
                        Envelope{kPi * vq, 0.0, 1.0, std::max(peak, std::exp(beta) * a / (1.0 - a)), 0.0},
                        {0.0}};
  if (vq == 0.0) {
    // |m_{-1}| is constant; its sup needs only a finite window
    LineFunction flat = m1;
    flat.envelope = Envelope{0.0, 0.0, 1.0, 1.0, 0.0};
    return relative_lp_norm(flat, Exponent::infinity(), tol);
  }
  const Exponent qs = conjugate(q);
  return a / ((1.0 - a) * std::pow(relative_lp_norm(m1, qs, tol), qs.value()));
}

OptimizerNorms optimizer_norms(const OptimizerContext& ctx) {
  const double a = ctx.alpha.value();
  auto norm_of = [&ctx](auto modulus, double rate_factor, double peak, const Exponent& e) {
    const LineFunction f{modulus, Envelope{kPi * rate_factor, 0.0, 1.0, peak, 0.0}, {0.0}};
    if (rate_factor == 0.0) {
      LineFunction flat = f;
      flat.envelope = Envelope{0.0, 0.0, 1.0, 1.0, 0.0};
      return relative_lp_norm(flat, e, ctx.tol);
    }
    return relative_lp_norm(f, e, ctx.tol);
  };
  const double up = ctx.p.recip(), uq = ctx.q.recip();
  const double vp = ctx.p.conj_recip(), vq = ctx.q.conj_recip();
  const double k = kKernelTailScale;
  OptimizerNorms n{};
  n.h0_p = norm_of([&](double x) { return boundary_moduli(ctx, x).bottom; }, up,
                   std::pow(k / (1.0 - a), up), ctx.p);
  n.h1_q = norm_of([&](double x) { return boundary_moduli(ctx, x).top; }, uq, std::pow(k / a, uq), ctx.q);
  n.h1_tilde_q = std::exp(-ctx.beta) * n.h1_q;
  n.m0_pstar = norm_of([&](double x) { return dual_boundary_moduli(ctx, x).bottom; }, vp,
                       std::pow(k / (1.0 - a), vp), conjugate(ctx.p));
  n.m1_qstar = norm_of([&](double x) { return dual_boundary_moduli(ctx, x).top; }, vq,
                       std::exp(ctx.beta) * a / (1.0 - a) * std::pow(k / a, vq), conjugate(ctx.q));
  return n;
}

ELResiduals el_residuals(const OptimizerContext& ctx, double x, const std::vector<double>& heights) {
  return el_residuals_from_trace(ctx, x, phi_boundary_trace(ctx, x, heights));
}

ELResiduals el_residuals_from_trace(const OptimizerContext& ctx, double x, const BoundaryTrace& tr) {
  const double a = ctx.alpha.value();
  const Complex ib(0.0, ctx.beta);
  // h~_0 = e^{phi_0 + i beta x}, h~_1 = e^{phi_1 + i beta (x + i)}
  const Complex h0 = std::exp(tr.bottom + ib * x);
  const Complex h1 = std::exp(tr.top + ib * Complex(x, 1.0));
  // m_0 = P_a(x) e^{i beta x} / ((1-a) conj(h(x))), m_{-1} = P_a(x - i) e^{i beta (x - i)} / ((1-a) conj(h(x + i)))
  const Complex m0 = std::exp(log_poisson(a, x) - std::log1p(-a) + ib * x - std::conj(tr.bottom));
  const Complex m1 =
      -std::exp(log_poisson(1.0 - a, x) - std::log1p(-a) + ib * Complex(x, -1.0) - std::conj(tr.top));

  const bool p_one = ctx.p.recip() == 1.0;
  const bool q_one = ctx.q.recip() == 1.0;
  const double ps = conjugate(ctx.p).value();
  const double qs = conjugate(ctx.q).value();
  const double am0 = std::abs(m0);
  const double am1 = std::abs(m1);

  ELResiduals r{};
  if (p_one) {
    r.r0 = std::abs(am0 - 1.0);
    r.phase0_plain = std::abs(m0 / am0 - h0 / std::abs(h0));
    r.phase0_conj = std::abs(std::conj(m0) / am0 - h0 / std::abs(h0));
  } else {
    const double pw = std::pow(am0, ps - 2.0);
    r.r0 = std::abs(std::abs(h0) - std::pow(am0, ps - 1.0));
    r.phase0_plain = std::abs(h0 - m0 * pw);
    r.phase0_conj = std::abs(h0 - std::conj(m0) * pw);
  }
  if (q_one) {
    r.r1 = std::abs(am1 - ctx.c);
    r.phase1_plain = std::abs(-m1 / am1 - h1 / std::abs(h1));
    r.phase1_conj = std::abs(-std::conj(m1) / am1 - h1 / std::abs(h1));
  } else {
    const double pw = ctx.c * std::pow(am1, qs - 2.0);
    r.r1 = std::abs(std::abs(h1) - ctx.c * std::pow(am1, qs - 1.0));
    r.phase1_plain = std::abs(h1 + m1 * pw);
    r.phase1_conj = std::abs(h1 + std::conj(m1) * pw);
  }
  return r;
}

double product_residual(const OptimizerContext& ctx, StripPoint z) {
  require_interior(z, "product_residual");
  const Complex lhs = optimizer_h_tilde(ctx, z) * dual_m_star(ctx, z);
  const Complex rhs = ctx.kappa / (1.0 - ctx.alpha.value()) * poisson_complex(ctx.alpha, z);
  return std::abs(lhs - rhs);
}

double decay_defect(const OptimizerContext& ctx, double x, double y) {
  const double slope = (1.0 - y) * ctx.p.recip() + y * ctx.q.recip();
  return phi_real(ctx, {x, y}) + kPi * slope * std::abs(x);
}

double decay_limit(const OptimizerContext& ctx, double y) {
  const double a = ctx.alpha.value();
  const double ls = std::log(std::sin(kPi * a));
  double v = 0.0;
  if (ctx.p.recip() != 0.0) v += (1.0 - y) * ctx.p.recip() * (ls - std::log1p(-a));
  if (ctx.q.recip() != 0.0) v += y * ctx.q.recip() * (ls - std::log(a));
  return v;
}

Complex blaschke_g(const OptimizerContext& ctx, StripPoint z) {
  require_interior(z, "blaschke_g");
  const Complex w = z.to_complex();
  return poisson_blaschke_product(ctx.alpha, z) * std::exp(-Complex(0.0, ctx.beta) * w - phi(ctx, z)) /
         (1.0 - ctx.alpha.value());
}

Complex blaschke_g_boundary(const OptimizerContext& ctx, double x, const std::vector<double>& heights) {
  const BoundaryTrace tr = phi_boundary_trace(ctx, x, heights);
  return poisson_blaschke_product(ctx.alpha, {x, 0.0}) * std::exp(-Complex(0.0, ctx.beta * x) - tr.bottom) /
         (1.0 - ctx.alpha.value());
}

double dual_objective(const OptimizerContext& ctx, const OptimizerNorms& n) {
  const double a = ctx.alpha.value();
  return std::pow(n.m0_pstar / (1.0 - a), 1.0 - a) * std::pow(n.m1_qstar / a, a);
}

double dual_objective(const OptimizerContext& ctx) { return dual_objective(ctx, optimizer_norms(ctx)); }

CauchyRiemannParts cauchy_riemann_parts(Alpha alpha, StripPoint z, const Tolerance& tol, PartMask mask,
                                        double h) {
  // fourth-order central differences: (-f(2h) + 8 f(h) - 8 f(-h) + f(-2h)) / 12h
  auto d = [&](double dx, double dy) {
    auto at = [&](double s) { return phi_parts(alpha, {z.x + s * dx, z.y + s * dy}, tol, mask); };
    const PhiParts p2 = at(2 * h), p1 = at(h), m1 = at(-h), m2 = at(-2 * h);
    return PhiParts{(m2.bottom - p2.bottom + 8.0 * (p1.bottom - m1.bottom)) / (12.0 * h),
                    (m2.top - p2.top + 8.0 * (p1.top - m1.top)) / (12.0 * h)};
  };
  const PhiParts px = d(1.0, 0.0);
  const PhiParts py = d(0.0, 1.0);
  // u_x - v_y + i (u_y + v_x), which vanishes for holomorphic u + iv
  auto defect = [](Complex fx, Complex fy) { return Complex(fx.real() - fy.imag(), fy.real() + fx.imag()); };
  return {defect(px.bottom, py.bottom), defect(px.top, py.top)};
}

double cauchy_riemann_residual(const OptimizerContext& ctx, StripPoint z, double h) {
  const CauchyRiemannParts d = cauchy_riemann_parts(ctx.alpha, z, ctx.tol, part_mask(ctx.p, ctx.q), h);
  return std::abs(combine(ctx.p, ctx.q, PhiParts{d.bottom, d.top}));
}

}  // namespace threelines
