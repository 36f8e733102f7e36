// Copyright 2026 The threelines Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "threelines/errors.hpp"
#include "threelines/kernels.hpp"
#include "threelines/optimizers.hpp"
#include "threelines/quadrature.hpp"
#include "threelines/three_lines.hpp"

using namespace threelines;

namespace {

const Exponent kInf = Exponent::infinity();
const Exponent kOne = Exponent::from_p(1);
const Exponent kTwo = Exponent::from_p(2);

struct Case {
  Exponent p;
  Exponent q;
  double alpha;
};

// a spread of exponent pairs including both degenerate ends
const Case kCases[] = {
    {kOne, kInf, 0.5},  {kTwo, kTwo, 0.3},  {Exponent::parse("4/3"), Exponent::from_p(4), 0.7},
    {kOne, kOne, 0.5},  {kOne, kOne, 0.3},  {Exponent::from_p(4), kOne, 0.1},
    {kInf, kTwo, 0.9},  {kInf, kInf, 0.25},
};

}  // namespace

TEST_CASE("zero weights give the trivial optimizer") {
  const auto ctx = OptimizerContext::build(kInf, kInf, Alpha(0.5));
  for (StripPoint z : {StripPoint{0.0, 0.5}, StripPoint{1.3, 0.2}, StripPoint{-4.0, 0.9}}) {
    CHECK(phi_real(ctx, z) == 0.0);
    CHECK(phi_imag(ctx, z) == 0.0);
    CHECK(optimizer_h(ctx, z) == Complex(1.0, 0.0));
    CHECK(decay_defect(ctx, z.x, z.y) == 0.0);
  }
  const BoundaryModuli bm = boundary_moduli(ctx, 0.8);
  CHECK(bm.bottom == 1.0);
  CHECK(bm.top == 1.0);
  CHECK(el_residuals(ctx, 0.3).r0 == 0.0);
}

TEST_CASE("phase slope") {
  CHECK(std::abs(OptimizerContext::build(kInf, kInf, Alpha(0.5)).beta + 2.0 * std::log(2.0)) < 1e-15);
  for (double a : {0.25, 0.75}) {
    CHECK(std::abs(compute_beta(kInf, kInf, Alpha(a)) - std::log1p(-a) / a) < 1e-15);
  }
  for (const Case& c : kCases) {
    const auto ctx = OptimizerContext::build(c.p, c.q, Alpha(c.alpha));
    const Complex h = optimizer_h(ctx, {0.0, c.alpha});
    CHECK(std::abs(std::exp(-ctx.beta * c.alpha) * h.real() * (1.0 - c.alpha) - 1.0) < 1e-10);
  }
}

TEST_CASE("worked constants at (inf, inf)") {
  auto ctx = OptimizerContext::build(kInf, kInf, Alpha(0.5));
  CHECK(std::abs(ctx.c - 4.0) < 1e-12);
  CHECK(std::abs(ctx.kappa - 1.0) < 1e-10);
  const OptimizerNorms n = optimizer_norms(ctx);
  CHECK(std::abs(n.m0_pstar - 1.0) < 1e-10);
  CHECK(std::abs(n.m1_qstar - 0.25) < 1e-10);
  CHECK(std::abs(dual_objective(ctx, n) - 1.0) < 1e-10);
  // sup of h~ on the top line is e^{-beta}
  CHECK(std::abs(n.h1_tilde_q - 4.0) < 1e-12);
  CHECK(std::abs(blaschke_g(ctx, {0.0, 0.5}) - Complex(0.25, 0.0)) < 1e-12);

  ctx = OptimizerContext::build(kInf, kInf, Alpha(0.25));
  CHECK(std::abs(ctx.c - std::pow(0.75, -4.0)) < 1e-12);
  CHECK(std::abs(ctx.c - 3.1605) < 1e-4);
}

TEST_CASE("value at i alpha") {
  const auto ctx = OptimizerContext::build(kOne, kInf, Alpha(0.5));
  CHECK(std::abs(phi_real(ctx, {0.0, 0.5}) + 0.5 * std::log(2.0)) < 1e-12);
  const Complex h = optimizer_h(ctx, {0.0, 0.5});
  CHECK(std::abs(h - Complex(std::sqrt(0.5), 0.0)) < 1e-12);
  for (const Case& c : kCases) {
    INFO("alpha = " << c.alpha << " p = " << c.p.to_string() << " q = " << c.q.to_string());
    const auto cx = OptimizerContext::build(c.p, c.q, Alpha(c.alpha));
    const StripPoint ia{0.0, c.alpha};
    CHECK(std::abs(phi_real(cx, ia) - cx.log_h_alpha) < 1e-12);
    CHECK(phi_imag(cx, ia) == 0.0);
    CHECK(std::abs(phi(cx, ia).imag()) < 1e-14);
    CHECK(std::abs(phi(cx, ia).real() - cx.log_h_alpha) < 1e-12);
  }
}

TEST_CASE("real and complex routes agree off the axis") {
  for (const Case& c : kCases) {
    const auto ctx = OptimizerContext::build(c.p, c.q, Alpha(c.alpha));
    for (StripPoint z : {StripPoint{0.3, 0.6}, StripPoint{-1.7, 0.15}, StripPoint{2.5, 0.85}}) {
      const Complex v = phi(ctx, z);
      CHECK(std::abs(v.real() - phi_real(ctx, z)) < 1e-11);
      CHECK(std::abs(v.imag() - phi_imag(ctx, z)) < 1e-10);
    }
  }
}

TEST_CASE("parts combine linearly") {
  const Alpha a(0.3);
  const Tolerance tol = OptimizerContext::default_tolerance();
  const StripPoint z{0.9, 0.4};
  const PhiParts parts = phi_parts(a, z, tol);
  const RealPhiParts rparts = phi_real_parts(a, z, tol);
  CHECK(std::abs(parts.bottom.real() - rparts.bottom) < 1e-12);
  CHECK(std::abs(parts.top.real() - rparts.top) < 1e-12);
  const auto ctx = OptimizerContext::build(kTwo, Exponent::from_p(4), a);
  CHECK(std::abs(combine(ctx.p, ctx.q, parts) - phi(ctx, z)) < 1e-15);
}

TEST_CASE("Cauchy-Riemann") {
  for (const Case& c : kCases) {
    const auto ctx = OptimizerContext::build(c.p, c.q, Alpha(c.alpha));
    CHECK(cauchy_riemann_residual(ctx, {0.2, 0.6}) < 1e-6);
    CHECK(cauchy_riemann_residual(ctx, {-1.1, 0.3}) < 1e-6);
  }
}

TEST_CASE("boundary moduli") {
  const auto ctx = OptimizerContext::build(kOne, kOne, Alpha(0.5));
  const BoundaryModuli bm = boundary_moduli(ctx, 0.0);
  CHECK(std::abs(bm.bottom - 1.0) < 1e-15);
  CHECK(std::abs(bm.top - 1.0) < 1e-15);
  // interior limit matches the closed form
  for (const Case& c : kCases) {
    const auto cx = OptimizerContext::build(c.p, c.q, Alpha(c.alpha));
    for (double x : {0.0, 0.8, -2.0}) {
      const BoundaryTrace tr = phi_boundary_trace(cx, x);
      const BoundaryModuli exact = boundary_moduli(cx, x);
      CHECK(std::abs(std::exp(tr.bottom.real()) - exact.bottom) < 1e-5);
      CHECK(std::abs(std::exp(tr.top.real()) - exact.top) < 1e-5);
    }
  }
}

TEST_CASE("Neville extrapolation is exact on polynomials") {
  const std::vector<double> hs = {0.3, 0.2, 0.1};
  std::vector<double> v;
  for (double h : hs) v.push_back(2.0 - 3.0 * h + 5.0 * h * h);
  CHECK(std::abs(extrapolate_to_zero(hs, v) - 2.0) < 1e-13);
  CHECK_THROWS_AS(extrapolate_to_zero(hs, {1.0, 2.0}), DomainError);
}

TEST_CASE("norm identities") {
  for (const Case& c : kCases) {
    INFO("alpha = " << c.alpha << " p = " << c.p.to_string() << " q = " << c.q.to_string());
    const auto ctx = OptimizerContext::build(c.p, c.q, Alpha(c.alpha));
    const OptimizerNorms n = optimizer_norms(ctx);
    CHECK(std::abs(ctx.kappa - 1.0) < 1e-8);
    CHECK(ctx.c > 0.0);
    CHECK(std::abs(n.h0_p - 1.0) < 1e-7);
    CHECK(std::abs(n.h1_q - 1.0) < 1e-7);
    const double h = std::exp(ctx.log_h_alpha);
    CHECK(std::abs(h / (std::pow(n.h0_p, 1 - c.alpha) * std::pow(n.h1_q, c.alpha)) - h) < 1e-6);
    CHECK(std::abs(dual_objective(ctx, n) - h) < 1e-6);
    // ||h_0||_p = kappa^{1/p}
    CHECK(std::abs(n.h0_p - std::pow(ctx.kappa, c.p.recip())) < 1e-6);
    // ||h~_1||_q = (alpha kappa / (1 - alpha))^{1/q} c^{1/q*}; it degenerates at q = 1
    if (c.q.recip() < 1.0) {
      const double rhs =
          std::pow(c.alpha * ctx.kappa / (1 - c.alpha), c.q.recip()) * std::pow(ctx.c, c.q.conj_recip());
      CHECK(std::abs(n.h1_tilde_q - rhs) < 1e-6 * std::max(1.0, rhs));
    }
  }
}

TEST_CASE("Euler-Lagrange residuals") {
  auto ctx = OptimizerContext::build(kOne, kOne, Alpha(0.5));
  for (double x : {0.0, 1.0, 2.0}) {
    const ELResiduals r = el_residuals(ctx, x);
    CHECK(r.r0 < 1e-6);
    CHECK(r.r1 < 1e-6);
  }
  ctx = OptimizerContext::build(kTwo, kTwo, Alpha(0.3));
  const ELResiduals r = el_residuals(ctx, 0.7);
  CHECK(r.r0 < 1e-6);
  CHECK(r.r1 < 1e-6);
  // the plain phase convention holds as well; the conjugated one does not
  CHECK(r.phase0_plain < 1e-6);
  CHECK(r.phase1_plain < 1e-6);
  CHECK(r.phase0_conj > 1e-3);
}

TEST_CASE("product formula") {
  auto ctx = OptimizerContext::build(kOne, kInf, Alpha(0.5));
  CHECK(product_residual(ctx, {0.5, 0.25}) < 1e-8);
  for (const Case& c : kCases) {
    const auto cx = OptimizerContext::build(c.p, c.q, Alpha(c.alpha));
    CHECK(product_residual(cx, {0.3, c.alpha}) < 1e-8);
    const Complex ht = optimizer_h_tilde(cx, {0.0, c.alpha});
    CHECK(std::abs(ht - Complex(cx.kappa / (1 - c.alpha), 0.0)) < 1e-10);
  }
}

TEST_CASE("dual m near its pole") {
  for (const Case& c : kCases) {
    const auto ctx = OptimizerContext::build(c.p, c.q, Alpha(c.alpha));
    for (double r : {1e-4, 5e-4}) {
      for (double th : {0.3, 2.0, 4.1}) {
        const StripPoint z{r * std::cos(th), -c.alpha + r * std::sin(th)};
        CHECK(std::abs(dual_m_regular_part(ctx, z)) < 1e3);
        // the cancelled form agrees with the plain quotient away from rounding trouble
        const Complex direct = dual_m(ctx, z);
        CHECK(std::isfinite(direct.real()));
      }
    }
    // outside the cancellation disk the two forms agree
    const StripPoint w{0.01, -c.alpha + 0.01};
    const Complex plain = dual_m(ctx, w);
    const Complex split = poisson_complex(Alpha(c.alpha), w) + dual_m_regular_part(ctx, w);
    CHECK(std::abs(plain - split) < 1e-8 * std::abs(plain));
  }
}

TEST_CASE("Blaschke factorization") {
  for (const Case& c : kCases) {
    INFO("alpha = " << c.alpha << " p = " << c.p.to_string() << " q = " << c.q.to_string());
    const auto ctx = OptimizerContext::build(c.p, c.q, Alpha(c.alpha));
    const double s = std::sin(kPi * c.alpha);
    CHECK(std::abs(blaschke_g(ctx, {0.0, c.alpha}) * (4.0 * s) - ctx.kappa) < 1e-6);
    // |B| = 1 on the boundary, so g_0 and m_0 share their modulus
    for (double x : {0.0, 0.7, -3.0}) {
      const double gm = std::abs(blaschke_g_boundary(ctx, x));
      const double mm = dual_boundary_moduli(ctx, x).bottom;
      CHECK(std::abs(gm - mm) < 1e-6 * std::max(1.0, mm));
    }
  }
  // the modulus of g_0 integrates to the same norm as m_0
  const auto ctx = OptimizerContext::build(kTwo, kTwo, Alpha(0.3));
  // |m_0| = (P_alpha / (1 - alpha))^{1/2} <= 1.1 e^{-pi|x|/2} / 0.7^{1/2} beyond |x| = 1
  LineFunction g0{[&](double x) { return std::abs(blaschke_g_boundary(ctx, x)); },
                  Envelope{kPi / 2, 0.0, 1.0, 2.0, 0.0}, {0.0}};
  const double gnorm = lp_norm(g0, Exponent::from_p(2), Tolerance{1e-10, 1e-10});
  CHECK(std::abs(gnorm - optimizer_norms(ctx).m0_pstar) < 1e-8);
}

TEST_CASE("decay") {
  const auto ctx = OptimizerContext::build(kOne, kInf, Alpha(0.5));
  CHECK(std::abs(decay_limit(ctx, 0.5) - 0.5 * std::log(2.0)) < 1e-15);
  CHECK(std::abs(decay_defect(ctx, 35.0, 0.5) - 0.5 * std::log(2.0)) < 1e-4);
  for (const Case& c : kCases) {
    const auto cx = OptimizerContext::build(c.p, c.q, Alpha(c.alpha));
    for (double y : {0.2, 0.5, 0.8}) {
      CHECK(std::abs(decay_defect(cx, 30.0, y) - decay_limit(cx, y)) < 1e-4);
      CHECK(std::abs(decay_defect(cx, 4.0, y)) < 5.0);
    }
  }
}

TEST_CASE("domain errors") {
  const auto ctx = OptimizerContext::build(kTwo, kTwo, Alpha(0.5));
  CHECK_THROWS_AS(phi_real(ctx, {0.0, 0.0}), DomainError);
  CHECK_THROWS_AS(phi(ctx, {0.0, 1.0}), DomainError);
  CHECK_THROWS_AS(optimizer_h(ctx, {0.0, 1.5}), DomainError);
}
