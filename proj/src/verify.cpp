// Copyright 2026 The threelines Authors
// SPDX-License-Identifier: Apache-2.0

#include "threelines/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <random>

#include "threelines/errors.hpp"
#include "threelines/kernels.hpp"
#include "threelines/lieb_thirring.hpp"
#include "threelines/optimizers.hpp"
#include "threelines/parallel.hpp"
#include "threelines/quadrature.hpp"
#include "threelines/special.hpp"
#include "threelines/three_lines.hpp"

namespace threelines {

namespace {

constexpr std::uint64_t kSeed = 0x7417e5u;

struct GridExponent {
  Exponent e;
  const char* label;
};

std::vector<GridExponent> labelled_exponents() {
  return {{Exponent::from_p(1), "1"},
          {Exponent::parse("4/3"), "4/3"},
          {Exponent::from_p(2), "2"},
          {Exponent::from_p(4), "4"},
          {Exponent::infinity(), "inf"}};
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

struct GridPoint {
  GridExponent p;
  GridExponent q;
  double alpha;
  std::size_t alpha_index;

  std::string label() const {
    return std::string("p=") + p.label + ",q=" + q.label + ",alpha=" + fmt(alpha);
  }
};

std::vector<GridPoint> full_grid() {
  std::vector<GridPoint> out;
  const auto ex = labelled_exponents();
  const auto as = grid_alphas();
  for (std::size_t k = 0; k < as.size(); ++k) {
    for (const auto& p : ex) {
      for (const auto& q : ex) out.push_back({p, q, as[k], k});
    }
  }
  return out;
}

// Running worst case of one check over a grid.
class Worst {
 public:
  Worst(std::string name, double gate, std::optional<double> target = std::nullopt, bool exact = false)
      : name_(std::move(name)), gate_(gate), target_(target), exact_(exact) {}

  void add(double value, double defect, const std::string& where) {
    if (std::isnan(defect)) defect = std::numeric_limits<double>::infinity();
    if (!seen_ || defect > defect_) {
      seen_ = true;
      value_ = value;
      defect_ = defect;
      where_ = where;
    }
  }
  void add_target(double value, double target, const std::string& where) {
    add(value, std::abs(value - target), where);
  }

  CheckResult result(bool gated = true) const {
    CheckResult r;
    r.name = name_;
    r.value = value_;
    r.target = target_;
    r.defect = seen_ ? defect_ : 0.0;
    r.gate = gate_;
    r.pass = exact_ ? r.defect == 0.0 : r.defect < gate_;
    r.gated = gated;
    r.where = where_;
    return r;
  }

 private:
  std::string name_;
  double gate_;
  std::optional<double> target_;
  bool exact_;
  bool seen_ = false;
  double value_ = 0.0;
  double defect_ = 0.0;
  std::string where_;
};

CheckResult bracket_check(std::string name, double value, double lo, double hi) {
  CheckResult r;
  r.name = std::move(name);
  r.value = value;
  r.defect = value < lo ? lo - value : (value > hi ? value - hi : 0.0);
  r.gate = 0.0;
  r.pass = value >= lo && value <= hi;
  r.where = "[" + fmt(lo) + ", " + fmt(hi) + "]";
  return r;
}

CheckResult flag_check(std::string name, bool value, std::string where) {
  CheckResult r;
  r.name = std::move(name);
  r.value = value ? 1.0 : 0.0;
  r.pass = true;
  r.gated = false;
  r.where = std::move(where);
  return r;
}

Tolerance capped(const VerifyOptions& opts, double need) {
  const double t = std::min(opts.tol, need);
  return Tolerance{t, t};
}

Tolerance phi_tolerance(const VerifyOptions& opts) {
  Tolerance t = OptimizerContext::default_tolerance();
  t.abs_tol = std::min(t.abs_tol, opts.tol);
  t.rel_tol = std::min(t.rel_tol, opts.tol);
  return t;
}

// Contexts for the whole grid, built in parallel, in grid order.
std::vector<OptimizerContext> build_contexts(const std::vector<GridPoint>& grid, const Tolerance& tol) {
  // contexts have no default state, so the parallel map goes through optional
  const auto built = parallel::map_indices<std::optional<OptimizerContext>>(grid.size(), [&](std::size_t i) {
    return std::optional{OptimizerContext::build(grid[i].p.e, grid[i].q.e, Alpha(grid[i].alpha), tol)};
  });
  std::vector<OptimizerContext> out;
  out.reserve(built.size());
  for (const auto& c : built) out.push_back(*c);
  return out;
}

// ---- acceptance criteria ----

SectionReport criterion_1(const VerifyOptions& opts) {
  SectionReport s{"criterion_1", "Hadamard corner H_inf,inf = 1", {}, 1000.0};
  Worst closed("H_inf_inf.closed_form", 0.0, 1.0, true);
  Worst quad("H_inf_inf.quadrature", 1e-12, 1.0);
  const Exponent inf = Exponent::infinity();
  for (double a : grid_alphas()) {
    const std::string w = "alpha=" + fmt(a);
    closed.add_target(log_H(inf, inf, Alpha(a)).h, 1.0, w);
    quad.add_target(log_H(inf, inf, Alpha(a), Route::Quadrature, capped(opts, 1e-12)).h, 1.0, w);
  }
  s.checks = {closed.result(), quad.result()};
  return s;
}

SectionReport criterion_2(const VerifyOptions& opts) {
  SectionReport s{"criterion_2", "duality relation on the grid, both routes", {}, 10000.0};
  const auto grid = full_grid();
  const Tolerance tol = capped(opts, 1e-12);
  const auto defects = parallel::map_indices<std::pair<double, double>>(grid.size(), [&](std::size_t i) {
    const auto& g = grid[i];
    return std::pair{duality_defect(g.p.e, g.q.e, Alpha(g.alpha)),
                     duality_defect(g.p.e, g.q.e, Alpha(g.alpha), Route::Quadrature, tol)};
  });
  Worst closed("duality_defect.closed_form", 1e-10);
  Worst quad("duality_defect.quadrature", 1e-10);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    closed.add(defects[i].first, defects[i].first, grid[i].label());
    quad.add(defects[i].second, defects[i].second, grid[i].label());
  }
  s.checks = {closed.result(), quad.result()};
  return s;
}

SectionReport criterion_3(const VerifyOptions& opts) {
  SectionReport s{"criterion_3", "closed form versus quadrature", {}, 30000.0};
  const auto grid = full_grid();
  const Tolerance tol = capped(opts, 1e-10);
  const auto vals = parallel::map_indices<std::pair<double, double>>(grid.size(), [&](std::size_t i) {
    const auto& g = grid[i];
    return std::pair{log_H(g.p.e, g.q.e, Alpha(g.alpha)).h,
                     log_H(g.p.e, g.q.e, Alpha(g.alpha), Route::Quadrature, tol).h};
  });
  Worst w("route_agreement", 1e-8);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    w.add(vals[i].second, std::abs(vals[i].first - vals[i].second), grid[i].label());
  }
  s.checks = {w.result()};
  return s;
}

SectionReport criterion_4(const VerifyOptions&) {
  SectionReport s{"criterion_4", "spot values", {}, 0.0};
  const Exponent inf = Exponent::infinity();
  const Exponent one = Exponent::from_p(1);
  const Alpha half(0.5);
  auto spot = [&](const char* name, const Exponent& p, const Exponent& q, double target) {
    Worst w(name, 1e-10, target);
    w.add_target(log_H(p, q, half).h, target, "alpha=0.5");
    return w.result();
  };
  s.checks = {spot("H_inf_2(1/2)", inf, Exponent::from_p(2), std::pow(2.0, -0.25)),
              spot("H_1_1(1/2)", one, one, 0.5), spot("H_1_inf(1/2)", one, inf, std::sqrt(0.5))};
  return s;
}

SectionReport criterion_5(const VerifyOptions& opts) {
  SectionReport s{"criterion_5", "log-linear relation on random tuples", {}, 10000.0};
  std::mt19937_64 rng(kSeed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> alpha(0.05, 0.95);
  struct Tuple {
    Exponent p0, q0, p1, q1;
    double t;
    double a;
  };
  std::vector<Tuple> tuples;
  for (int k = 0; k < 50; ++k) {
    Tuple tp{Exponent::from_recip(unit(rng)), Exponent::from_recip(unit(rng)), Exponent::from_recip(unit(rng)),
             Exponent::from_recip(unit(rng)), unit(rng), alpha(rng)};
    tuples.push_back(tp);
  }
  const Tolerance tol = capped(opts, 1e-12);
  const auto d = parallel::map_indices<std::pair<double, double>>(tuples.size(), [&](std::size_t i) {
    const Tuple& t = tuples[i];
    return std::pair{loglinear_defect(t.p0, t.q0, t.p1, t.q1, t.t, Alpha(t.a)),
                     loglinear_defect(t.p0, t.q0, t.p1, t.q1, t.t, Alpha(t.a), Route::Quadrature, tol)};
  });
  Worst closed("loglinear_defect.closed_form", 1e-10);
  Worst quad("loglinear_defect.quadrature", 1e-10);
  for (std::size_t i = 0; i < d.size(); ++i) {
    const std::string w = "tuple " + std::to_string(i);
    closed.add(d[i].first, d[i].first, w);
    quad.add(d[i].second, d[i].second, w);
  }
  s.checks = {closed.result(), quad.result()};
  return s;
}

SectionReport criterion_6(const VerifyOptions& opts) {
  SectionReport s{"criterion_6", "optimizer norms, value at i alpha, sup location, kappa", {}, 60000.0};
  const Tolerance tol = phi_tolerance(opts);
  const auto grid = full_grid();
  const auto alphas = grid_alphas();
  const auto contexts = build_contexts(grid, tol);
  const auto norms = parallel::map_indices<OptimizerNorms>(
      contexts.size(), [&](std::size_t i) { return optimizer_norms(contexts[i]); });

  // Re phi on the line Im z = alpha, both parts, on the scan grid; shared by all (p, q)
  constexpr double kWindow = 20.0;
  constexpr std::size_t kNodes = kSupScanIntervals + 1;
  const auto table = parallel::map_indices<RealPhiParts>(alphas.size() * kNodes, [&](std::size_t i) {
    const double a = alphas[i / kNodes];
    const double x = sup_scan_node(-kWindow, kWindow, static_cast<int>(i % kNodes));
    return phi_real_parts(Alpha(a), {x, a}, tol);
  });

  Worst h0("h0_norm", 1e-7, 1.0);
  Worst h1("h1_norm", 1e-7, 1.0);
  Worst hia("h(i alpha) - H", 1e-8);
  Worst sup("sup|h_alpha| - h(i alpha)", 1e-6);
  Worst kap("kappa", 1e-8, 1.0);
  Worst arg("argmax |h_alpha|", 1e-6, 0.0);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const OptimizerContext& ctx = contexts[i];
    const std::string w = grid[i].label();
    const double a = grid[i].alpha;
    const RealPhiParts* row = table.data() + grid[i].alpha_index * kNodes;
    h0.add_target(norms[i].h0_p, 1.0, w);
    h1.add_target(norms[i].h1_q, 1.0, w);
    const double at_ia = std::exp(combine(ctx.p, ctx.q, row[kSupScanIntervals / 2]));
    hia.add(at_ia, std::abs(at_ia - std::exp(ctx.log_h_alpha)), w);
    kap.add_target(ctx.kappa, 1.0, w);
    const double step = 2.0 * kWindow / kSupScanIntervals;
    LineFunction habs{[&, row, a](double x) {
                        const double k = std::round((x + kWindow) / step);
                        if (k >= 0 && k < static_cast<double>(kNodes) &&
                            sup_scan_node(-kWindow, kWindow, static_cast<int>(k)) == x) {
                          return std::exp(combine(ctx.p, ctx.q, row[static_cast<std::size_t>(k)]));
                        }
                        return std::exp(combine(ctx.p, ctx.q, phi_real_parts(Alpha(a), {x, a}, tol)));
                      },
                      Envelope{}, {}};
    const SupResult r = sup_scan_interval(habs, -kWindow, kWindow, Tolerance{1e-9, 1e-9});
    sup.add(r.max, std::abs(r.max - at_ia), w);
    // |h| is constant at the Hadamard corner, so any argmax is right there
    if (!(ctx.p.is_infinite() && ctx.q.is_infinite())) arg.add_target(r.argmax, 0.0, w);
  }
  s.checks = {h0.result(), h1.result(), hia.result(), sup.result(), kap.result(), arg.result(false)};
  return s;
}

SectionReport criterion_7(const VerifyOptions& opts) {
  SectionReport s{"criterion_7", "Euler-Lagrange, product formula, Cauchy-Riemann", {}, 0.0};
  const Tolerance tol = phi_tolerance(opts);
  const auto grid = full_grid();
  const auto alphas = grid_alphas();
  const auto contexts = build_contexts(grid, tol);

  const std::vector<double> el_x = {0.0, 0.5, -0.5, 1.0, -1.0, 2.0, -2.0, 4.0, -4.0};
  std::vector<StripPoint> cr_points;
  for (double x : {-2.0, -1.0, 0.0, 1.0, 2.0}) {
    for (double y : {0.1, 0.3, 0.5, 0.7, 0.9}) cr_points.push_back({x, y});
  }
  const auto traces = parallel::map_indices<BoundaryTraceParts>(alphas.size() * el_x.size(), [&](std::size_t i) {
    return phi_boundary_trace_parts(Alpha(alphas[i / el_x.size()]), el_x[i % el_x.size()], tol);
  });
  const auto crs = parallel::map_indices<CauchyRiemannParts>(alphas.size() * cr_points.size(), [&](std::size_t i) {
    return cauchy_riemann_parts(Alpha(alphas[i / cr_points.size()]), cr_points[i % cr_points.size()], tol);
  });

  std::vector<StripPoint> product_points = {{0.5, 0.25}, {0.3, 0.0}, {-1.2, 0.6}, {2.0, 0.1}, {-0.7, 0.9}};
  const auto products = parallel::map_indices<std::vector<double>>(grid.size(), [&](std::size_t i) {
    std::vector<double> out;
    for (StripPoint z : product_points) {
      if (z.y == 0.0) z.y = grid[i].alpha;  // i alpha + 0.3
      out.push_back(product_residual(contexts[i], z));
    }
    return out;
  });

  Worst r0("el_r0", 1e-5);
  Worst r1("el_r1", 1e-5);
  Worst plain("el_phase_plain", 1e-5);
  Worst conj("el_phase_conjugated", 1e-5);
  Worst prod("product_residual", 1e-8);
  Worst cr("cauchy_riemann", 1e-6);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const OptimizerContext& ctx = contexts[i];
    const std::size_t k = grid[i].alpha_index;
    for (std::size_t j = 0; j < el_x.size(); ++j) {
      const std::string w = grid[i].label() + ",x=" + fmt(el_x[j]);
      const ELResiduals e =
          el_residuals_from_trace(ctx, el_x[j], combine(ctx.p, ctx.q, traces[k * el_x.size() + j]));
      r0.add(e.r0, e.r0, w);
      r1.add(e.r1, e.r1, w);
      const double pl = std::max(e.phase0_plain, e.phase1_plain);
      const double cj = std::max(e.phase0_conj, e.phase1_conj);
      plain.add(pl, pl, w);
      conj.add(cj, cj, w);
    }
    for (double v : products[i]) prod.add(v, v, grid[i].label());
    for (std::size_t j = 0; j < cr_points.size(); ++j) {
      const CauchyRiemannParts& d = crs[k * cr_points.size() + j];
      const double v = std::abs(combine(ctx.p, ctx.q, PhiParts{d.bottom, d.top}));
      cr.add(v, v, grid[i].label() + ",z=" + fmt(cr_points[j].x) + "+" + fmt(cr_points[j].y) + "i");
    }
  }
  s.checks = {r0.result(), r1.result(), prod.result(), cr.result(), plain.result(false), conj.result(false)};
  return s;
}

SectionReport criterion_8(const VerifyOptions& opts) {
  SectionReport s{"criterion_8", "zero duality gap", {}, 0.0};
  const Tolerance tol = phi_tolerance(opts);
  auto grid = full_grid();
  std::erase_if(grid, [](const GridPoint& g) { return g.p.e.is_infinite(); });
  const auto gaps = parallel::map_indices<std::pair<double, double>>(grid.size(), [&](std::size_t i) {
    const auto ctx = OptimizerContext::build(grid[i].p.e, grid[i].q.e, Alpha(grid[i].alpha), tol);
    return std::pair{dual_objective(ctx), std::exp(ctx.log_h_alpha)};
  });
  Worst gap("dual_objective - H", 1e-6);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    gap.add(gaps[i].first, std::abs(gaps[i].first - gaps[i].second), grid[i].label());
  }
  Worst corner("dual_objective(inf,inf,1/2)", 1e-8, 1.0);
  const auto ctx = OptimizerContext::build(Exponent::infinity(), Exponent::infinity(), Alpha(0.5), tol);
  corner.add_target(dual_objective(ctx), 1.0, "alpha=0.5");
  s.checks = {gap.result(), corner.result()};
  return s;
}

SectionReport criterion_9(const VerifyOptions& opts) {
  SectionReport s{"criterion_9", "strip kernels", {}, 0.0};
  Worst mass("integral of P_y - (1 - y)", 1e-12);
  Worst ft("poisson_ft - quadrature", 1e-10);
  Worst mod("||B| - 1| on the boundary", 1e-12);
  Worst lim("P B limit at i alpha", 1e-6);
  const Tolerance tol = capped(opts, 1e-13);
  for (double y : grid_alphas()) {
    LineFunction f{[y](double x) { return poisson(y, x); }, Envelope{kPi, 0.0, 1.0, 1.1, 0.0}, {0.0}};
    const double m = integrate_line(f, tol).value;
    mass.add(m, std::abs(m - (1.0 - y)), "y=" + fmt(y));
  }
  std::vector<std::pair<double, double>> yk;
  for (double y : grid_alphas()) {
    for (int j = -20; j <= 20; ++j) yk.push_back({y, 0.5 * j});
  }
  const auto fts = parallel::map_indices<double>(yk.size(), [&](std::size_t i) {
    const auto [y, k] = yk[i];
    LineFunction f{[y, k](double x) { return poisson(y, x) * std::cos(k * x); }, Envelope{kPi, 0.0, 1.0, 1.1, 0.0},
                   {0.0}};
    return integrate_line(f, tol).value;
  });
  for (std::size_t i = 0; i < yk.size(); ++i) {
    const double v = poisson_ft(yk[i].first, yk[i].second);
    ft.add(v, std::abs(v - fts[i]), "y=" + fmt(yk[i].first) + ",k=" + fmt(yk[i].second));
  }
  for (double a : grid_alphas()) {
    const Alpha al(a);
    for (int j = -2000; j <= 2000; ++j) {
      const double x = 0.01 * j;
      for (double y : {0.0, 1.0}) {
        const double v = std::abs(blaschke(al, {x, y}));
        mod.add(v, std::abs(v - 1.0), "alpha=" + fmt(a) + ",x=" + fmt(x) + ",y=" + fmt(y));
      }
    }
    // the first-order term cancels in the four-point average around the zero
    const double target = 1.0 / (4.0 * std::sin(kPi * a));
    Complex mean = 0.0;
    for (int k = 0; k < 4; ++k) {
      const Complex z = Complex(0.0, a) + std::polar(1e-4, kPi / 4 + k * kPi / 2);
      const StripPoint sp = StripPoint::from_complex(z);
      mean += poisson_complex(al, sp) * blaschke(al, sp) / 4.0;
    }
    lim.add(std::abs(mean), std::abs(mean - target), "alpha=" + fmt(a));
  }
  s.checks = {mass.result(), ft.result(), mod.result(), lim.result()};
  return s;
}

// Catalan's constant from the central binomial series, independent of the Clausen code.
double catalan_oracle() {
  double sum = 0.0;
  double ratio = 1.0;  // (n!)^2 / (2n)!
  for (int n = 0; n < 60; ++n) {
    const double odd = 2.0 * n + 1.0;
    sum += ratio / (odd * odd);
    ratio *= (n + 1.0) / (2.0 * (2.0 * n + 1.0));
  }
  return kPi / 8.0 * std::log(2.0 + std::sqrt(3.0)) + 3.0 / 8.0 * sum;
}

SectionReport criterion_10(const VerifyOptions&) {
  SectionReport s{"criterion_10", "special functions", {}, 0.0};
  Worst ids("dilog identity residuals", 1e-12);
  std::mt19937_64 rng(kSeed + 10);
  std::uniform_real_distribution<double> r(0.0, 1.0);
  std::uniform_real_distribution<double> th(-kPi, kPi);
  for (int k = 0; k < 100; ++k) {
    const Complex z = std::polar(std::sqrt(r(rng)), th(rng));
    const DilogResiduals d = dilog_identity_residuals(z);
    const std::string w = "z=" + fmt(z.real()) + fmt(z.imag()) + "i";
    for (const auto& v : {d.inversion, d.reflection, d.duplication}) {
      if (v) ids.add(*v, *v, w);
    }
  }
  Worst cat("clausen2(pi/2) - Catalan", 1e-13, catalan_oracle());
  cat.add_target(clausen2(kPi / 2), catalan_oracle(), "theta=pi/2");
  const double li_half = kPi * kPi / 12.0 - 0.5 * std::log(2.0) * std::log(2.0);
  Worst li("Li2(1/2)", 1e-13, li_half);
  li.add_target(dilog(Complex(0.5, 0.0)).real(), li_half, "z=1/2");
  s.checks = {ids.result(), cat.result(), li.result()};
  return s;
}

SectionReport criterion_11(const VerifyOptions&) {
  SectionReport s{"criterion_11", "Lieb-Thirring and CLR bounds", {}, 0.0};
  s.checks.push_back(bracket_check("LT(d=1,s=1)", ratio_bound({1, 1.0, LTKind::LT}), 1.44, 1.4475));
  Worst clr("CLR(alpha=1/2)", 1e-10, 2.0 * kPi);
  clr.add_target(ratio_bound(LTKind::CLR, Alpha(0.5)), 2.0 * kPi, "alpha=0.5");
  s.checks.push_back(clr.result());
  const AsymptotePairing pr = asymptote_pairing({1e-3});
  Worst set("asymptote set match (relative)", 0.01);
  set.add(pr.clr.samples[0].bound, pr.clr.relative_gap, "CLR, alpha=1e-3");
  set.add(pr.lt.samples[0].bound, pr.lt.relative_gap, "LT, alpha=1e-3");
  CheckResult cover = set.result();
  cover.pass = cover.pass && pr.covers_both;
  s.checks.push_back(cover);
  s.checks.push_back(flag_check("asymptote pairing: CLR -> 4 pi^2 e^-2", pr.clr_to_e2,
                                pr.quoted_pairing_disagrees ? "differs from the quoted pairing" : "as quoted"));
  return s;
}

SectionReport criterion_12(const VerifyOptions& opts) {
  SectionReport s{"criterion_12", "decay of Re phi", {}, 0.0};
  const Tolerance tol = phi_tolerance(opts);
  const auto grid = full_grid();
  const auto alphas = grid_alphas();
  const std::vector<double> ys = {0.25, 0.5, 0.75};
  std::vector<double> xs;
  for (int j = 0; j <= 80; ++j) xs.push_back(0.5 * j);
  xs.push_back(35.0);
  const std::size_t per_alpha = ys.size() * xs.size();
  const auto parts = parallel::map_indices<RealPhiParts>(alphas.size() * per_alpha, [&](std::size_t i) {
    const std::size_t r = i % per_alpha;
    return phi_real_parts(Alpha(alphas[i / per_alpha]), {xs[r % xs.size()], ys[r / xs.size()]}, tol);
  });
  const auto contexts = build_contexts(grid, tol);
  Worst lim("|d(35, y) - L(y)|", 1e-4);
  Worst bound("max |d| on [0, 40]", 5.0);
  for (std::size_t gi = 0; gi < grid.size(); ++gi) {
    const GridPoint& g = grid[gi];
    const OptimizerContext& ctx = contexts[gi];
    for (std::size_t yi = 0; yi < ys.size(); ++yi) {
      const double y = ys[yi];
      const double slope = kPi * ((1.0 - y) * g.p.e.recip() + y * g.q.e.recip());
      for (std::size_t xi = 0; xi < xs.size(); ++xi) {
        const double x = xs[xi];
        const double d = combine(g.p.e, g.q.e, parts[g.alpha_index * per_alpha + yi * xs.size() + xi]) + slope * x;
        const std::string w = g.label() + ",x=" + fmt(x) + ",y=" + fmt(y);
        if (xi + 1 == xs.size()) {
          lim.add(d, std::abs(d - decay_limit(ctx, y)), w);
        } else {
          bound.add(d, std::abs(d), w);
        }
      }
    }
  }
  s.checks = {lim.result(), bound.result()};
  return s;
}

// ---- module invariant suites ----

SectionReport suite_domain(const VerifyOptions&) {
  SectionReport s{"domain", "exponent conjugation and interpolation", {}, 0.0};
  Worst inv("conjugate involution", 0.0, std::nullopt, true);
  Worst ends("interpolation endpoints", 0.0, std::nullopt, true);
  std::vector<Exponent> es;
  for (int k = 0; k <= 64; ++k) es.push_back(Exponent::from_recip(k / 64.0));
  for (const char* t : {"4/3", "3/2", "7/5", "5/4", "inf", "1", "2", "1.1"}) es.push_back(Exponent::parse(t));
  for (const auto& e : es) {
    const double d = std::abs(conjugate(conjugate(e)).recip() - e.recip());
    inv.add(d, d, e.to_string());
    for (const auto& f : es) {
      const double d0 = std::abs(interpolate_exponent(e, f, 0.0).recip() - e.recip());
      const double d1 = std::abs(interpolate_exponent(e, f, 1.0).recip() - f.recip());
      ends.add(std::max(d0, d1), std::max(d0, d1), e.to_string() + " -> " + f.to_string());
    }
  }
  s.checks = {inv.result(), ends.result()};
  return s;
}

SectionReport suite_special(const VerifyOptions&) {
  SectionReport s{"scalar_special", "dilogarithm and Clausen function", {}, 0.0};
  Worst schwarz("Schwarz symmetry", 1e-13);
  Worst odd("clausen2 oddness", 1e-13);
  Worst per("clausen2 periodicity", 1e-12);
  Worst cons("clausen2 vs Im Li2(e^{i theta})", 1e-12);
  std::mt19937_64 rng(kSeed + 20);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int k = 0; k < 100; ++k) {
    const Complex z(u(rng), u(rng));
    const double d = std::abs(dilog(std::conj(z)) - std::conj(dilog(z)));
    schwarz.add(d, d, "z=" + fmt(z.real()) + "," + fmt(z.imag()));
  }
  for (int k = 0; k <= 400; ++k) {
    const double t = -10.0 + 0.05 * k;
    const std::string w = "theta=" + fmt(t);
    const double o = std::abs(clausen2(-t) + clausen2(t));
    odd.add(o, o, w);
    const double p = std::abs(clausen2(t + 2 * kPi) - clausen2(t));
    per.add(p, p, w);
    if (std::abs(std::remainder(t, 2 * kPi)) > 1e-3) {
      const double c = std::abs(clausen2(t) - dilog(std::polar(1.0, t)).imag());
      cons.add(c, c, w);
    }
  }
  s.checks = {schwarz.result(), odd.result(), per.result(), cons.result()};
  return s;
}

SectionReport suite_quadrature(const VerifyOptions& opts) {
  SectionReport s{"quadrature", "linearity and symmetry of the line integral", {}, 0.0};
  const Tolerance tol = capped(opts, 1e-12);
  // defects are measured in units of the combined tolerance budget, so the gate is 1
  Worst lin("linearity / 2-tolerance budget", 1.0);
  Worst even("even symmetry / 2-tolerance budget", 1.0);
  std::mt19937_64 rng(kSeed + 30);
  std::uniform_real_distribution<double> u(0.1, 0.9);
  std::uniform_real_distribution<double> c(-2.0, 2.0);
  auto budget = [&](double v) { return 2.0 * (tol.abs_tol + tol.rel_tol * std::abs(v)); };
  for (int k = 0; k < 10; ++k) {
    const double y = u(rng);
    const double w = u(rng) * 3.0;
    const double a = c(rng);
    const double b = c(rng);
    const std::string where = "y=" + fmt(y) + ",w=" + fmt(w) + ",a=" + fmt(a) + ",b=" + fmt(b);
    const Envelope env{kPi, 0.0, 1.0, 1.1, 0.0};
    LineFunction f{[y](double x) { return poisson(y, x); }, env, {0.0}};
    LineFunction g{[y, w](double x) { return poisson(y, x) * std::cos(w * x); }, env, {0.0}};
    LineFunction h{[&](double x) { return a * f(x) + b * g(x); },
                   Envelope{kPi, 0.0, 1.0, 1.1 * (std::abs(a) + std::abs(b)), 0.0}, {0.0}};
    const double If = integrate_line(f, tol).value;
    const double Ig = integrate_line(g, tol).value;
    const double Ih = integrate_line(h, tol).value;
    const double d = std::abs(Ih - (a * If + b * Ig));
    lin.add(d, d / (budget(Ih) + std::abs(a) * budget(If) + std::abs(b) * budget(Ig)), where);
    const double X = truncation_radius(env, tol.abs_tol / 10);
    const double half = integrate_interval([&](double x) { return g(x); }, 0.0, X, tol).value;
    const double e = std::abs(Ig - 2.0 * half);
    even.add(e, e / (budget(Ig) + 2.0 * budget(half)), where);
  }
  s.checks = {lin.result(), even.result()};
  return s;
}

SectionReport suite_kernels(const VerifyOptions&) {
  SectionReport s{"strip_kernels", "reflected kernel identity", {}, 0.0};
  // scaled by max(1, |P|): near x = 0 the kernel reaches ~3 where one ulp is 4e-16,
  // and 1 - y itself is rounded
  Worst id("(Q_y - P_{1-y}) / max(1, P)", 1e-15);
  for (double y : grid_alphas()) {
    for (int j = -400; j <= 400; ++j) {
      const double x = 0.025 * j;
      const double ref = poisson(1.0 - y, x);
      const double d = std::abs(poisson_reflected(y, x) - ref);
      id.add(d, d / std::max(1.0, ref), "y=" + fmt(y) + ",x=" + fmt(x));
    }
  }
  s.checks = {id.result()};
  return s;
}

SectionReport suite_three_lines(const VerifyOptions&) {
  SectionReport s{"three_lines", "flip symmetry and log-linearity on the grid", {}, 0.0};
  const auto ex = labelled_exponents();
  Worst flip("flip symmetry", 1e-12);
  Worst lin("log-linearity (grid)", 1e-10);
  for (double a : grid_alphas()) {
    for (const auto& p : ex) {
      for (const auto& q : ex) {
        const std::string w = std::string("p=") + p.label + ",q=" + q.label + ",alpha=" + fmt(a);
        const double f = flip_defect(p.e, q.e, Alpha(a));
        flip.add(f, f, w);
        for (const auto& p1 : ex) {
          for (const auto& q1 : ex) {
            for (double t : {0.25, 0.5, 0.75}) {
              const double d = loglinear_defect(p.e, q.e, p1.e, q1.e, t, Alpha(a));
              lin.add(d, d, w + " -> p1=" + p1.label + ",q1=" + q1.label + ",t=" + fmt(t));
            }
          }
        }
      }
    }
  }
  s.checks = {flip.result(), lin.result()};
  return s;
}

SectionReport suite_optimizers(const VerifyOptions& opts) {
  SectionReport s{"optimizers", "ratio optimality and the pole of m", {}, 0.0};
  const Tolerance tol = phi_tolerance(opts);
  const auto grid = full_grid();
  const auto contexts = build_contexts(grid, tol);
  const auto rows = parallel::map_indices<std::pair<double, double>>(grid.size(), [&](std::size_t i) {
    const OptimizerContext& ctx = contexts[i];
    const OptimizerNorms n = optimizer_norms(ctx);
    const double a = grid[i].alpha;
    const double h = std::exp(phi_real(ctx, {0.0, a}));
    const double ratio = h / (std::pow(n.h0_p, 1.0 - a) * std::pow(n.h1_q, a));
    // m - P_alpha next to the pole
    double reg = 0.0;
    for (int k = 0; k < 4; ++k) {
      const Complex z = Complex(0.0, -a) + std::polar(5e-4, 0.3 + k * kPi / 2);
      reg = std::max(reg, std::abs(dual_m_regular_part(ctx, StripPoint::from_complex(z))));
    }
    return std::pair{ratio, reg};
  });
  Worst ratio("ratio |h(i alpha)| / norms - H", 1e-6);
  Worst pole("|m - P_alpha| near -i alpha", 1e3);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    ratio.add(rows[i].first, std::abs(rows[i].first - std::exp(contexts[i].log_h_alpha)), grid[i].label());
    pole.add(rows[i].second, rows[i].second, grid[i].label());
  }
  s.checks = {ratio.result(), pole.result()};
  return s;
}

SectionReport suite_lieb_thirring(const VerifyOptions&) {
  SectionReport s{"lieb_thirring", "ordering and continuity of the bounds", {}, 0.0};
  // signed margin; strictly negative everywhere passes
  Worst order("LT - CLR", 0.0);
  Worst cont("continuity", 1e-3);
  for (double a : grid_alphas()) {
    const std::string w = "alpha=" + fmt(a);
    const double lt = ratio_bound(LTKind::LT, Alpha(a));
    const double clr = ratio_bound(LTKind::CLR, Alpha(a));
    order.add(lt - clr, lt - clr, w);
    for (LTKind kind : {LTKind::CLR, LTKind::LT}) {
      const double d = std::abs(ratio_bound(kind, Alpha(a + 1e-6)) - ratio_bound(kind, Alpha(a)));
      cont.add(d, d, w + "," + to_string(kind));
    }
  }
  s.checks = {order.result(), cont.result()};
  return s;
}

using Runner = SectionReport (*)(const VerifyOptions&);

const std::vector<std::pair<std::string, Runner>>& suites() {
  static const std::vector<std::pair<std::string, Runner>> s = {
      {"domain", suite_domain},         {"scalar_special", suite_special},
      {"quadrature", suite_quadrature}, {"strip_kernels", suite_kernels},
      {"three_lines", suite_three_lines}, {"optimizers", suite_optimizers},
      {"lieb_thirring", suite_lieb_thirring},
  };
  return s;
}

SectionReport timed(Runner run, const VerifyOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  SectionReport r = run(opts);
  r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

bool SectionReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.gated || c.pass; });
}

std::vector<Exponent> grid_exponents() {
  std::vector<Exponent> out;
  for (const auto& g : labelled_exponents()) out.push_back(g.e);
  return out;
}

std::vector<double> grid_alphas() {
  std::vector<double> out;
  for (int k = 1; k <= 9; ++k) out.push_back(k / 10.0);
  return out;
}

SectionReport run_criterion(int id, const VerifyOptions& opts) {
  static const Runner runners[kCriterionCount] = {criterion_1, criterion_2,  criterion_3,  criterion_4,
                                                  criterion_5, criterion_6,  criterion_7,  criterion_8,
                                                  criterion_9, criterion_10, criterion_11, criterion_12};
  if (id < 1 || id > kCriterionCount) throw DomainError("criterion id must be 1.." + std::to_string(kCriterionCount));
  if (!(opts.tol > 0.0)) throw DomainError("verification tolerance must be positive");
  return timed(runners[id - 1], opts);
}

std::vector<std::string> module_suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, run] : suites()) out.push_back(name);
  return out;
}

SectionReport run_module_suite(const std::string& name, const VerifyOptions& opts) {
  if (!(opts.tol > 0.0)) throw DomainError("verification tolerance must be positive");
  for (const auto& [n, run] : suites()) {
    if (n == name) return timed(run, opts);
  }
  throw DomainError("unknown module suite '" + name + "'");
}

std::vector<SectionReport> verify_all(const VerifyOptions& opts) {
  std::vector<SectionReport> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, opts));
  for (const auto& name : module_suite_names()) out.push_back(run_module_suite(name, opts));
  return out;
}

}  // namespace threelines
