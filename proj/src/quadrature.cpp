// Copyright 2026 The threelines Authors
// SPDX-License-Identifier: Apache-2.0

#include "threelines/quadrature.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <queue>
#include <string>

#include "threelines/parallel.hpp"

namespace threelines {

namespace {

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 31>;
using Gauss = boost::math::quadrature::gauss<double, 15>;

// Initial panels are no longer than this before adaptive refinement starts.
constexpr double kMaxInitialPanel = 4.0;

double magnitude(double v) { return std::abs(v); }
double magnitude(Complex v) { return std::abs(v); }

template <class T>
struct Panel {
  double a;
  double b;
  T value;
  double err;
};

// Kronrod abscissae are listed from 0 outward; the even ones are the Gauss nodes.
template <class T, class F>
Panel<T> evaluate_panel(const F& f, double a, double b) {
  static const auto& xk = Kronrod::abscissa();
  static const auto& wk = Kronrod::weights();
  static const auto& wg = Gauss::weights();
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const T f0 = f(mid);
  T kronrod = wk[0] * f0;
  T gauss = wg[0] * f0;
  for (std::size_t i = 1; i < xk.size(); ++i) {
    const double dx = half * xk[i];
    const T pair = f(mid - dx) + f(mid + dx);
    kronrod += wk[i] * pair;
    if (i % 2 == 0) gauss += wg[i / 2] * pair;
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, magnitude(kronrod - gauss)};
}

constexpr long kEvalsPerPanel = 31;

template <class T, class F>
BasicQuadratureResult<T> adaptive(const F& f, double a, double b, const Tolerance& tol,
                                  const std::vector<double>& breakpoints) {
  if (!std::isfinite(a) || !std::isfinite(b)) throw NonFiniteError("integration limits must be finite");
  if (a == b) return {};
  if (a > b) {
    auto r = adaptive<T>(f, b, a, tol, breakpoints);
    r.value = -r.value;
    return r;
  }

  std::vector<double> cuts{a};
  std::vector<double> inner;
  for (double p : breakpoints) {
    if (p > a && p < b) inner.push_back(p);
  }
  std::sort(inner.begin(), inner.end());
  inner.erase(std::unique(inner.begin(), inner.end()), inner.end());
  inner.push_back(b);
  for (double next : inner) {
    const double lo = cuts.back();
    const int pieces = std::max(1, static_cast<int>(std::ceil((next - lo) / kMaxInitialPanel)));
    for (int k = 1; k < pieces; ++k) cuts.push_back(lo + (next - lo) * k / pieces);
    cuts.push_back(next);
  }

  std::vector<Panel<T>> panels;
  panels.reserve(cuts.size() + 2 * static_cast<std::size_t>(tol.max_refinements));
  auto by_error = [&panels](std::size_t i, std::size_t j) {
    if (panels[i].err != panels[j].err) return panels[i].err < panels[j].err;
    return i > j;
  };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(by_error)> heap(by_error);
  std::vector<std::size_t> frozen;

  T total{};
  double total_err = 0.0;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    panels.push_back(evaluate_panel<T>(f, cuts[k], cuts[k + 1]));
    total += panels.back().value;
    total_err += panels.back().err;
    heap.push(panels.size() - 1);
  }
  long evaluations = kEvalsPerPanel * static_cast<long>(panels.size());

  auto target = [&tol](const T& v) { return std::max(tol.abs_tol, tol.rel_tol * magnitude(v)); };

  int refinements = 0;
  while (!heap.empty() && total_err > target(total)) {
    const std::size_t worst = heap.top();
    const Panel<T> p = panels[worst];
    const double mid = 0.5 * (p.a + p.b);
    // the panel can no longer be split in floating point
    if (!(mid > p.a && mid < p.b) || (p.b - p.a) < 64 * std::numeric_limits<double>::epsilon() *
                                                        std::max(1.0, std::abs(mid))) {
      heap.pop();
      frozen.push_back(worst);
      continue;
    }
    if (refinements >= tol.max_refinements) break;
    heap.pop();
    ++refinements;
    Panel<T> left = evaluate_panel<T>(f, p.a, mid);
    Panel<T> right = evaluate_panel<T>(f, mid, p.b);
    evaluations += 2 * kEvalsPerPanel;
    total += left.value + right.value - p.value;
    total_err += left.err + right.err - p.err;
    panels[worst] = left;
    heap.push(worst);
    panels.push_back(right);
    heap.push(panels.size() - 1);

    // running sums drift; resynchronise before trusting a stopping decision
    if (total_err <= target(total)) {
      T s{};
      double e = 0.0;
      for (const auto& q : panels) {
        s += q.value;
        e += q.err;
      }
      total = s;
      total_err = e;
    }
  }

  // deterministic left-to-right summation
  std::sort(panels.begin(), panels.end(), [](const Panel<T>& x, const Panel<T>& y) { return x.a < y.a; });
  T sum{};
  double err = 0.0;
  for (const auto& q : panels) {
    sum += q.value;
    err += q.err;
  }
  if (!std::isfinite(magnitude(sum))) throw NonFiniteError("integrand produced a non-finite value");
  if (err > target(sum)) {
    throw NoConvergence("adaptive quadrature did not reach tolerance after " +
                            std::to_string(refinements) + " refinements",
                        magnitude(sum), err);
  }
  return {sum, err, evaluations};
}

template <class T>
void check_envelope_impl(const BasicLineFunction<T>& f) {
  const Envelope& env = f.envelope;
  if (!(env.tail_rate > 0.0)) throw EnvelopeError("envelope needs a positive tail rate");
  if (!(env.scale > 0.0) || env.poly_growth < 0.0 || env.x0 < 0.0) {
    throw EnvelopeError("envelope scale must be positive, growth and x0 nonnegative");
  }
  const double base = std::max(env.x0, 1.0);
  for (double r : {2.0 * base, 4.0 * base}) {
    for (double x : {env.center - r, env.center + r}) {
      const double v = magnitude(f.eval(x));
      const double bound = env.bound(x);
      if (v > bound * (1.0 + 1e-9) + std::numeric_limits<double>::denorm_min()) {
        throw EnvelopeError("envelope violated at x = " + std::to_string(x));
      }
    }
  }
}

template <class T>
BasicQuadratureResult<T> integrate_line_impl(const BasicLineFunction<T>& f, const Tolerance& tol) {
  const double x = truncation_radius(f.envelope, tol.abs_tol / 10.0);
  const double c = f.envelope.center;
  return adaptive<T>(f.eval, c - x, c + x, tol, f.breakpoints);
}

template <class Map>
SupResult sup_scan_with(const LineFunction& f, double lo, double hi, const Tolerance& tol, Map&& map) {
  if (!(hi > lo) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw DomainError("sup_scan needs a finite interval with lo < hi");
  }
  const int n = kSupScanIntervals;
  auto node = [&](int i) { return sup_scan_node(lo, hi, i); };
  const std::vector<double> values =
      map(static_cast<std::size_t>(n) + 1, [&](std::size_t i) { return std::abs(f.eval(node(static_cast<int>(i)))); });

  int best = 0;
  for (int i = 1; i <= n; ++i) {
    if (values[i] > values[best]) best = i;
  }
  SupResult out{node(best), values[best], node(std::max(best - 1, 0)), node(std::min(best + 1, n))};

  // golden-section on |f| inside the bracket around the best node
  constexpr double kInvPhi = 0.6180339887498948482;
  double a = out.bracket_lo;
  double b = out.bracket_hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = std::abs(f.eval(c));
  double fd = std::abs(f.eval(d));
  for (int it = 0; it < 200; ++it) {
    const double width = b - a;
    if (width <= tol.rel_tol * std::max(1.0, std::abs(0.5 * (a + b)))) break;
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = std::abs(f.eval(c));
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = std::abs(f.eval(d));
    }
  }
  const double xm = fc >= fd ? c : d;
  const double fm = std::max(fc, fd);
  if (fm > out.max) {
    out.argmax = xm;
    out.max = fm;
  }
  out.bracket_lo = a;
  out.bracket_hi = b;
  return out;
}

template <class Scan>
double sup_norm(const LineFunction& f, const Tolerance& tol, Scan&& scan) {
  const Envelope& env = f.envelope;
  const double c = env.center;
  if (!(env.tail_rate > 0.0)) {
    if (!(env.x0 > 0.0)) throw EnvelopeError("sup over R needs a decaying envelope or a finite window x0");
    return scan(f, c - env.x0, c + env.x0, tol).max;
  }
  double window = std::max(env.x0, 1.0);
  double best = 0.0;
  for (int round = 0; round < 8; ++round) {
    best = std::max(best, scan(f, c - window, c + window, tol).max);
    // beyond x_env the envelope is below the current maximum
    const double floor = std::max(best, std::numeric_limits<double>::min());
    double x_env = env.x0;
    for (int it = 0; it < 60; ++it) {
      const double next =
          (env.poly_growth * std::log1p(x_env) + std::log(env.scale / floor)) / env.tail_rate;
      x_env = std::max(env.x0, next);
    }
    if (x_env <= window) return best;
    window = x_env;
  }
  return best;
}

}  // namespace

double Envelope::bound(double x) const {
  const double r = std::abs(x - center);
  return scale * std::pow(1.0 + r, poly_growth) * std::exp(-tail_rate * r);
}

void check_envelope(const LineFunction& f) { check_envelope_impl(f); }
void check_envelope(const ComplexLineFunction& f) { check_envelope_impl(f); }

LineFunction make_line_function(std::function<double(double)> eval, Envelope env,
                                std::vector<double> breakpoints) {
  LineFunction f{std::move(eval), env, std::move(breakpoints)};
#ifndef NDEBUG
  check_envelope(f);
#endif
  return f;
}

ComplexLineFunction make_complex_line_function(std::function<Complex(double)> eval, Envelope env,
                                               std::vector<double> breakpoints) {
  ComplexLineFunction f{std::move(eval), env, std::move(breakpoints)};
#ifndef NDEBUG
  check_envelope(f);
#endif
  return f;
}

double truncation_radius(const Envelope& env, double tail_budget) {
  const double r = env.tail_rate;
  const double g = env.poly_growth;
  if (!(r > 0.0)) throw EnvelopeError("integration over R needs a positive tail rate");
  if (!(tail_budget > 0.0)) throw DomainError("tail budget must be positive");
  // with X >= 2g/r the tail integral is at most 2 C (1+X)^g e^{-rX} / (r - g/(1+X)) <= 4 C (1+X)^g e^{-rX} / r
  const double floor = std::max(env.x0, 2.0 * g / r);
  double x = floor;
  for (int it = 0; it < 100; ++it) {
    const double next = std::max(floor, (g * std::log1p(x) + std::log(4.0 * env.scale / (r * tail_budget))) / r);
    if (std::abs(next - x) <= 1e-12 * std::max(1.0, x)) {
      x = next;
      break;
    }
    x = next;
  }
  return x;
}

QuadratureResult integrate_interval(const std::function<double(double)>& f, double a, double b,
                                    const Tolerance& tol, const std::vector<double>& breakpoints) {
  return adaptive<double>(f, a, b, tol, breakpoints);
}

ComplexQuadratureResult integrate_interval_complex(const std::function<Complex(double)>& f, double a,
                                                   double b, const Tolerance& tol,
                                                   const std::vector<double>& breakpoints) {
  return adaptive<Complex>(f, a, b, tol, breakpoints);
}

QuadratureResult integrate_line(const LineFunction& f, const Tolerance& tol) {
  return integrate_line_impl(f, tol);
}

ComplexQuadratureResult integrate_line(const ComplexLineFunction& f, const Tolerance& tol) {
  return integrate_line_impl(f, tol);
}

SupResult sup_scan_interval(const LineFunction& f, double lo, double hi, const Tolerance& tol) {
  return sup_scan_with(f, lo, hi, tol, [](std::size_t n, auto&& fn) {
    return parallel::map_indices<double>(n, fn);
  });
}

SupResult sup_scan_interval_serial(const LineFunction& f, double lo, double hi, const Tolerance& tol) {
  return sup_scan_with(f, lo, hi, tol, [](std::size_t n, auto&& fn) {
    return parallel::map_indices_serial<double>(n, fn);
  });
}

SupResult sup_scan(const LineFunction& f, double window, const Tolerance& tol) {
  return sup_scan_interval(f, -window, window, tol);
}

SupResult sup_scan_serial(const LineFunction& f, double window, const Tolerance& tol) {
  return sup_scan_interval_serial(f, -window, window, tol);
}

double lp_norm(const LineFunction& f, const Exponent& p, const Tolerance& tol) {
  if (p.is_infinite()) {
    return sup_norm(f, tol, [](const LineFunction& g, double lo, double hi, const Tolerance& t) {
      return sup_scan_interval(g, lo, hi, t);
    });
  }
  const double pv = p.value();
  const Envelope& env = f.envelope;
  if (!(env.tail_rate > 0.0)) throw EnvelopeError("|f|^p has a nonpositive decay rate");
  LineFunction powered{
      [&f, pv](double x) { return std::pow(std::abs(f.eval(x)), pv); },
      Envelope{env.tail_rate * pv, env.poly_growth * pv, env.x0, std::pow(env.scale, pv), env.center},
      f.breakpoints};
  const double integral = integrate_line(powered, tol).value;
  if (integral <= 0.0) return 0.0;
  return std::pow(integral, p.recip());
}

}  // namespace threelines
