// Copyright 2026 The threelines Authors
// SPDX-License-Identifier: Apache-2.0

#include "threelines/lieb_thirring.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "threelines/errors.hpp"
#include "threelines/special.hpp"

namespace threelines {

const char* to_string(LTKind kind) { return kind == LTKind::CLR ? "CLR" : "LT"; }

LTKind parse_lt_kind(const std::string& s) {
  std::string u = s;
  std::transform(u.begin(), u.end(), u.begin(), [](unsigned char c) { return std::toupper(c); });
  if (u == "CLR") return LTKind::CLR;
  if (u == "LT") return LTKind::LT;
  throw DomainError("unknown inequality kind '" + s + "' (expected CLR or LT)");
}

Alpha alpha_of(const LTQuery& query) {
  if (query.d < 1) throw DomainError("dimension must be a positive integer");
  if (!(query.s > 0.0) || !std::isfinite(query.s)) throw DomainError("s must be positive and finite");
  const double d = query.d;
  if (query.kind == LTKind::CLR) {
    if (!(query.s < 0.5 * d)) throw DomainError("CLR needs s < d/2");
    return Alpha(2.0 * query.s / d);
  }
  return Alpha(2.0 * query.s / (d + 2.0 * query.s));
}

double ratio_bound(LTKind kind, Alpha alpha) {
  const double a = alpha.value();
  // Cl2(2 pi (1 - a)) = -Cl2(2 pi a) by oddness and periodicity; this avoids rounding 1 - a near 2 pi
  const double clr = kPi / (a * std::sin(kPi * a)) * std::exp(-clausen2(2.0 * kPi * a) / (kPi * a));
  if (kind == LTKind::CLR) return clr;
  return clr * std::exp(std::log1p(-a) / a);
}

double ratio_bound(const LTQuery& query) { return ratio_bound(query.kind, alpha_of(query)); }

double semiclassical(int d, double s, SemiclassicalOrder order) {
  if (d < 1) throw DomainError("dimension must be a positive integer");
  if (!(s > 0.0)) throw DomainError("s must be positive");
  const double half = 0.5 * d;
  // |B_1| / (2 pi)^d in logs, so large d does not overflow
  const double log_ball = half * std::log(kPi) - std::lgamma(half + 1.0);
  const double zeroth = std::exp(log_ball - d * std::log(2.0 * kPi));
  if (order == SemiclassicalOrder::Zeroth) return zeroth;
  return 2.0 * s / (d + 2.0 * s) * zeroth;
}

double asymptote_e2() { return 4.0 * kPi * kPi * std::exp(-2.0); }
double asymptote_e3() { return 4.0 * kPi * kPi * std::exp(-3.0); }

AsymptoteProbe asymptote_probe(LTKind kind, const std::vector<double>& alphas) {
  if (alphas.empty()) throw DomainError("asymptote probe needs at least one alpha");
  AsymptoteProbe probe{kind, {}, 0.0, 0.0};
  double smallest = 1.0;
  double at_smallest = 0.0;
  for (double a : alphas) {
    if (!(a > 0.0 && a <= 0.05)) throw DomainError("asymptote probe alphas must lie in (0, 0.05]");
    const double b = ratio_bound(kind, Alpha(a));
    probe.samples.push_back({a, b});
    if (a < smallest) {
      smallest = a;
      at_smallest = b;
    }
  }
  const double g2 = std::abs(at_smallest / asymptote_e2() - 1.0);
  const double g3 = std::abs(at_smallest / asymptote_e3() - 1.0);
  probe.nearest_limit = g2 <= g3 ? asymptote_e2() : asymptote_e3();
  probe.relative_gap = std::min(g2, g3);
  return probe;
}

AsymptotePairing asymptote_pairing(const std::vector<double>& alphas) {
  AsymptotePairing out{asymptote_probe(LTKind::CLR, alphas), asymptote_probe(LTKind::LT, alphas), false, false,
                       false};
  out.clr_to_e2 = out.clr.nearest_limit == asymptote_e2() && out.lt.nearest_limit == asymptote_e3();
  out.covers_both = out.clr.nearest_limit != out.lt.nearest_limit;
  out.quoted_pairing_disagrees = !(out.lt.nearest_limit == asymptote_e2() && out.clr.nearest_limit == asymptote_e3());
  return out;
}

}  // namespace threelines
