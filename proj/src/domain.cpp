// Copyright 2026 The threelines Authors
// SPDX-License-Identifier: Apache-2.0

#include "threelines/domain.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>

namespace threelines {

namespace {

double parse_number(std::string_view text, std::string_view whole) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(v)) {
    throw DomainError("cannot parse exponent '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

Exponent Exponent::from_recip(double recip) {
  if (!(recip >= 0.0 && recip <= 1.0)) {
    throw DomainError("exponent reciprocal must lie in [0,1], got " + std::to_string(recip));
  }
  return Exponent(recip, 1.0 - recip);
}

Exponent Exponent::from_p(double p) {
  if (std::isnan(p) || p < 1.0) {
    throw DomainError("exponent must satisfy p >= 1, got " + std::to_string(p));
  }
  if (std::isinf(p)) return from_recip(0.0);
  return from_recip(1.0 / p);
}

Exponent Exponent::parse(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "Inf" || text == "INF") {
    return infinity();
  }
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const double num = parse_number(text.substr(0, slash), text);
    const double den = parse_number(text.substr(slash + 1), text);
    if (!(num > 0.0) || !(den > 0.0) || num < den) {
      throw DomainError("exponent '" + std::string(text) + "' must be a rational >= 1");
    }
    // store den/num directly so 4/3 gives recip exactly 0.75
    return from_recip(den / num);
  }
  return from_p(parse_number(text, text));
}

double Exponent::value() const noexcept {
  return recip_ == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / recip_;
}

std::string Exponent::to_string() const {
  if (is_infinite()) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value());
  return buf;
}

Exponent conjugate(const Exponent& p) noexcept { return Exponent(p.conj_recip_, p.recip_); }

Exponent interpolate_exponent(const Exponent& p0, const Exponent& p1, double t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw DomainError("interpolation parameter must lie in [0,1], got " + std::to_string(t));
  }
  if (t == 0.0) return p0;
  if (t == 1.0) return p1;
  return Exponent::from_recip((1.0 - t) * p0.recip() + t * p1.recip());
}

Alpha::Alpha(double value) : value_(value) {
  if (!(value > kMargin && value < 1.0 - kMargin)) {
    throw DomainError("alpha must lie in (1e-9, 1 - 1e-9), got " + std::to_string(value));
  }
}

StripPoint::StripPoint(double x_, double y_) : x(x_), y(y_) {
  if (!std::isfinite(x_) || !std::isfinite(y_)) throw NonFiniteError("strip point must be finite");
  if (std::abs(y_) > 1.0) throw DomainError("strip point needs |Im z| <= 1");
}

Tolerance::Tolerance(double abs, double rel, int max_ref)
    : abs_tol(abs), rel_tol(rel), max_refinements(max_ref) {
  if (!(abs > 0.0) || !(rel > 0.0)) throw DomainError("tolerances must be positive");
  if (max_ref < 1) throw DomainError("max_refinements must be positive");
}

Tolerance Tolerance::tightened(double tol) const {
  return {std::min(abs_tol, tol), std::min(rel_tol, tol), max_refinements};
}

}  // namespace threelines
