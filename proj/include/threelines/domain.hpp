// Copyright 2026 The threelines Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <string>
#include <string_view>

#include "threelines/errors.hpp"

namespace threelines {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// Lebesgue exponent p in [1, inf], held as its reciprocal 1/p.
///
/// The reciprocal and its Hölder complement 1 - 1/p are stored side by side,
/// so conjugation is a swap: conjugate(conjugate(p)) reproduces p bit for
/// bit, and p = inf is the exact value recip() == 0.
class Exponent {
 public:
  /// Defaults to p = 1.
  Exponent() = default;

  static Exponent from_recip(double recip);
  /// Accepts p in [1, inf]; std::numeric_limits<double>::infinity() gives p = inf.
  static Exponent from_p(double p);
  static Exponent infinity() { return from_recip(0.0); }
  /// Parses "inf", "infinity", a decimal numeral, or a rational "a/b".
  static Exponent parse(std::string_view text);

  double recip() const noexcept { return recip_; }
  double conj_recip() const noexcept { return conj_recip_; }
  bool is_infinite() const noexcept { return recip_ == 0.0; }
  /// The exponent p itself (inf for recip() == 0).
  double value() const noexcept;

  std::string to_string() const;

  friend bool operator==(const Exponent& a, const Exponent& b) noexcept {
    return a.recip_ == b.recip_ && a.conj_recip_ == b.conj_recip_;
  }

 private:
  Exponent(double r, double c) : recip_(r), conj_recip_(c) {}

  double recip_ = 1.0;
  double conj_recip_ = 0.0;

  friend Exponent conjugate(const Exponent& p) noexcept;
};

/// Hölder conjugate: recip(p*) = 1 - recip(p).
Exponent conjugate(const Exponent& p) noexcept;

/// 1/p_t = (1-t)/p0 + t/p1; t outside [0,1] throws DomainError.
Exponent interpolate_exponent(const Exponent& p0, const Exponent& p1, double t);

/// Height of the evaluation line, strictly inside (0,1).
class Alpha {
 public:
  static constexpr double kMargin = 1e-9;

  explicit Alpha(double value);

  double value() const noexcept { return value_; }
  /// 1 - alpha, the height seen from the top line.
  Alpha flipped() const { return Alpha(1.0 - value_); }

 private:
  double value_;
};

/// z = x + iy with |y| <= 1. Upper half is the closed strip, lower half its reflection.
struct StripPoint {
  double x = 0.0;
  double y = 0.0;

  StripPoint() = default;
  StripPoint(double x_, double y_);

  static StripPoint from_complex(Complex z) { return {z.real(), z.imag()}; }
  Complex to_complex() const noexcept { return {x, y}; }
  StripPoint conj() const { return {x, -y}; }
};

struct Tolerance {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_refinements = 4000;

  Tolerance() = default;
  Tolerance(double abs, double rel, int max_ref = 4000);

  static Tolerance uniform(double tol) { return {tol, tol}; }
  /// Same refinement budget, tighter of the two tolerance pairs.
  Tolerance tightened(double tol) const;
};

}  // namespace threelines
