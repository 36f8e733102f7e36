// Copyright 2026 The threelines Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "threelines/domain.hpp"

namespace threelines {

/// One gated quantity. Grid checks report the worst case over the grid.
struct CheckResult {
  std::string name;
  double value = 0.0;
  std::optional<double> target;
  /// Distance from the target, or the residual itself when there is no target.
  double defect = 0.0;
  /// Pass iff defect < gate (or the check's own predicate for bracket checks).
  double gate = 0.0;
  bool pass = false;
  /// Informational rows never affect the exit status.
  bool gated = true;
  /// Grid point that produced the worst defect.
  std::string where;
};

struct SectionReport {
  std::string id;
  std::string title;
  std::vector<CheckResult> checks;
  /// Wall-clock budget in milliseconds; 0 when the section has none.
  double runtime_limit_ms = 0.0;
  /// Filled by the runner; kept out of deterministic output unless requested.
  double runtime_ms = 0.0;

  bool pass() const;
  bool within_budget() const { return runtime_limit_ms <= 0.0 || runtime_ms < runtime_limit_ms; }
};

struct VerifyOptions {
  /// Upper bound for every quadrature tolerance; gates that need tighter
  /// quadrature use min(tol, what they need).
  double tol = 1e-8;
};

inline constexpr int kCriterionCount = 12;

/// Acceptance criterion 1..12, timed.
SectionReport run_criterion(int id, const VerifyOptions& opts = {});

/// Invariant suites per module: domain, scalar_special, quadrature, strip_kernels,
/// three_lines, optimizers, lieb_thirring.
std::vector<std::string> module_suite_names();
SectionReport run_module_suite(const std::string& name, const VerifyOptions& opts = {});

/// All criteria, then all module suites.
std::vector<SectionReport> verify_all(const VerifyOptions& opts = {});

/// Exponents of the verification grid: 1, 4/3, 2, 4, inf.
std::vector<Exponent> grid_exponents();
/// 0.1, 0.2, ..., 0.9.
std::vector<double> grid_alphas();

}  // namespace threelines
