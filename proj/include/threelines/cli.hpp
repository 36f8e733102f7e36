// Copyright 2026 The threelines Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "threelines/domain.hpp"
#include "threelines/lieb_thirring.hpp"

namespace threelines::cli {

enum class Command { Value, Table, Optimizer, Dual, Verify, Lt };
enum class Format { Json, Csv, Text };

const char* to_string(Command c);
const char* to_string(Format f);

struct RunConfig {
  Command command = Command::Value;
  std::optional<Exponent> p;
  std::optional<Exponent> q;
  /// As typed, for the report ("4/3" stays "4/3").
  std::optional<std::string> p_text;
  std::optional<std::string> q_text;
  /// Strictly increasing, inside (0, 1).
  std::vector<double> alphas;
  Tolerance tol;
  Format format = Format::Text;
  std::optional<std::string> output_path;
  /// Adds runtime_ms to the report; off by default so output is reproducible.
  bool timing = false;

  // optimizer: sample abscissae and height (default: the line Im z = alpha)
  std::vector<double> xs;
  std::optional<double> y;

  // verify: restrict to one criterion or one module suite
  std::optional<int> criterion;
  std::optional<std::string> suite;

  // lt
  int d = 1;
  double s = 1.0;
  std::optional<LTKind> kind;

  /// Set when --help was requested; run prints it and exits 0.
  std::optional<std::string> help;
};

/// Parses argv without the program name. Throws UsageError naming the offending flag.
RunConfig parse_args(const std::vector<std::string>& args);

/// "a:b:n" expands to n points from a to b inclusive; a plain number is one point.
std::vector<double> parse_grid(const std::string& text, const std::string& flag);

struct ResultRow {
  std::string name;
  double value = 0.0;
  std::optional<double> target;
  std::optional<double> defect;
  std::optional<bool> pass;
  // verification extras, JSON only
  std::optional<double> gate;
  std::optional<bool> gated;
  std::optional<std::string> where;

  bool operator==(const ResultRow&) const = default;
};

struct ReportInputs {
  std::optional<std::string> p;
  std::optional<std::string> q;
  std::vector<double> alpha;
  double tol = 0.0;
  std::optional<int> d;
  std::optional<double> s;
  std::optional<std::string> kind;

  bool operator==(const ReportInputs&) const = default;
};

struct Report {
  std::string command;
  ReportInputs inputs;
  std::vector<ResultRow> results;
  std::optional<double> runtime_ms;

  bool operator==(const Report&) const = default;
};

/// Builds the report for a config; throws the library errors unchanged.
/// The verify command also reports whether every gated row passed.
Report build_report(const RunConfig& config, bool* all_passed = nullptr);

std::string render(const Report& report, Format format);
/// Inverse of render(report, Format::Json).
Report parse_json_report(const std::string& text);

/// 17 significant digits in the form d.dddde-1 (exponent without padding).
std::string format_number(double v);

/// Writes to the path, or to out when no path is given. Throws IOError.
void write_output(const std::string& text, const std::optional<std::string>& path, std::ostream& out);

/// Full command: parse, build, render, write. Exit codes: 0 success, 1 a verification
/// gate failed, 2 usage or input error, 3 numerical non-convergence.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace threelines::cli
