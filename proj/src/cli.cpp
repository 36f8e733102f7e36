// Copyright 2026 The threelines Authors
// SPDX-License-Identifier: Apache-2.0

#include "threelines/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "threelines/errors.hpp"
#include "threelines/optimizers.hpp"
#include "threelines/parallel.hpp"
#include "threelines/three_lines.hpp"
#include "threelines/verify.hpp"

namespace threelines::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr double kScalarTol = 1e-10;
constexpr double kConvolutionTol = 1e-8;

Command command_from(const std::string& name) {
  if (name == "value") return Command::Value;
  if (name == "table") return Command::Table;
  if (name == "optimizer") return Command::Optimizer;
  if (name == "dual") return Command::Dual;
  if (name == "verify") return Command::Verify;
  return Command::Lt;
}

Format format_from(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "text") return Format::Text;
  throw UsageError("--format: expected json, csv or text, got '" + s + "'");
}

double parse_real(const std::string& text, const std::string& flag) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw UsageError(flag + ": '" + text + "' is not a number");
  }
}

Exponent parse_exponent(const std::string& text, const std::string& flag) {
  try {
    return Exponent::parse(text);
  } catch (const DomainError& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

std::string fmt_short(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// Name suffix that tells rows apart when a command covers several grid points.
std::string tag(const std::vector<std::pair<std::string, std::string>>& kv) {
  if (kv.empty()) return "";
  std::string s = "[";
  for (std::size_t i = 0; i < kv.size(); ++i) {
    if (i) s += ",";
    s += kv[i].first + "=" + kv[i].second;
  }
  return s + "]";
}

ResultRow row(std::string name, double value) { return ResultRow{std::move(name), value, {}, {}, {}, {}, {}, {}}; }

ResultRow row(std::string name, double value, double target, std::optional<double> gate = std::nullopt) {
  ResultRow r = row(std::move(name), value);
  r.target = target;
  r.defect = std::abs(value - target);
  if (gate) r.pass = *r.defect < *gate;
  return r;
}

std::string exponent_label(const RunConfig& c, bool is_p) {
  const auto& text = is_p ? c.p_text : c.q_text;
  const auto& e = is_p ? c.p : c.q;
  if (text) return *text;
  return e ? e->to_string() : "";
}

void require_pq_alpha(const RunConfig& c) {
  if (!c.p) throw UsageError("--p is required for " + std::string(to_string(c.command)));
  if (!c.q) throw UsageError("--q is required for " + std::string(to_string(c.command)));
  if (c.alphas.empty()) throw UsageError("--alpha is required for " + std::string(to_string(c.command)));
}

// ---- commands ----

void report_value(const RunConfig& c, Report& r) {
  require_pq_alpha(c);
  const bool many = c.alphas.size() > 1;
  for (double a : c.alphas) {
    const std::string t = many ? tag({{"alpha", fmt_short(a)}}) : "";
    const OptimalValue closed = log_H(*c.p, *c.q, Alpha(a));
    const OptimalValue quad = log_H(*c.p, *c.q, Alpha(a), Route::Quadrature, c.tol);
    r.results.push_back(row("H_pq" + t, closed.h));
    // route agreement, loosened only when the caller asks for coarser quadrature
    r.results.push_back(row("H_pq.quadrature" + t, quad.h, closed.h, std::max(1e-10, 10.0 * c.tol.abs_tol)));
  }
}

void report_table(const RunConfig& c, Report& r) {
  struct Point {
    Exponent p, q;
    std::string pl, ql;
    double alpha;
  };
  std::vector<std::pair<Exponent, std::string>> ps, qs;
  const std::vector<std::pair<Exponent, std::string>> grid = {{Exponent::from_p(1), "1"},
                                                              {Exponent::parse("4/3"), "4/3"},
                                                              {Exponent::from_p(2), "2"},
                                                              {Exponent::from_p(4), "4"},
                                                              {Exponent::infinity(), "inf"}};
  ps = c.p ? std::vector{std::pair{*c.p, exponent_label(c, true)}} : grid;
  qs = c.q ? std::vector{std::pair{*c.q, exponent_label(c, false)}} : grid;
  const std::vector<double> alphas = c.alphas.empty() ? grid_alphas() : c.alphas;
  std::vector<Point> points;
  for (double a : alphas) {
    for (const auto& [p, pl] : ps) {
      for (const auto& [q, ql] : qs) points.push_back({p, q, pl, ql, a});
    }
  }
  // fan out; rows come back in input order
  const auto values = parallel::map_indices<std::pair<double, double>>(points.size(), [&](std::size_t i) {
    const Point& pt = points[i];
    return std::pair{log_H(pt.p, pt.q, Alpha(pt.alpha)).h,
                     log_H(pt.p, pt.q, Alpha(pt.alpha), Route::Quadrature, c.tol).h};
  });
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Point& pt = points[i];
    ResultRow rr = row("H" + tag({{"p", pt.pl}, {"q", pt.ql}, {"alpha", fmt_short(pt.alpha)}}), values[i].first);
    // the quadrature route serves as the target; the defect is the route difference
    rr.target = values[i].second;
    rr.defect = std::abs(values[i].first - values[i].second);
    r.results.push_back(rr);
  }
}

void report_optimizer(const RunConfig& c, Report& r) {
  require_pq_alpha(c);
  const bool many = c.alphas.size() > 1;
  const std::vector<double> xs = c.xs.empty() ? std::vector<double>{-2.0, -1.0, 0.0, 1.0, 2.0} : c.xs;
  for (double a : c.alphas) {
    const std::string t = many ? tag({{"alpha", fmt_short(a)}}) : "";
    const auto ctx = OptimizerContext::build(*c.p, *c.q, Alpha(a), c.tol);
    const OptimizerNorms n = optimizer_norms(ctx);
    const double H = std::exp(ctx.log_h_alpha);
    r.results.push_back(row("beta" + t, ctx.beta));
    r.results.push_back(row("kappa" + t, ctx.kappa, 1.0));
    r.results.push_back(row("c" + t, ctx.c));
    r.results.push_back(row("h(i alpha)" + t, optimizer_h(ctx, {0.0, a}).real(), H));
    r.results.push_back(row("norm_h0_p" + t, n.h0_p, 1.0));
    r.results.push_back(row("norm_h1_q" + t, n.h1_q, 1.0));
    const double y = c.y.value_or(a);
    for (double x : xs) {
      const std::string pt = tag({{"alpha", fmt_short(a)}, {"x", fmt_short(x)}, {"y", fmt_short(y)}});
      const Complex ph = phi(ctx, {x, y});
      r.results.push_back(row("phi_re" + pt, ph.real()));
      r.results.push_back(row("phi_im" + pt, ph.imag()));
      r.results.push_back(row("abs_h" + pt, std::exp(ph.real())));
      const BoundaryModuli bm = boundary_moduli(ctx, x);
      const std::string bt = tag({{"alpha", fmt_short(a)}, {"x", fmt_short(x)}});
      r.results.push_back(row("abs_h0" + bt, bm.bottom));
      r.results.push_back(row("abs_h1" + bt, bm.top));
    }
  }
}

void report_dual(const RunConfig& c, Report& r) {
  require_pq_alpha(c);
  const bool many = c.alphas.size() > 1;
  for (double a : c.alphas) {
    const std::string t = many ? tag({{"alpha", fmt_short(a)}}) : "";
    const auto ctx = OptimizerContext::build(*c.p, *c.q, Alpha(a), c.tol);
    const OptimizerNorms n = optimizer_norms(ctx);
    r.results.push_back(row("kappa" + t, ctx.kappa, 1.0));
    r.results.push_back(row("c" + t, ctx.c));
    r.results.push_back(row("norm_m0_pstar" + t, n.m0_pstar));
    r.results.push_back(row("norm_m1_qstar" + t, n.m1_qstar));
    r.results.push_back(row("dual_objective" + t, dual_objective(ctx, n), std::exp(ctx.log_h_alpha), 1e-6));
  }
}

bool report_verify(const RunConfig& c, Report& r) {
  VerifyOptions opts;
  opts.tol = std::min(c.tol.abs_tol, c.tol.rel_tol);
  std::vector<SectionReport> sections;
  if (c.criterion) {
    sections.push_back(run_criterion(*c.criterion, opts));
  } else if (c.suite) {
    sections.push_back(run_module_suite(*c.suite, opts));
  } else {
    sections = verify_all(opts);
  }
  bool ok = true;
  for (const auto& s : sections) {
    ok = ok && s.pass();
    ResultRow head = row(s.id, static_cast<double>(s.checks.size()));
    head.pass = s.pass();
    head.where = s.title;
    r.results.push_back(head);
    for (const auto& ch : s.checks) {
      ResultRow rr = row(s.id + "." + ch.name, ch.value);
      rr.target = ch.target;
      rr.defect = ch.defect;
      rr.pass = ch.pass;
      rr.gate = ch.gate;
      rr.gated = ch.gated;
      rr.where = ch.where;
      r.results.push_back(rr);
    }
    // wall-clock rows only on request, to keep default output reproducible
    if (c.timing && s.runtime_limit_ms > 0.0) {
      ResultRow t = row(s.id + ".runtime_ms", s.runtime_ms);
      t.target = s.runtime_limit_ms;
      t.pass = s.within_budget();
      t.gated = true;
      ok = ok && s.within_budget();
      r.results.push_back(t);
    }
  }
  return ok;
}

void report_lt(const RunConfig& c, Report& r) {
  std::vector<LTKind> kinds;
  if (c.kind) {
    kinds.push_back(*c.kind);
  } else {
    if (c.s < 0.5 * c.d) kinds.push_back(LTKind::CLR);
    kinds.push_back(LTKind::LT);
  }
  for (LTKind k : kinds) {
    const LTQuery query{c.d, c.s, k};
    const std::string t = kinds.size() > 1 ? tag({{"kind", to_string(k)}}) : "";
    const double a = alpha_of(query).value();
    const double ratio = ratio_bound(query);
    const double cl = semiclassical(c.d, c.s, k == LTKind::CLR ? SemiclassicalOrder::Zeroth : SemiclassicalOrder::First);
    r.results.push_back(row("alpha" + t, a));
    r.results.push_back(row("ratio_bound" + t, ratio));
    r.results.push_back(row("semiclassical" + t, cl));
    r.results.push_back(row("constant_bound" + t, ratio * cl));
  }
  const std::vector<double> probe_alphas = {1e-2, 1e-3, 1e-4};
  const AsymptotePairing pr = asymptote_pairing(probe_alphas);
  for (const AsymptoteProbe* probe : {&pr.clr, &pr.lt}) {
    for (const auto& smp : probe->samples) {
      r.results.push_back(row("asymptote" + tag({{"kind", to_string(probe->kind)}, {"alpha", fmt_short(smp.alpha)}}),
                              smp.bound, probe->nearest_limit));
    }
  }
  ResultRow flag = row("asymptote.clr_to_4pi2e-2", pr.clr_to_e2 ? 1.0 : 0.0);
  flag.where = pr.quoted_pairing_disagrees ? "reverse of the commonly quoted pairing" : "matches the quoted pairing";
  r.results.push_back(flag);
}

ordered_json row_to_json(const ResultRow& rr) {
  ordered_json j;
  j["name"] = rr.name;
  j["value"] = rr.value;
  j["target"] = rr.target ? ordered_json(*rr.target) : ordered_json(nullptr);
  j["defect"] = rr.defect ? ordered_json(*rr.defect) : ordered_json(nullptr);
  j["pass"] = rr.pass ? ordered_json(*rr.pass) : ordered_json(nullptr);
  if (rr.gate) j["gate"] = *rr.gate;
  if (rr.gated) j["gated"] = *rr.gated;
  if (rr.where) j["where"] = *rr.where;
  return j;
}

template <class T>
std::optional<T> opt(const ordered_json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

std::string text_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

const char* to_string(Command c) {
  switch (c) {
    case Command::Value: return "value";
    case Command::Table: return "table";
    case Command::Optimizer: return "optimizer";
    case Command::Dual: return "dual";
    case Command::Verify: return "verify";
    case Command::Lt: return "lt";
  }
  return "?";
}

const char* to_string(Format f) {
  switch (f) {
    case Format::Json: return "json";
    case Format::Csv: return "csv";
    case Format::Text: return "text";
  }
  return "?";
}

std::vector<double> parse_grid(const std::string& text, const std::string& flag) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  std::vector<double> out;
  if (parts.size() == 1) {
    out.push_back(parse_real(parts[0], flag));
  } else if (parts.size() == 3) {
    const double a = parse_real(parts[0], flag);
    const double b = parse_real(parts[1], flag);
    const double n = parse_real(parts[2], flag);
    if (!(n >= 1.0) || n != std::floor(n) || n > 1e6) throw UsageError(flag + ": point count must be a positive integer");
    const int count = static_cast<int>(n);
    if (count == 1) {
      if (a != b) throw UsageError(flag + ": a one-point grid needs a == b");
      out.push_back(a);
    } else {
      for (int k = 0; k < count; ++k) out.push_back((a * (count - 1 - k) + b * k) / (count - 1));
    }
  } else {
    throw UsageError(flag + ": expected a number or a:b:n, got '" + text + "'");
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!std::isfinite(out[i])) throw UsageError(flag + ": values must be finite");
    if (i > 0 && !(out[i] > out[i - 1])) throw UsageError(flag + ": grid must be strictly increasing");
  }
  return out;
}

RunConfig parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Sharp constants and optimizers of the three-lines problem on the strip", "threelines"};
  app.require_subcommand(1, 1);

  std::string p, q, alpha, format = "text", out, xs;
  double tol = 0.0, y = 0.0, s = 1.0;
  int criterion = 0, d = 1;
  std::string suite, kind;
  bool timing = false;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--tol", tol, "quadrature tolerance (absolute and relative)");
    sub->add_option("--format", format, "json, csv or text");
    sub->add_option("--out", out, "write the output here instead of stdout");
    sub->add_flag("--timing", timing, "include runtime_ms in the report");
  };
  auto exponents = [&](CLI::App* sub) {
    sub->add_option("--p", p, "bottom exponent: a number >= 1, a rational like 4/3, or inf");
    sub->add_option("--q", q, "top exponent");
    sub->add_option("--alpha", alpha, "alpha in (0,1), or a grid a:b:n");
  };
  CLI::App* value = app.add_subcommand("value", "H_{p,q}(alpha) by both routes");
  CLI::App* table = app.add_subcommand("table", "H over a (p, q, alpha) grid");
  CLI::App* optimizer = app.add_subcommand("optimizer", "samples of the optimizer h = e^phi");
  CLI::App* dual = app.add_subcommand("dual", "norms of the dual optimizer and the dual objective");
  CLI::App* verify = app.add_subcommand("verify", "run the verification suites");
  CLI::App* lt = app.add_subcommand("lt", "CLR and Lieb-Thirring bounds");
  for (CLI::App* sub : {value, table, optimizer, dual}) {
    exponents(sub);
    common(sub);
  }
  common(verify);
  common(lt);
  optimizer->add_option("--x", xs, "sample abscissae: a number or a:b:n");
  optimizer->add_option("--y", y, "sample height in (0,1); default alpha");
  verify->add_option("--criterion", criterion, "only acceptance criterion 1..12");
  verify->add_option("--suite", suite, "only one module suite");
  lt->add_option("--d", d, "dimension");
  lt->add_option("--s", s, "power of the fractional Laplacian");
  lt->add_option("--kind", kind, "CLR or LT (default: both where defined)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  RunConfig c;
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    c.help = app.help();
    for (CLI::App* sub : app.get_subcommands()) c.help = sub->help();
    return c;
  } catch (const CLI::CallForAllHelp&) {
    c.help = app.help("", CLI::AppFormatMode::All);
    return c;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  CLI::App* chosen = app.get_subcommands().front();
  c.command = command_from(chosen->get_name());
  c.format = format_from(format);
  c.timing = timing;
  if (!out.empty()) c.output_path = out;
  auto given = [&](const char* flag) { return chosen->count(flag) > 0; };
  auto has_option = [&](const char* flag) {
    try {
      chosen->get_option(flag);
      return true;
    } catch (const CLI::OptionNotFound&) {
      return false;
    }
  };

  const double default_tol =
      (c.command == Command::Value || c.command == Command::Table) ? kScalarTol : kConvolutionTol;
  if (given("--tol")) {
    if (!(tol > 0.0) || !std::isfinite(tol)) throw UsageError("--tol must be positive and finite");
  } else {
    tol = default_tol;
  }
  c.tol = Tolerance{tol, tol};

  if (has_option("--p") && given("--p")) {
    c.p = parse_exponent(p, "--p");
    c.p_text = p;
  }
  if (has_option("--q") && given("--q")) {
    c.q = parse_exponent(q, "--q");
    c.q_text = q;
  }
  if (has_option("--alpha") && given("--alpha")) {
    c.alphas = parse_grid(alpha, "--alpha");
    for (double a : c.alphas) {
      if (!(a >= Alpha::kMargin && a <= 1.0 - Alpha::kMargin)) {
        throw UsageError("--alpha: " + text_number(a) + " is outside (0, 1)");
      }
    }
  }
  if (c.command == Command::Optimizer) {
    if (given("--x")) c.xs = parse_grid(xs, "--x");
    if (given("--y")) {
      if (!(y > 0.0 && y < 1.0)) throw UsageError("--y must lie in (0, 1)");
      c.y = y;
    }
  }
  if (c.command == Command::Verify) {
    if (given("--criterion")) {
      if (criterion < 1 || criterion > kCriterionCount) throw UsageError("--criterion must be 1..12");
      c.criterion = criterion;
    }
    if (given("--suite")) {
      const auto names = module_suite_names();
      if (std::find(names.begin(), names.end(), suite) == names.end()) {
        throw UsageError("--suite: unknown suite '" + suite + "'");
      }
      if (c.criterion) throw UsageError("--suite and --criterion are exclusive");
      c.suite = suite;
    }
  }
  if (c.command == Command::Lt) {
    if (d < 1) throw UsageError("--d must be a positive integer");
    if (!(s > 0.0) || !std::isfinite(s)) throw UsageError("--s must be positive");
    c.d = d;
    c.s = s;
    if (given("--kind")) {
      try {
        c.kind = parse_lt_kind(kind);
      } catch (const DomainError& e) {
        throw UsageError(std::string("--kind: ") + e.what());
      }
    }
  }
  return c;
}

Report build_report(const RunConfig& c, bool* all_passed) {
  Report r;
  r.command = to_string(c.command);
  if (c.p) r.inputs.p = exponent_label(c, true);
  if (c.q) r.inputs.q = exponent_label(c, false);
  r.inputs.alpha = c.alphas;
  r.inputs.tol = c.tol.abs_tol;
  if (c.command == Command::Lt) {
    r.inputs.d = c.d;
    r.inputs.s = c.s;
    if (c.kind) r.inputs.kind = to_string(*c.kind);
  }
  bool ok = true;
  const auto start = std::chrono::steady_clock::now();
  switch (c.command) {
    case Command::Value: report_value(c, r); break;
    case Command::Table: report_table(c, r); break;
    case Command::Optimizer: report_optimizer(c, r); break;
    case Command::Dual: report_dual(c, r); break;
    case Command::Verify: ok = report_verify(c, r); break;
    case Command::Lt: report_lt(c, r); break;
  }
  if (c.timing) {
    r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  if (all_passed) *all_passed = ok;
  return r;
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  std::string s = buf;
  const auto e = s.find('e');
  std::string mant = s.substr(0, e);
  std::string ex = s.substr(e + 1);
  const bool neg = ex[0] == '-';
  ex = ex.substr(1);
  ex.erase(0, std::min(ex.find_first_not_of('0'), ex.size() - 1));
  return mant + "e" + (neg ? "-" : "") + ex;
}

std::string render(const Report& r, Format format) {
  switch (format) {
    case Format::Json: {
      ordered_json j;
      j["command"] = r.command;
      ordered_json in;
      in["p"] = r.inputs.p ? ordered_json(*r.inputs.p) : ordered_json(nullptr);
      in["q"] = r.inputs.q ? ordered_json(*r.inputs.q) : ordered_json(nullptr);
      if (r.inputs.alpha.size() == 1) {
        in["alpha"] = r.inputs.alpha[0];
      } else if (r.inputs.alpha.empty()) {
        in["alpha"] = nullptr;
      } else {
        in["alpha"] = r.inputs.alpha;
      }
      in["tol"] = r.inputs.tol;
      if (r.inputs.d) in["d"] = *r.inputs.d;
      if (r.inputs.s) in["s"] = *r.inputs.s;
      if (r.inputs.kind) in["kind"] = *r.inputs.kind;
      j["inputs"] = in;
      j["results"] = ordered_json::array();
      for (const auto& rr : r.results) j["results"].push_back(row_to_json(rr));
      if (r.runtime_ms) j["runtime_ms"] = *r.runtime_ms;
      return j.dump(2) + "\n";
    }
    case Format::Csv: {
      std::string s = "name,value,target,defect,pass\n";
      for (const auto& rr : r.results) {
        s += csv_field(rr.name) + "," + format_number(rr.value) + ",";
        s += (rr.target ? format_number(*rr.target) : "") + ",";
        s += (rr.defect ? format_number(*rr.defect) : "") + ",";
        s += rr.pass ? (*rr.pass ? "true" : "false") : "";
        s += "\n";
      }
      return s;
    }
    case Format::Text: {
      std::size_t width = 4;
      for (const auto& rr : r.results) width = std::max(width, rr.name.size());
      std::string s = "command: " + r.command + "\n";
      char line[512];
      std::snprintf(line, sizeof line, "%-*s  %-24s  %-24s  %-10s  %s\n", static_cast<int>(width), "name", "value",
                    "target", "defect", "pass");
      s += line;
      for (const auto& rr : r.results) {
        std::string pass = rr.pass ? (*rr.pass ? "ok" : "FAIL") : "";
        if (rr.gated && !*rr.gated) pass += " (info)";
        char defect[32] = "";
        if (rr.defect) std::snprintf(defect, sizeof defect, "%.3g", *rr.defect);
        std::snprintf(line, sizeof line, "%-*s  %-24s  %-24s  %-10s  %s", static_cast<int>(width), rr.name.c_str(),
                      text_number(rr.value).c_str(), rr.target ? text_number(*rr.target).c_str() : "", defect,
                      pass.c_str());
        s += line;
        if (rr.where && !rr.where->empty()) s += "  " + *rr.where;
        s += "\n";
      }
      if (r.runtime_ms) s += "runtime_ms: " + text_number(*r.runtime_ms) + "\n";
      return s;
    }
  }
  return "";
}

Report parse_json_report(const std::string& text) {
  const ordered_json j = ordered_json::parse(text);
  Report r;
  r.command = j.at("command").get<std::string>();
  const auto& in = j.at("inputs");
  r.inputs.p = opt<std::string>(in, "p");
  r.inputs.q = opt<std::string>(in, "q");
  if (in.contains("alpha") && in.at("alpha").is_number()) {
    r.inputs.alpha = {in.at("alpha").get<double>()};
  } else if (in.contains("alpha") && in.at("alpha").is_array()) {
    r.inputs.alpha = in.at("alpha").get<std::vector<double>>();
  }
  r.inputs.tol = in.at("tol").get<double>();
  r.inputs.d = opt<int>(in, "d");
  r.inputs.s = opt<double>(in, "s");
  r.inputs.kind = opt<std::string>(in, "kind");
  for (const auto& jr : j.at("results")) {
    ResultRow rr;
    rr.name = jr.at("name").get<std::string>();
    rr.value = jr.at("value").get<double>();
    rr.target = opt<double>(jr, "target");
    rr.defect = opt<double>(jr, "defect");
    rr.pass = opt<bool>(jr, "pass");
    rr.gate = opt<double>(jr, "gate");
    rr.gated = opt<bool>(jr, "gated");
    rr.where = opt<std::string>(jr, "where");
    r.results.push_back(rr);
  }
  r.runtime_ms = opt<double>(j, "runtime_ms");
  return r;
}

void write_output(const std::string& text, const std::optional<std::string>& path, std::ostream& out) {
  if (!path) {
    out << text;
    out.flush();
    return;
  }
  std::ofstream f(*path, std::ios::binary | std::ios::trunc);
  if (!f) throw IOError("cannot open '" + *path + "' for writing");
  f << text;
  f.close();
  if (!f) throw IOError("failed writing '" + *path + "'");
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    const RunConfig config = parse_args(args);
    if (config.help) {
      out << *config.help;
      return 0;
    }
    bool ok = true;
    const Report report = build_report(config, &ok);
    write_output(render(report, config.format), config.output_path, out);
    return ok ? 0 : 1;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\nrun 'threelines --help' for usage\n";
    return 2;
  } catch (const NoConvergence& e) {
    err << "numerical failure: " << e.what() << " (best " << e.best_value() << ", error estimate "
        << e.err_estimate() << ")\n";
    return 3;
  } catch (const EnvelopeError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const IOError& e) {
    err << "io error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace threelines::cli
