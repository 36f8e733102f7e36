// Copyright 2026 The threelines Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "threelines/domain.hpp"

namespace threelines {

/// CLR bounds the number of negative eigenvalues, LT their sum.
enum class LTKind { CLR, LT };

const char* to_string(LTKind kind);
/// Accepts "CLR" or "LT" in any case; DomainError otherwise.
LTKind parse_lt_kind(const std::string& s);

/// Dimension d, power s of the fractional Laplacian, and which inequality.
struct LTQuery {
  int d = 1;
  double s = 1.0;
  LTKind kind = LTKind::LT;
};

/// CLR: alpha = 2s/d, which needs s < d/2. LT: alpha = 2s/(d + 2s).
Alpha alpha_of(const LTQuery& query);

/// Bound on the ratio of the optimal constant to its semiclassical value.
double ratio_bound(LTKind kind, Alpha alpha);
double ratio_bound(const LTQuery& query);

enum class SemiclassicalOrder { Zeroth, First };

/// |B_1| / (2 pi)^d, times 2s / (d + 2s) for the first order.
double semiclassical(int d, double s, SemiclassicalOrder order);

/// 4 pi^2 e^{-2} and 4 pi^2 e^{-3}, the two small-alpha limits.
double asymptote_e2();
double asymptote_e3();

struct AsymptoteSample {
  double alpha;
  double bound;
};

struct AsymptoteProbe {
  LTKind kind;
  std::vector<AsymptoteSample> samples;
  /// Whichever of the two limits the smallest-alpha sample is closer to (relative distance).
  double nearest_limit;
  double relative_gap;
};

/// Evaluates ratio_bound along the given alphas, each in (0, 0.05].
AsymptoteProbe asymptote_probe(LTKind kind, const std::vector<double>& alphas);

/// Outcome of probing both formulas: which limit each one approaches.
struct AsymptotePairing {
  AsymptoteProbe clr;
  AsymptoteProbe lt;
  /// True when CLR tends to 4 pi^2 e^{-2} and LT to 4 pi^2 e^{-3}.
  bool clr_to_e2;
  /// The two formulas approach distinct limits and together cover both.
  bool covers_both;
  /// The commonly quoted pairing (LT with e^{-2}) disagrees with the computed one.
  bool quoted_pairing_disagrees;
};

AsymptotePairing asymptote_pairing(const std::vector<double>& alphas);

}  // namespace threelines
