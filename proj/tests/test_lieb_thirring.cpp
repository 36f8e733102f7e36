// Copyright 2026 The threelines Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "threelines/errors.hpp"
#include "threelines/lieb_thirring.hpp"

using namespace threelines;

namespace {

// (alpha, CLR, LT) frozen from mpmath at 30 digits
struct Row {
  double alpha;
  double clr;
  double lt;
};
const Row kTable[] = {
    {2.0 / 3.0, 7.5165103225454727636, 1.446553086029409827},
    {0.1, 5.3723743426205740007, 1.8732311054182046887},
    {0.3, 5.6289484027237566094, 1.714302273646698045},
    {0.9, 15.660802984084337172, 1.2125590992200722987},
    {1e-3, 5.3428257577519557944, 1.9645325864738532286},
    {1e-4, 5.3428228575142946203, 1.9654164072709852732},
};

}  // namespace

TEST_CASE("alpha from the query") {
  CHECK(std::abs(alpha_of({1, 1.0, LTKind::LT}).value() - 2.0 / 3.0) < 1e-16);
  CHECK(alpha_of({4, 1.0, LTKind::CLR}).value() == 0.5);
  CHECK_THROWS_AS(alpha_of({1, 1.0, LTKind::CLR}), DomainError);
  CHECK_THROWS_AS(alpha_of({2, 1.0, LTKind::CLR}), DomainError);
  CHECK_THROWS_AS(alpha_of({0, 1.0, LTKind::LT}), DomainError);
  CHECK_THROWS_AS(alpha_of({3, -1.0, LTKind::LT}), DomainError);
  CHECK(parse_lt_kind("clr") == LTKind::CLR);
  CHECK(parse_lt_kind("LT") == LTKind::LT);
  CHECK_THROWS_AS(parse_lt_kind("BLT"), DomainError);
}

TEST_CASE("ratio bounds") {
  CHECK(std::abs(ratio_bound({4, 1.0, LTKind::CLR}) - 2.0 * kPi) < 1e-12);
  CHECK(std::abs(ratio_bound({2, 1.0, LTKind::LT}) - kPi / 2.0) < 1e-12);
  const double lt11 = ratio_bound({1, 1.0, LTKind::LT});
  CHECK(lt11 >= 1.44);
  CHECK(lt11 <= 1.4475);
  for (const Row& r : kTable) {
    INFO("alpha = " << r.alpha);
    CHECK(std::abs(ratio_bound(LTKind::CLR, Alpha(r.alpha)) / r.clr - 1.0) < 1e-12);
    CHECK(std::abs(ratio_bound(LTKind::LT, Alpha(r.alpha)) / r.lt - 1.0) < 1e-12);
  }
}

TEST_CASE("LT below CLR and continuity") {
  for (int k = 1; k <= 9; ++k) {
    const Alpha a(k / 10.0);
    CHECK(ratio_bound(LTKind::LT, a) < ratio_bound(LTKind::CLR, a));
    for (LTKind kind : {LTKind::CLR, LTKind::LT}) {
      CHECK(std::abs(ratio_bound(kind, Alpha(k / 10.0 + 1e-6)) - ratio_bound(kind, a)) < 1e-3);
    }
  }
}

TEST_CASE("semiclassical constants") {
  CHECK(std::abs(semiclassical(1, 1.0, SemiclassicalOrder::Zeroth) - 1.0 / kPi) < 1e-16);
  CHECK(std::abs(semiclassical(2, 1.0, SemiclassicalOrder::Zeroth) - 1.0 / (4.0 * kPi)) < 1e-16);
  CHECK(std::abs(semiclassical(1, 1.0, SemiclassicalOrder::First) - 2.0 / (3.0 * kPi)) < 1e-16);
  // |B_1| = 4 pi / 3 in three dimensions
  const double ball3 = (4.0 * kPi / 3.0) / std::pow(2 * kPi, 3);
  CHECK(std::abs(semiclassical(3, 0.5, SemiclassicalOrder::Zeroth) / ball3 - 1.0) < 1e-15);
  CHECK(std::isfinite(semiclassical(400, 1.0, SemiclassicalOrder::First)));
}

TEST_CASE("small-alpha asymptotes") {
  CHECK(std::abs(asymptote_e2() - 5.34282282821899008895629117619) < 1e-14);
  CHECK(std::abs(asymptote_e3() - 1.96551467632322704905320662242) < 1e-14);
  const AsymptoteProbe clr = asymptote_probe(LTKind::CLR, {1e-2, 1e-3});
  const AsymptoteProbe lt = asymptote_probe(LTKind::LT, {1e-2, 1e-3});
  CHECK(std::abs(clr.samples.back().bound / asymptote_e2() - 1.0) < 0.01);
  CHECK(std::abs(lt.samples.back().bound / asymptote_e3() - 1.0) < 0.01);
  const AsymptoteProbe clr4 = asymptote_probe(LTKind::CLR, {1e-4});
  const AsymptoteProbe lt4 = asymptote_probe(LTKind::LT, {1e-4});
  CHECK(std::abs(clr4.samples[0].bound / asymptote_e2() - 1.0) < 0.001);
  CHECK(std::abs(lt4.samples[0].bound / asymptote_e3() - 1.0) < 0.001);

  const AsymptotePairing pairing = asymptote_pairing({1e-3});
  CHECK(pairing.covers_both);
  CHECK(pairing.clr_to_e2);
  CHECK(pairing.quoted_pairing_disagrees);

  CHECK_THROWS_AS(asymptote_probe(LTKind::LT, {0.1}), DomainError);
  CHECK_THROWS_AS(asymptote_probe(LTKind::LT, {}), DomainError);
}
