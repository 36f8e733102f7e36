// Copyright 2026 The threelines Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <limits>

#include "threelines/domain.hpp"

using namespace threelines;

TEST_CASE("conjugation examples") {
  CHECK(conjugate(Exponent::from_p(2)).recip() == 0.5);
  CHECK(conjugate(Exponent::from_p(1)).is_infinite());
  CHECK(conjugate(Exponent::from_p(4)) == Exponent::parse("4/3"));
  CHECK(conjugate(Exponent::infinity()).recip() == 1.0);
}

TEST_CASE("conjugation is an exact involution") {
  for (int i = 0; i <= 1000; ++i) {
    const double r = i / 1000.0;
    const Exponent p = Exponent::from_recip(r);
    CHECK(conjugate(conjugate(p)) == p);
    CHECK(p.recip() + conjugate(p).recip() == 1.0);
  }
  for (double pv : {1.0, 1.1, 4.0 / 3.0, 2.0, 3.0, 7.5, 1e6}) {
    const Exponent p = Exponent::from_p(pv);
    CHECK(conjugate(conjugate(p)) == p);
  }
}

TEST_CASE("interpolation") {
  const auto one = Exponent::from_p(1);
  const auto inf = Exponent::infinity();
  CHECK(interpolate_exponent(one, inf, 0.5).value() == doctest::Approx(2.0));
  CHECK(interpolate_exponent(Exponent::from_p(3), Exponent::from_p(3), 0.37).value() == doctest::Approx(3.0));
  CHECK(interpolate_exponent(Exponent::from_p(2), inf, 0.5).value() == doctest::Approx(4.0));
  const auto a = Exponent::from_p(1.7);
  const auto b = Exponent::from_p(5.3);
  CHECK(interpolate_exponent(a, b, 0.0) == a);
  CHECK(interpolate_exponent(a, b, 1.0) == b);
  CHECK_THROWS_AS(interpolate_exponent(a, b, -0.1), DomainError);
  CHECK_THROWS_AS(interpolate_exponent(a, b, 1.5), DomainError);
}

TEST_CASE("exponent parsing") {
  CHECK(Exponent::parse("inf").is_infinite());
  CHECK(Exponent::parse("2").recip() == 0.5);
  CHECK(Exponent::parse("4/3").recip() == 0.75);
  CHECK(Exponent::parse("1").recip() == 1.0);
  CHECK_THROWS_AS(Exponent::parse("0.5"), DomainError);
  CHECK_THROWS_AS(Exponent::parse("abc"), DomainError);
  CHECK_THROWS_AS(Exponent::parse("1/3"), DomainError);
  CHECK_THROWS_AS(Exponent::from_p(std::nan("")), DomainError);
  CHECK(Exponent::from_p(std::numeric_limits<double>::infinity()).is_infinite());
  CHECK(Exponent::parse("inf").to_string() == "inf");
  CHECK(Exponent::parse("2").to_string() == "2");
}

TEST_CASE("alpha bounds") {
  CHECK(Alpha(0.5).value() == 0.5);
  CHECK(Alpha(0.25).flipped().value() == 0.75);
  CHECK_THROWS_AS(Alpha(0.0), DomainError);
  CHECK_THROWS_AS(Alpha(1.0), DomainError);
  CHECK_THROWS_AS(Alpha(1e-10), DomainError);
  CHECK_THROWS_AS(Alpha(std::nan("")), DomainError);
}

TEST_CASE("strip points and tolerances") {
  CHECK_NOTHROW(StripPoint(3.0, -1.0));
  CHECK_THROWS_AS(StripPoint(0.0, 1.5), DomainError);
  CHECK_THROWS_AS(StripPoint(std::nan(""), 0.5), NonFiniteError);
  CHECK(StripPoint(1.0, 0.25).conj().y == -0.25);
  CHECK_THROWS_AS(Tolerance(0.0, 1e-10), DomainError);
  const auto t = Tolerance::uniform(1e-8).tightened(1e-10);
  CHECK(t.abs_tol == 1e-10);
  CHECK(t.rel_tol == 1e-10);
}
