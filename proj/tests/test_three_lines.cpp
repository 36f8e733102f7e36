// Copyright 2026 The threelines Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <cmath>
#include <random>

#include "threelines/kernels.hpp"
#include "threelines/three_lines.hpp"

using namespace threelines;

namespace {

// I(alpha) frozen from mpmath (closed form, 40 digits)
const std::pair<double, double> kITable[] = {
    {0.1, 0.19812304656150574118},   {0.2, -0.18793789755566817603}, {0.3, -0.32256422150658241554},
    {0.37, -0.35534734075792442686}, {0.5, -0.34657359027997265471}, {0.63, -0.28616612330506272765},
    {0.7, -0.24093048205807279997},  {0.9, -0.084975428670399412505},
};

const Exponent kGrid[] = {Exponent::from_p(1), Exponent::parse("4/3"), Exponent::from_p(2), Exponent::from_p(4),
                          Exponent::infinity()};

}  // namespace

TEST_CASE("I(alpha) on both routes") {
  for (const auto& [a, v] : kITable) {
    INFO("alpha = " << a);
    CHECK(std::abs(log_I(Alpha(a)) - v) < 1e-13);
    CHECK(std::abs(log_I(Alpha(a), Route::Quadrature, Tolerance{1e-12, 1e-12}) - v) < 1e-11);
  }
  // independent oracle for the integral route
  boost::math::quadrature::exp_sinh<double> es;
  const double a = 0.37;
  const double oracle = 2 * es.integrate([a](double t) { return poisson(a, t) * (log_poisson(a, t) - std::log(1 - a)); },
                                         0.0, std::numeric_limits<double>::infinity());
  CHECK(std::abs(oracle - log_I(Alpha(a))) < 1e-12);
  CHECK(std::abs(std::exp(log_I(Alpha(0.5))) - std::sqrt(0.5)) < 1e-15);
}

TEST_CASE("H spot values") {
  const auto one = Exponent::from_p(1), two = Exponent::from_p(2), inf = Exponent::infinity();
  for (Route r : {Route::ClosedForm, Route::Quadrature}) {
    for (int i = 1; i <= 9; ++i) CHECK(log_H(inf, inf, Alpha(i / 10.0), r).h == 1.0);
    CHECK(std::abs(log_H(one, one, Alpha(0.5), r).h - 0.5) < 1e-10);
    CHECK(std::abs(log_H(inf, two, Alpha(0.5), r).h - std::pow(2.0, -0.25)) < 1e-10);
    CHECK(std::abs(log_H(one, inf, Alpha(0.5), r).h - std::sqrt(0.5)) < 1e-10);
    CHECK(log_H(one, inf, Alpha(0.5), r).route == r);
  }
  CHECK(std::abs(log_H(Exponent::from_p(3), two, Alpha(0.37)).h - 0.76987110423943587123) < 1e-14);
  CHECK(std::abs(log_H(two, two, Alpha(0.3)).h - 0.75446427451021859168) < 1e-14);
}

TEST_CASE("duality, flip symmetry and route agreement on the grid") {
  for (const auto& p : kGrid) {
    for (const auto& q : kGrid) {
      for (int i = 1; i <= 9; ++i) {
        const Alpha a(i / 10.0);
        CHECK(duality_defect(p, q, a) < 1e-10);
        CHECK(flip_defect(p, q, a) < 1e-12);
      }
    }
  }
  CHECK(duality_defect(Exponent::infinity(), Exponent::infinity(), Alpha(0.5)) < 1e-15);
  CHECK(duality_defect(Exponent::from_p(1), Exponent::infinity(), Alpha(0.5)) < 1e-15);
  CHECK(duality_defect(Exponent::from_p(3), Exponent::from_p(2), Alpha(0.37)) < 1e-10);
  CHECK(std::abs(duality_target(Alpha(0.5)) - 0.5) < 1e-15);
}

TEST_CASE("log-linearity") {
  const auto one = Exponent::from_p(1), inf = Exponent::infinity();
  CHECK(loglinear_defect(one, one, inf, inf, 0.0, Alpha(0.3)) == 0.0);
  CHECK(loglinear_defect(one, one, inf, inf, 0.5, Alpha(0.5)) < 1e-15);
  CHECK(std::abs(log_H(Exponent::from_p(2), Exponent::from_p(2), Alpha(0.5)).h - std::sqrt(0.5)) < 1e-15);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_real_distribution<double> al(0.05, 0.95);
  for (int i = 0; i < 200; ++i) {
    const auto p0 = Exponent::from_recip(u(rng)), q0 = Exponent::from_recip(u(rng));
    const auto p1 = Exponent::from_recip(u(rng)), q1 = Exponent::from_recip(u(rng));
    CHECK(loglinear_defect(p0, q0, p1, q1, u(rng), Alpha(al(rng))) < 1e-10);
  }
}

TEST_CASE("Stein bound") {
  const auto inf = Exponent::infinity();
  CHECK(stein_bound(inf, inf, Alpha(0.3), 1.0, 1.0) == 1.0);
  CHECK(std::abs(stein_bound(inf, Exponent::from_p(2), Alpha(0.5), 1.0, 1.0) - std::pow(2.0, -0.25)) < 1e-15);
  CHECK(std::abs(stein_bound(inf, inf, Alpha(0.5), 2.0, 8.0) - 4.0) < 1e-15);
  CHECK_THROWS_AS(stein_bound(inf, inf, Alpha(0.5), -1.0, 1.0), DomainError);
}
