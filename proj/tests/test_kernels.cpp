// Copyright 2026 The threelines Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <cmath>

#include "threelines/kernels.hpp"
#include "threelines/quadrature.hpp"

using namespace threelines;

namespace {

// direct textbook formulas, valid while cosh does not overflow
double poisson_naive(double y, double x) { return 0.5 * std::sin(kPi * y) / (std::cosh(kPi * x) - std::cos(kPi * y)); }
double conjugate_naive(double y, double x) {
  return 0.5 * std::sinh(kPi * x) / (std::cosh(kPi * x) - std::cos(kPi * y));
}
Complex poisson_complex_naive(double a, Complex z) {
  return 0.5 * std::sin(kPi * a) / (std::cosh(kPi * z) - std::cos(kPi * a));
}
Complex blaschke_naive(double a, Complex z) {
  const Complex i(0, 1);
  return std::exp(-i * kPi * a) * (std::exp(i * kPi * a) - std::exp(kPi * z)) /
         (std::exp(kPi * z) - std::exp(-i * kPi * a));
}

}  // namespace

TEST_CASE("poisson values") {
  CHECK(poisson(0.5, 0.0) == doctest::Approx(0.5).epsilon(1e-16));
  // 0.5 / cosh(pi), mpmath
  CHECK(std::abs(poisson(0.5, 1.0) - 0.043133369167027207) < 1e-16);
  for (double y : {0.05, 0.3, 0.5, 0.8, 0.99}) {
    for (double x : {-7.0, -2.0, -0.3, 0.0, 0.01, 1.0, 4.5, 20.0}) {
      CHECK(std::abs(poisson(y, x) - poisson_naive(y, x)) < 1e-14 * poisson_naive(y, x));
      CHECK(std::abs(std::exp(log_poisson(y, x)) - poisson(y, x)) < 1e-14 * poisson(y, x));
      CHECK(std::abs(conjugate_poisson(y, x) - conjugate_naive(y, x)) < 1e-14 * (1 + std::abs(conjugate_naive(y, x))));
    }
  }
  CHECK(poisson(0.5, 200.0) > 0.0);
  CHECK(poisson(0.5, 400.0) == 0.0);
  CHECK(log_poisson(0.5, 1000.0) == doctest::Approx(-kPi * 1000.0).epsilon(1e-12));
  CHECK_THROWS_AS(poisson(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(poisson(1.0, 1.0), DomainError);
  CHECK_THROWS_AS(poisson(0.5, std::nan("")), NonFiniteError);
}

TEST_CASE("reflected kernel is the complementary Poisson kernel") {
  for (double y = 0.05; y < 1.0; y += 0.05) {
    for (double x = -5.0; x <= 5.0; x += 0.25) {
      const long double pl = 3.141592653589793238462643383279502884L;
      const double q = static_cast<double>(0.5L * std::sin(pl * y) / (std::cosh(pl * x) + std::cos(pl * y)));
      CHECK(std::abs(poisson_reflected(y, x) - q) < 1e-15 * std::max(1.0, q));
      CHECK(std::abs(poisson_reflected(y, x) - poisson(1.0 - y, x)) < 1e-14 * q);
    }
  }
}

TEST_CASE("complex kernel") {
  const Alpha half(0.5);
  CHECK(std::abs(poisson_complex(half, {0.0, 0.0}) - Complex(0.5, 0.0)) < 4e-16);
  for (double a : {0.1, 0.37, 0.5, 0.9}) {
    for (double x = -3.0; x <= 3.0; x += 0.5) {
      CHECK(std::abs(poisson_complex(Alpha(a), {x, 0.0}).real() - poisson(a, x)) < 1e-15);
      CHECK(std::abs(poisson_complex(Alpha(a), {x, -1.0}) + poisson(1 - a, x)) < 1e-14);
      for (double y : {-0.8, -0.2, 0.3, 0.95}) {
        const Complex z(x, y);
        const Complex ref = poisson_complex_naive(a, z);
        CHECK(std::abs(poisson_complex(Alpha(a), StripPoint::from_complex(z)) - ref) < 1e-13 * (1 + std::abs(ref)));
      }
    }
  }
  CHECK_THROWS_AS(poisson_complex(half, {0.0, 0.5}), PoleError);
  CHECK_THROWS_AS(poisson_complex(half, {0.0, -0.5}), PoleError);
}

TEST_CASE("residue at i alpha by contour quadrature") {
  for (double a : {0.2, 0.5, 0.7}) {
    const double r = 1e-2;
    std::function<Complex(double)> integrand = [a, r](double th) {
      const Complex dz = Complex(0, 1) * std::polar(r, th);
      return poisson_complex(Alpha(a), StripPoint::from_complex(Complex(0, a) + std::polar(r, th))) * dz;
    };
    const Complex contour = integrate_interval_complex(integrand, 0.0, 2 * kPi, Tolerance{1e-14, 1e-14}).value;
    const Complex residue = contour / Complex(0, 2 * kPi);
    CHECK(std::abs(residue - 1.0 / Complex(0, 2 * kPi)) < 1e-12);
  }
}

TEST_CASE("Fourier transform") {
  CHECK(poisson_ft(0.3, 0.0) == doctest::Approx(0.7).epsilon(1e-16));
  CHECK(std::abs(poisson_ft(0.5, 1.0) - 0.44340944198503695) < 1e-16);
  for (double k : {1.0, 2.0, 3.0}) CHECK(std::abs(poisson_ft(0.5, k) - 0.5 / std::cosh(k / 2)) < 1e-15);
  CHECK(std::abs(poisson_ft(0.3, 1e-7) - 0.7) < 1e-13);
  CHECK(std::abs(poisson_ft(0.3, 2e-6) - std::sinh(0.7 * 2e-6) / std::sinh(2e-6)) < 1e-12);
  CHECK(poisson_ft(0.3, 800.0) >= 0.0);
  CHECK(poisson_ft(0.3, -2.0) == poisson_ft(0.3, 2.0));
  for (int i = 1; i <= 9; ++i) {
    const double y = i / 10.0;
    for (double k = -10.0; k <= 10.0; k += 0.5) {
      LineFunction f{[=](double x) { return poisson(y, x) * std::cos(k * x); }, Envelope{kPi, 0, 1, 1.1, 0}, {0.0}};
      const double q = integrate_line(f, Tolerance{1e-13, 1e-13}).value;
      INFO("y = " << y << ", k = " << k);
      CHECK(std::abs(poisson_ft(y, k) - q) < 1e-10);
    }
  }
}

TEST_CASE("conjugate kernel") {
  CHECK(conjugate_poisson(0.5, 0.0) == 0.0);
  CHECK(std::abs(conjugate_poisson(0.3, 60.0) - 0.5) < 1e-15);
  CHECK(std::abs(conjugate_poisson(0.3, -60.0) + 0.5) < 1e-15);
  for (double y = 0.1; y < 0.95; y += 0.1) {
    for (double x = -4.0; x <= 4.0; x += 0.125) {
      const Complex f = strip_cauchy_kernel(Complex(x, y));
      CHECK(std::abs(f.real() - poisson(y, x)) < 1e-14);
      CHECK(std::abs(f.imag() - conjugate_poisson(y, x)) < 1e-14);
    }
  }
}

TEST_CASE("Blaschke factor") {
  for (double a : {0.1, 0.5, 0.83}) {
    const Alpha al(a);
    CHECK(std::abs(blaschke(al, {0.0, a})) < 1e-15);
    double worst = 0.0;
    for (double x = -20.0; x <= 20.0; x += 0.01) {
      worst = std::max(worst, std::abs(std::abs(blaschke(al, {x, 0.0})) - 1.0));
      worst = std::max(worst, std::abs(std::abs(blaschke(al, {x, 1.0})) - 1.0));
    }
    CHECK(worst < 1e-12);
    for (double x : {-2.0, -0.4, 0.3, 1.7}) {
      for (double y : {-0.6, 0.2, 0.7}) {
        const Complex z(x, y);
        CHECK(std::abs(blaschke(al, StripPoint::from_complex(z)) - blaschke_naive(a, z)) < 1e-13);
      }
    }
    CHECK_THROWS_AS(blaschke(al, {0.0, -a}), PoleError);
  }
  CHECK(std::abs(blaschke(Alpha(0.5), {0.0, 0.0}) - 1.0) < 1e-15);
}

TEST_CASE("cancelled product near the zero of the Blaschke factor") {
  for (int i = 1; i <= 9; ++i) {
    const double a = i / 10.0;
    const Alpha al(a);
    const double target = 1.0 / (4.0 * std::sin(kPi * a));
    CHECK(std::abs(poisson_blaschke_product(al, {0.0, a}) - target) < 1e-14 * target);
    const double r = 1e-4;
    Complex mean = 0.0;
    for (int k = 0; k < 4; ++k) {
      const Complex z = Complex(0, a) + std::polar(r, kPi / 4 + k * kPi / 2);
      const Complex cancelled = poisson_blaschke_product(al, StripPoint::from_complex(z));
      const Complex direct = poisson_complex(al, StripPoint::from_complex(z)) * blaschke(al, StripPoint::from_complex(z));
      CHECK(std::abs(cancelled - direct) < 1e-9 * target);
      mean += direct / 4.0;
    }
    CHECK(std::abs(mean - target) < 1e-6);
  }
}
