#include <array>
#include <cmath>
#include <vector>

#include "dirichlet/error.hpp"
#include "dirichlet/fourier.hpp"
#include "dirichlet/function_spec.hpp"
#include "doctest.h"
#include "generators.hpp"
#include "oracles.hpp"

using namespace dirichlet;
namespace p = dirichlet::primitive;

namespace {

PiecewiseFunction sawtooth() {
  return PiecewiseFunction({MonotoneSegment(-kPi, kPi, p::Affine{1.0, 0.0})});
}

PiecewiseFunction square_wave() {
  return PiecewiseFunction({MonotoneSegment(-kPi, 0.0, p::Constant{-1.0}),
                            MonotoneSegment(0.0, kPi, p::Constant{1.0})});
}

PiecewiseFunction triangle() {
  return PiecewiseFunction({MonotoneSegment(-kPi, 0.0, p::Affine{-1.0, 0.0}),
                            MonotoneSegment(0.0, kPi, p::Affine{1.0, 0.0})});
}

// |x| on [-pi, pi]: a0 = pi/2, a_k = 2((-1)^k - 1) / (pi k^2).
double triangle_a(int k) { return 2.0 * ((k % 2 ? -1.0 : 1.0) - 1.0) / (oracle::pi * k * k); }

}  // namespace

TEST_SUITE("fourier") {
  TEST_CASE("sawtooth coefficients") {
    const auto c = coefficients(sawtooth(), 40);
    CHECK(c.order() == 40);
    CHECK(c.a0 == 0.0);
    for (int k = 1; k <= 40; ++k) {
      CHECK(c.a[k - 1] == 0.0);
      CHECK(std::fabs(c.b[k - 1] - oracle::sawtooth_b(k)) < 1e-10);
    }
  }

  TEST_CASE("square wave coefficients") {
    const auto c = coefficients(square_wave(), 40);
    CHECK(c.a0 == 0.0);
    for (int k = 1; k <= 40; ++k) {
      CHECK(c.a[k - 1] == 0.0);
      CHECK(std::fabs(c.b[k - 1] - oracle::square_b(k)) < 1e-10);
    }
  }

  TEST_CASE("triangle and constant coefficients") {
    const auto c = coefficients(triangle(), 30);
    CHECK(c.a0 == doctest::Approx(oracle::pi / 2).epsilon(1e-12));
    for (int k = 1; k <= 30; ++k) {
      CHECK(std::fabs(c.a[k - 1] - triangle_a(k)) < 1e-10);
      CHECK(std::fabs(c.b[k - 1]) < 1e-12);
    }
    const PiecewiseFunction flat({MonotoneSegment(-kPi, kPi, p::Constant{2.5})});
    const auto d = coefficients(flat, 10);
    CHECK(d.a0 == doctest::Approx(2.5).epsilon(1e-14));
    for (int k = 1; k <= 10; ++k) {
      CHECK(std::fabs(d.a[k - 1]) < 1e-13);
      CHECK(std::fabs(d.b[k - 1]) < 1e-13);
    }
    CHECK_THROWS_AS(coefficients(flat, 0), DomainError);
  }

  TEST_CASE("partial sums against the analytic series") {
    const auto c = coefficients(sawtooth(), 100);
    for (double x : {-2.5, -0.3, 1.0, 2.0, 3.0}) {
      for (int n : {1, 10, 100}) {
        CHECK(std::fabs(partial_sum(c, x, n) - oracle::sawtooth_partial(x, n)) < 1e-9);
      }
    }
    CHECK(partial_sum(c, 0.7, 0) == 0.0);
    CHECK_THROWS_AS(partial_sum(c, 0.0, 101), DomainError);
    CHECK_THROWS_AS(partial_sum(c, 3.2, 1), DomainError);
  }

  TEST_CASE("square wave at the jump gives exactly zero") {
    const auto c = coefficients(square_wave(), 200);
    for (int n = 0; n <= 200; ++n) CHECK(partial_sum(c, 0.0, n) == 0.0);
    CHECK(predicted_limit(square_wave(), 0.0) == 0.0);
  }

  TEST_CASE("square wave at pi/2 approaches 1") {
    const auto c = coefficients(square_wave(), 1000);
    const double half = oracle::pi / 2;
    for (int n : {10, 100, 1000}) {
      CHECK(std::fabs(partial_sum(c, half, n) - oracle::square_partial(half, n)) < 1e-8);
    }
    CHECK(std::fabs(partial_sum(c, half, 1000) - 1.0) < 1e-3);
  }

  TEST_CASE("endpoint values coincide at -pi and pi") {
    const auto c = coefficients(sawtooth(), 50);
    for (int n : {1, 7, 50}) {
      CHECK(partial_sum(c, kPi, n) == 0.0);
      CHECK(partial_sum(c, -kPi, n) == partial_sum(c, kPi, n));
    }
    CHECK(predicted_limit(sawtooth(), kPi) == 0.0);
    CHECK(predicted_limit(sawtooth(), -kPi) == 0.0);
    CHECK(predicted_limit(sawtooth(), 1.0) == 1.0);
  }

  TEST_CASE("kernel path matches the coefficient path on fixed functions") {
    const auto saw = sawtooth();
    const auto sq = square_wave();
    const auto cs = coefficients(saw, 20);
    const auto cq = coefficients(sq, 20);
    for (double x : {-3.0, -1.0, 0.0, 0.4, 2.2, kPi}) {
      for (int n : {0, 1, 5, 20}) {
        CHECK(std::fabs(partial_sum_kernel(saw, x, n) - partial_sum(cs, x, n)) < 1e-8);
        CHECK(std::fabs(partial_sum_kernel(sq, x, n) - partial_sum(cq, x, n)) < 1e-8);
      }
    }
  }

  TEST_CASE("split integrals") {
    const auto saw = sawtooth();
    for (double x : {-2.0, -0.5, 0.0, 1.0, 3.0}) {
      for (int n : {1, 8, 30}) {
        const auto s = split_integrals(saw, x, n);
        CHECK(std::fabs((s.lower + s.upper) / kPi - partial_sum_kernel(saw, x, n)) < 1e-8);
      }
    }
    const auto at_pi = split_integrals(saw, kPi, 5);
    CHECK(at_pi.upper == 0.0);
    const auto at_minus_pi = split_integrals(saw, -kPi, 5);
    CHECK(at_minus_pi.lower == 0.0);

    // Odd function: the two halves at -x and x swap with a sign change.
    const auto a = split_integrals(saw, 0.8, 6);
    const auto b = split_integrals(saw, -0.8, 6);
    CHECK(std::fabs(a.lower + b.upper) < 1e-10);
    CHECK(std::fabs(a.upper + b.lower) < 1e-10);
  }

  TEST_CASE("beta split points") {
    CHECK(beta_split_points(sawtooth(), 1.0, Side::upper).empty());
    const auto lower = beta_split_points(square_wave(), 0.5, Side::lower);
    REQUIRE(lower.size() == 2);
    CHECK(lower[0] == doctest::Approx(0.25));
    CHECK(lower[1] == doctest::Approx(oracle::pi / 2));
    CHECK(beta_split_points(square_wave(), 0.5, Side::upper).empty());
    CHECK(beta_split_points(triangle(), 0.0, Side::upper).empty());
  }

  TEST_CASE("convergence report") {
    const std::array<int, 3> schedule{10, 100, 1000};
    const auto r = convergence_report(sawtooth(), 1.0, schedule);
    CHECK(r.predicted == 1.0);
    REQUIRE(r.errors.size() == 3);
    // Independent series sums; the error at 1000 is not below the one at 100.
    for (int j = 0; j < 3; ++j) {
      const double expected = std::fabs(oracle::sawtooth_partial(1.0, schedule[j]) - 1.0);
      CHECK(std::fabs(r.errors[j] - expected) < 1e-8);
    }
    CHECK(r.errors[2] < 0.01);
    CHECK(r.error_decreased());
    CHECK_FALSE(r.errors_strictly_decreasing());

    const auto sq = convergence_report(square_wave(), 0.0, schedule);
    CHECK(sq.predicted == 0.0);
    REQUIRE(sq.minus_reading.has_value());
    CHECK(*sq.minus_reading == 1.0);
    for (double v : sq.values) CHECK(v == 0.0);

    const std::array<int, 2> bad{5, 5};
    CHECK_THROWS_AS(convergence_report(sawtooth(), 1.0, bad), DomainError);
  }

  TEST_CASE("two-path equivalence on random functions") {
    gen::Rng rng(777);
    for (int trial = 0; trial < 12; ++trial) {
      const auto f = parse_spec(gen::random_spec(rng));
      const auto c = coefficients(f, 16);
      for (int j = 0; j < 4; ++j) {
        const double x = gen::uniform(rng, -kPi, kPi);
        for (int n : {0, 3, 16}) {
          const double kernel = partial_sum_kernel(f, x, n);
          REQUIRE(std::fabs(kernel - partial_sum(c, x, n)) < 1e-6);
          const auto s = split_integrals(f, x, n);
          REQUIRE(std::fabs((s.lower + s.upper) / kPi - kernel) < 1e-8);
        }
      }
    }
  }
}
