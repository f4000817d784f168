#include <cmath>

#include "dirichlet/error.hpp"
#include "dirichlet/kernel.hpp"
#include "dirichlet/piecewise.hpp"
#include "doctest.h"

using namespace dirichlet;

TEST_SUITE("kernel") {
  TEST_CASE("cosine sum") {
    CHECK(cosine_sum(KernelOrder{0}, 1.234) == 0.5);
    CHECK(cosine_sum(KernelOrder{1}, kPi) == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(cosine_sum(KernelOrder{5}, 0.0) == 5.5);
  }

  TEST_CASE("closed form") {
    CHECK(dirichlet_kernel(KernelOrder{7}, 0.0) == 7.5);
    CHECK(dirichlet_kernel(KernelOrder{1}, kPi) == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(std::fabs(dirichlet_kernel(KernelOrder{20}, 0.37) - cosine_sum(KernelOrder{20}, 0.37)) <
          1e-12);
    // Singular at every multiple of 2 pi.
    CHECK(dirichlet_kernel(KernelOrder{3}, 2 * kPi) == doctest::Approx(3.5).epsilon(1e-14));
    CHECK(dirichlet_kernel(KernelOrder{3}, -4 * kPi) == doctest::Approx(3.5).epsilon(1e-14));
  }

  TEST_CASE("order bounds") {
    CHECK_THROWS_AS(KernelOrder{-1}, DomainError);
    CHECK_THROWS_AS(KernelOrder{1'000'001}, DomainError);
    CHECK(KernelOrder{1'000'000}.value() == 1'000'000);
  }

  TEST_CASE("identity with the cosine sum away from the singularity") {
    double worst = 0.0;
    for (int n = 0; n <= 64; ++n) {
      for (int j = 0; j < 512; ++j) {
        const double t = -2 * kPi + 4 * kPi * (j + 0.5) / 512.0;
        if (std::fabs(t) < 1e-2 || std::fabs(std::fabs(t) - 2 * kPi) < 1e-2) continue;
        worst = std::max(worst, std::fabs(cosine_sum(KernelOrder{n}, t) -
                                          dirichlet_kernel(KernelOrder{n}, t)));
      }
    }
    CHECK(worst < 1e-10);
  }

  TEST_CASE("large order uses compensated summation and still agrees") {
    const KernelOrder n{5000};
    for (double t : {0.1, 1.0, 2.5, -3.0}) {
      CHECK(std::fabs(cosine_sum(n, t) - dirichlet_kernel(n, t)) < 1e-9);
    }
  }

  TEST_CASE("continuity across the singularity threshold") {
    const double tau = kKernelSingularityThreshold;
    for (int n = 0; n <= 64; ++n) {
      const KernelOrder k{n};
      for (double t : {tau * (1 - 1e-3), tau * (1 + 1e-3), -tau * (1 - 1e-3), -tau * (1 + 1e-3)}) {
        CHECK(std::fabs(dirichlet_kernel(k, t) - (n + 0.5)) < 1e-4);
      }
    }
    // Quadratic departure: D_n(t) = (n+1/2) - (n+1/2)((n+1/2)^2 - 1/4) t^2 / 6 + O(t^4).
    const double t = 1e-4;
    for (int n : {1, 10, 64}) {
      const double m = n + 0.5;
      const double expected = m - m * (m * m - 0.25) * t * t / 6.0;
      CHECK(dirichlet_kernel(KernelOrder{n}, t) == doctest::Approx(expected).epsilon(1e-10));
    }
  }

  TEST_CASE("periodicity and parity") {
    for (int n : {0, 1, 7, 33, 64}) {
      const KernelOrder k{n};
      for (double t : {0.3, 1.7, -2.9, 3.1, 1e-7}) {
        CHECK(std::fabs(dirichlet_kernel(k, t) - dirichlet_kernel(k, t + 2 * kPi)) < 1e-10);
        CHECK(dirichlet_kernel(k, -t) == dirichlet_kernel(k, t));
      }
    }
  }

  TEST_CASE("kernel mean is one") {
    CHECK(kernel_mean(KernelOrder{0}) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::fabs(kernel_mean(KernelOrder{3}) - 1.0) < 1e-10);
    CHECK(std::fabs(kernel_mean(KernelOrder{50}) - 1.0) < 1e-8);
  }
}
