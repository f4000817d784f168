#include "dirichlet/kernel.hpp"

#include <array>
#include <cmath>
#include <string>

#include "dirichlet/error.hpp"
#include "dirichlet/piecewise.hpp"
#include "dirichlet/quadrature.hpp"
#include "dirichlet/summation.hpp"

namespace dirichlet {

KernelOrder::KernelOrder(long long n) {
  if (n < 0 || n > kMax) {
    throw DomainError("kernel order " + std::to_string(n) + " outside [0, 1e6]");
  }
  n_ = static_cast<int>(n);
}

double cosine_sum(KernelOrder n, double t) {
  const int order = n.value();
  if (order > 1000) {
    CompensatedSum sum;
    sum += 0.5;
    for (int k = 1; k <= order; ++k) sum += std::cos(k * t);
    return sum.value();
  }
  double sum = 0.5;
  for (int k = 1; k <= order; ++k) sum += std::cos(k * t);
  return sum;
}

double dirichlet_kernel(KernelOrder n, double t) {
  const double half_order = n.value() + 0.5;
  const double r = std::remainder(t, 2.0 * kPi);
  const double u = half_order * r;
  if (std::fabs(r) < kKernelSingularityThreshold) {
    // 2 sin(r/2) = r (1 - r^2/24 + ...)
    const double denominator = 1.0 - r * r / 24.0;
    if (std::fabs(u) < 1e-3) {
      return half_order * (1.0 - u * u / 6.0) / denominator;
    }
    return std::sin(u) / (r * denominator);
  }
  return std::sin(u) / (2.0 * std::sin(0.5 * r));
}

double kernel_mean(KernelOrder n, double rel_tol) {
  const std::array<double, 3> edges{-kPi, 0.0, kPi};
  const QuadratureOptions options{.rel_tol = rel_tol,
                                  .max_panel_width = kPi / (n.value() + 1)};
  const auto r = integrate([n](double t) { return dirichlet_kernel(n, t); },
                           edges, options);
  return r.value / kPi;
}

}  // namespace dirichlet
