#pragma once

#include <span>

namespace dirichlet {

/// Neumaier's variant of Kahan summation. Unlike plain Kahan it stays
/// compensated when an addend is larger than the running sum.
class CompensatedSum {
 public:
  CompensatedSum& operator+=(double x) noexcept {
    const double t = sum_ + x;
    if (abs(sum_) >= abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
    return *this;
  }

  double value() const noexcept { return sum_ + carry_; }

 private:
  static double abs(double x) noexcept { return x < 0 ? -x : x; }

  double sum_ = 0.0;
  double carry_ = 0.0;
};

/// Correctly rounded sum of `values` (Shewchuk's partials algorithm).
/// The result does not depend on the order of the inputs, so a set
/// containing v and -v contributes exactly zero.
double exact_sum(std::span<const double> values);

}  // namespace dirichlet
