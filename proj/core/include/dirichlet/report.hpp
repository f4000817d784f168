#pragma once

#include <optional>
#include <vector>

namespace dirichlet {

/// Computed values of a convergent sequence against its predicted limit.
struct ConvergenceReport {
  /// Evaluation abscissa (for limit_verify: the lower limit g).
  double x = 0.0;
  /// Harmonic counts n, or frequencies i.
  std::vector<double> schedule;
  std::vector<double> values;
  double predicted = 0.0;
  /// |value - predicted| per schedule entry.
  std::vector<double> errors;
  /// The literal minus-sign form 1/2[phi(x+) - phi(x-)] of the limit,
  /// kept alongside the mean for comparison. Unset where not applicable.
  std::optional<double> minus_reading;

  /// errors.back() < errors.front()
  bool error_decreased() const noexcept {
    return errors.size() >= 2 && errors.back() < errors.front();
  }

  /// Every error strictly below its predecessor.
  bool errors_strictly_decreasing() const noexcept {
    for (std::size_t j = 1; j < errors.size(); ++j) {
      if (!(errors[j] < errors[j - 1])) return false;
    }
    return !errors.empty();
  }
};

}  // namespace dirichlet
