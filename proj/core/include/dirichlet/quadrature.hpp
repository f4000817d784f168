#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace dirichlet {

using Integrand = std::function<double(double)>;

struct QuadratureOptions {
  /// Target for |estimated error| / |integral|.
  double rel_tol = 1e-10;
  /// Initial panels are no wider than this. Used to place at least one
  /// panel per half-oscillation of a known frequency.
  double max_panel_width = std::numeric_limits<double>::infinity();
  std::size_t max_panels = std::size_t{1} << 17;
};

struct QuadratureResult {
  double value = 0.0;
  /// Sum of per-panel |Kronrod - Gauss| estimates.
  double error = 0.0;
  /// Kronrod estimate of the integral of |f|.
  double l1 = 0.0;
  std::size_t panels = 0;
};

/// Adaptive Gauss-Kronrod (7/15) quadrature over [breakpoints.front(),
/// breakpoints.back()]. Every breakpoint is a panel boundary and is never
/// straddled, so integrands may jump or kink there.
///
/// Panels are refined in rounds: each round bisects every panel whose
/// error exceeds its width-proportional share of the global target.
/// Refinement is therefore independent of panel order, and the total is
/// an exactly rounded sum of panel contributions. An integrand that is
/// odd about the midpoint of a mirror-symmetric breakpoint set integrates
/// to exactly zero.
///
/// Throws DomainError if breakpoints are not strictly increasing and
/// QuadratureError if the panel budget is exhausted.
QuadratureResult integrate(const Integrand& f,
                           std::span<const double> breakpoints,
                           const QuadratureOptions& options = {});

/// Convenience overload for a single interval; returns only the value.
double integrate(const Integrand& f, double lo, double hi,
                 double rel_tol = 1e-10);

/// Sorted, deduplicated breakpoint list for [lo, hi]: keeps the interior
/// points that fall strictly inside, merges points closer than a few ulps.
std::vector<double> make_breakpoints(double lo, double hi,
                                     std::span<const double> interior = {});

}  // namespace dirichlet
