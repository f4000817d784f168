#pragma once

#include <span>
#include <vector>

#include "dirichlet/piecewise.hpp"
#include "dirichlet/report.hpp"

namespace dirichlet {

/// Coefficients of
///   a0 + sum_k (a_k cos kx + b_k sin kx),
///   a0 = (1/2pi) int phi,  a_k = (1/pi) int phi cos k,  b_k = (1/pi) int phi sin k,
/// with integrals over [-pi, pi].
struct FourierCoefficients {
  double a0 = 0.0;
  /// a[k-1] = a_k, k = 1 .. order().
  std::vector<double> a;
  /// b[k-1] = b_k.
  std::vector<double> b;
  double tol = 0.0;

  int order() const noexcept { return static_cast<int>(a.size()); }
};

/// Throws DomainError if n_max < 1; QuadratureError.
FourierCoefficients coefficients(const PiecewiseFunction& f, int n_max,
                                 double tol = 1e-10);

/// a0 + sum_{k=1..n} (a_k cos kx + b_k sin kx). At x = +-pi the harmonics
/// take their exact values cos k pi = (-1)^k, sin k pi = 0, so the sums at
/// pi and -pi coincide. Throws DomainError for |x| > pi or n out of range.
double partial_sum(const FourierCoefficients& c, double x, int n);

/// The same partial sum computed as (1/pi) int phi(a) D_n(a - x) da with
/// the Dirichlet kernel D_n.
double partial_sum_kernel(const PiecewiseFunction& f, double x, int n,
                          double tol = 1e-10);

/// The kernel integral split at a = x and rewritten with a = x -+ 2b:
///   lower = int_0^{(pi+x)/2} sin((2n+1)b)/sin(b) phi(x - 2b) db
///   upper = int_0^{(pi-x)/2} sin((2n+1)b)/sin(b) phi(x + 2b) db
/// with (lower + upper)/pi = partial_sum_kernel(f, x, n). Integration
/// ranges longer than pi/2 are split at pi/2 and the outer piece is
/// reflected with b = pi - g onto [.., pi/2].
struct SplitIntegrals {
  double lower;
  double upper;
};

SplitIntegrals split_integrals(const PiecewiseFunction& f, double x, int n,
                               double tol = 1e-10);

enum class Side { lower, upper };

/// Jumps and extrema of f mapped into the b-domain of one split integral
/// (a = x - 2b for lower, a = x + 2b for upper), kept if strictly inside
/// (0, (pi -+ x)/2), ascending; pi/2 is added when the range exceeds it.
std::vector<double> beta_split_points(const PiecewiseFunction& f, double x,
                                      Side side);

/// 1/2 [phi(x+) + phi(x-)] inside, 1/2 [phi(pi-) + phi(-pi+)] at +-pi.
double predicted_limit(const PiecewiseFunction& f, double x);

/// Partial sums at x for each n in the schedule, from one coefficient set
/// of order max(schedule). Throws DomainError unless the schedule is
/// increasing and positive.
ConvergenceReport convergence_report(const PiecewiseFunction& f, double x,
                                     std::span<const int> schedule,
                                     double tol = 1e-10);

}  // namespace dirichlet
