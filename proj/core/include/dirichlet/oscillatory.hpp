#pragma once

#include <span>
#include <vector>

#include "dirichlet/piecewise.hpp"
#include "dirichlet/quadrature.hpp"
#include "dirichlet/report.hpp"

namespace dirichlet {

/// Oscillation frequency i > 0 of sin(i beta).
class Frequency {
 public:
  /// Throws DomainError unless i is finite and positive.
  explicit Frequency(double i);
  double value() const noexcept { return i_; }

 private:
  double i_;
};

/// sin(i beta) / sin(beta) is replaced by its limit i below this beta.
inline constexpr double kWeightSingularityThreshold = 1e-8;

/// sin(i beta) / sin(beta) for 0 <= beta <= pi/2.
double oscillatory_weight(double i, double beta);

/// Blocks of integral_0^h f(b) sin(i b)/sin(b) db between consecutive
/// zeros of sin(i b): [0, pi/i], [pi/i, 2pi/i], ..., [r pi/i, h]. The
/// trailing remainder block is present only when h is not a multiple of
/// pi/i.
struct SignBlockDecomposition {
  double frequency = 0.0;
  double h = 0.0;
  /// Number of full blocks, floor(h i / pi).
  int r = 0;
  std::vector<double> boundaries;
  /// Signed block integrals.
  std::vector<double> block_values;
  /// |integral of sin(i b)/sin(b)| over each block.
  std::vector<double> K;
  /// |block_values| / K: the mean value of f the block weight sees.
  std::vector<double> rho;

  std::size_t block_count() const noexcept { return block_values.size(); }
  bool has_remainder() const noexcept {
    return block_values.size() > static_cast<std::size_t>(r);
  }
};

/// Throws DomainError unless 0 < h <= pi/2; QuadratureError.
/// The ordering and bracketing invariants hold when f is continuous,
/// positive and decreasing on [0, h]; the routine itself accepts any f.
SignBlockDecomposition decompose(const Integrand& f, Frequency i, double h,
                                 double rel_tol = 1e-8);

/// As above for a PiecewiseFunction, which must be continuous and monotone
/// on [0, h] (DomainError otherwise).
SignBlockDecomposition decompose(const PiecewiseFunction& f, Frequency i,
                                 double h, double rel_tol = 1e-8);

/// k_nu = |integral of sin(g)/g over [(nu-1) pi, nu pi]|, nu >= 1.
double sine_block(int nu, double rel_tol = 1e-10);

/// The alternating series k_1 - k_2 + k_3 - ... which sums to pi/2.
struct AlternatingTail {
  /// k[j] = k_{j+1}, for nu = 1 .. n_max + 1 (one extra term so every
  /// S_n has its bound k_{n+1}).
  std::vector<double> k;
  /// partial_sums[j] = S_{j+1}, for n = 1 .. n_max.
  std::vector<double> partial_sums;
};

/// Throws DomainError if n_max < 1; QuadratureError.
AlternatingTail tail(int n_max, double rel_tol = 1e-10);

/// integral_g^h f(b) sin(i b)/sin(b) db for each i in the schedule. The
/// predicted limit is (pi/2) f(0) when g = 0, otherwise 0.
///
/// Throws DomainError unless 0 <= g < h <= pi/2 and the schedule is
/// positive and increasing.
ConvergenceReport limit_verify(const Integrand& f, double g, double h,
                               std::span<const double> schedule,
                               double rel_tol = 1e-8);

/// As above; f must be continuous and monotone on the open interval (g, h).
/// f(0+) is the right limit at 0.
ConvergenceReport limit_verify(const PiecewiseFunction& f, double g, double h,
                               std::span<const double> schedule,
                               double rel_tol = 1e-8);

struct GroupTail {
  /// Sum of block_values from block m+1 to the end.
  double tail_sum;
  /// |block_values| of block m+1.
  double first_term;
};

/// Splits the blocks after the first m (m even, 0 <= m < r). For positive
/// decreasing f, 0 < tail_sum <= first_term, strict when more than one
/// block follows. Throws DomainError for odd m or m >= r.
GroupTail group_tail_bound(const SignBlockDecomposition& d, int m);

}  // namespace dirichlet
