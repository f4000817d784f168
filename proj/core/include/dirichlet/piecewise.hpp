#pragma once

#include <numbers>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

namespace dirichlet {

inline constexpr double kPi = std::numbers::pi;

enum class Direction { increasing, decreasing, constant };

std::string_view to_string(Direction d) noexcept;

/// The closed set of monotone building blocks. Each one is monotone and
/// bounded on any finite interval where it is defined, so both properties
/// can be checked from parameters and endpoint values alone.
namespace primitive {

struct Constant {
  double c;
};

/// slope * x + intercept
struct Affine {
  double slope;
  double intercept;
};

/// scale * exp(rate * x)
struct Exponential {
  double scale;
  double rate;
};

/// scale * (x - origin)^exponent, exponent > 0, origin <= segment lo.
struct Power {
  double scale;
  double origin;
  double exponent;
};

/// Linear interpolation through (x[j], y[j]); x strictly increasing and
/// spanning the segment, y monotone.
struct MonotoneTable {
  std::vector<double> x;
  std::vector<double> y;
};

}  // namespace primitive

using Primitive =
    std::variant<primitive::Constant, primitive::Affine, primitive::Exponential,
                 primitive::Power, primitive::MonotoneTable>;

double evaluate(const Primitive& p, double x);

/// One monotone piece of a PiecewiseFunction on [lo, hi].
class MonotoneSegment {
 public:
  /// Validates the primitive on [lo, hi]. If `declared` is given it must
  /// agree with the primitive's actual direction (a constant primitive is
  /// compatible with any declaration).
  ///
  /// Throws CoverageError (bad interval), UnboundedError (non-finite or
  /// undefined values), MonotonicityError, SyntaxError (malformed table).
  MonotoneSegment(double lo, double hi, Primitive primitive,
                  std::optional<Direction> declared = std::nullopt);

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  Direction direction() const noexcept { return direction_; }
  const Primitive& primitive() const noexcept { return primitive_; }

  /// Limit from inside the segment at lo and hi.
  double value_at_lo() const noexcept { return value_lo_; }
  double value_at_hi() const noexcept { return value_hi_; }

  double operator()(double x) const { return evaluate(primitive_, x); }

 private:
  double lo_;
  double hi_;
  Primitive primitive_;
  Direction direction_;
  double value_lo_;
  double value_hi_;
};

struct JumpPoint {
  double x;
  double left_limit;
  double right_limit;
};

struct OneSidedLimits {
  double left;
  double right;
};

/// A bounded function on [-pi, pi] with finitely many monotone pieces,
/// hence finitely many jumps and extrema. Immutable after construction.
class PiecewiseFunction {
 public:
  /// Sorts the segments by lo and checks that they tile [-pi, pi]
  /// exactly (CoverageError otherwise). Jumps are derived from mismatched
  /// endpoint values at shared boundaries.
  explicit PiecewiseFunction(std::vector<MonotoneSegment> segments);

  std::span<const MonotoneSegment> segments() const noexcept { return segments_; }
  std::span<const JumpPoint> jumps() const noexcept { return jumps_; }

  /// Value at x in [-pi, pi]. Segments own [lo, hi); the last one also
  /// owns pi. Throws DomainError outside the interval.
  double eval(double x) const;
  double operator()(double x) const { return eval(x); }

  /// eval() with x clamped into [-pi, pi]; for integrands whose abscissae
  /// may round a few ulps past the ends.
  double eval_clamped(double x) const;

  /// Exact one-sided limits from segment endpoint values. At -pi the left
  /// slot holds phi(pi-), and at pi the right slot holds phi(-pi+), i.e.
  /// the periodic wrap.
  OneSidedLimits one_sided_limits(double x) const;

  /// Interior boundaries that are a jump or a change of monotone
  /// direction, ascending.
  std::vector<double> extrema_and_jumps() const;

  /// Every interior segment boundary, ascending.
  std::vector<double> breakpoints() const;

  /// Segment boundaries together with the interior knots of monotone
  /// tables, ascending: everywhere phi or its derivative may jump.
  std::vector<double> smoothness_breaks() const;

  /// max |phi| (attained at segment endpoints since pieces are monotone).
  double sup_norm() const noexcept;

 private:
  std::size_t owner(double x) const;

  std::vector<MonotoneSegment> segments_;
  std::vector<JumpPoint> jumps_;
};

}  // namespace dirichlet
