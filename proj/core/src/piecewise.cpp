#include "dirichlet/piecewise.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "dirichlet/error.hpp"

namespace dirichlet {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Direction sign_direction(double s) {
  if (s > 0) return Direction::increasing;
  if (s < 0) return Direction::decreasing;
  return Direction::constant;
}

std::string interval(double lo, double hi) {
  std::ostringstream os;
  os.precision(17);
  os << "[" << lo << ", " << hi << "]";
  return os.str();
}

bool all_finite(std::span<const double> xs) {
  return std::all_of(xs.begin(), xs.end(),
                     [](double v) { return std::isfinite(v); });
}

// Validates the parameters and returns the primitive's direction.
Direction check_primitive(const Primitive& p, double lo, double hi) {
  return std::visit(
      Overloaded{
          [](const primitive::Constant& c) {
            if (!std::isfinite(c.c)) throw UnboundedError("constant is not finite");
            return Direction::constant;
          },
          [](const primitive::Affine& a) {
            if (!std::isfinite(a.slope) || !std::isfinite(a.intercept)) {
              throw UnboundedError("affine parameters are not finite");
            }
            return sign_direction(a.slope);
          },
          [](const primitive::Exponential& e) {
            if (!std::isfinite(e.scale) || !std::isfinite(e.rate)) {
              throw UnboundedError("exponential parameters are not finite");
            }
            return sign_direction(e.scale * e.rate);
          },
          [lo](const primitive::Power& p) {
            if (!std::isfinite(p.scale) || !std::isfinite(p.origin) ||
                !std::isfinite(p.exponent)) {
              throw UnboundedError("power parameters are not finite");
            }
            if (!(p.exponent > 0)) {
              throw UnboundedError("power exponent must be positive");
            }
            if (p.origin > lo) {
              throw UnboundedError(
                  "power origin lies inside the segment; (x - x0)^p is "
                  "undefined to its left");
            }
            return sign_direction(p.scale);
          },
          [lo, hi](const primitive::MonotoneTable& t) {
            if (t.x.size() < 2 || t.x.size() != t.y.size()) {
              throw SyntaxError(
                  "monotone-table needs matching x and y arrays of length >= 2");
            }
            if (!all_finite(t.x) || !all_finite(t.y)) {
              throw UnboundedError("monotone-table contains non-finite values");
            }
            for (std::size_t j = 1; j < t.x.size(); ++j) {
              if (!(t.x[j] > t.x[j - 1])) {
                throw SyntaxError("monotone-table x must be strictly increasing");
              }
            }
            if (t.x.front() > lo || t.x.back() < hi) {
              throw SyntaxError("monotone-table does not span segment " +
                                interval(lo, hi));
            }
            bool up = false;
            bool down = false;
            for (std::size_t j = 1; j < t.y.size(); ++j) {
              up |= t.y[j] > t.y[j - 1];
              down |= t.y[j] < t.y[j - 1];
            }
            if (up && down) {
              throw MonotonicityError("monotone-table y values are not monotone");
            }
            return up ? Direction::increasing
                      : (down ? Direction::decreasing : Direction::constant);
          },
      },
      p);
}

}  // namespace

std::string_view to_string(Direction d) noexcept {
  switch (d) {
    case Direction::increasing:
      return "increasing";
    case Direction::decreasing:
      return "decreasing";
    case Direction::constant:
      return "constant";
  }
  return "constant";
}

double evaluate(const Primitive& p, double x) {
  return std::visit(
      Overloaded{
          [](const primitive::Constant& c) { return c.c; },
          [x](const primitive::Affine& a) { return a.slope * x + a.intercept; },
          [x](const primitive::Exponential& e) {
            return e.scale * std::exp(e.rate * x);
          },
          [x](const primitive::Power& p) {
            return p.scale * std::pow(std::max(x - p.origin, 0.0), p.exponent);
          },
          [x](const primitive::MonotoneTable& t) {
            if (x <= t.x.front()) return t.y.front();
            if (x >= t.x.back()) return t.y.back();
            const auto it = std::upper_bound(t.x.begin(), t.x.end(), x);
            const auto j = static_cast<std::size_t>(it - t.x.begin());
            const double w = (x - t.x[j - 1]) / (t.x[j] - t.x[j - 1]);
            return t.y[j - 1] + w * (t.y[j] - t.y[j - 1]);
          },
      },
      p);
}

MonotoneSegment::MonotoneSegment(double lo, double hi, Primitive primitive,
                                 std::optional<Direction> declared)
    : lo_(lo), hi_(hi), primitive_(std::move(primitive)) {
  if (!(lo < hi) || lo < -kPi || hi > kPi) {
    throw CoverageError("segment " + interval(lo, hi) +
                        " is empty or leaves [-pi, pi]");
  }
  direction_ = check_primitive(primitive_, lo, hi);
  value_lo_ = evaluate(primitive_, lo);
  value_hi_ = evaluate(primitive_, hi);
  if (!std::isfinite(value_lo_) || !std::isfinite(value_hi_)) {
    throw UnboundedError("primitive is not finite on " + interval(lo, hi));
  }
  if (declared && direction_ != Direction::constant && *declared != direction_) {
    throw MonotonicityError("segment " + interval(lo, hi) + " declared " +
                            std::string(to_string(*declared)) +
                            " but its primitive is " +
                            std::string(to_string(direction_)));
  }
}

PiecewiseFunction::PiecewiseFunction(std::vector<MonotoneSegment> segments)
    : segments_(std::move(segments)) {
  if (segments_.empty()) throw CoverageError("no segments");
  std::sort(segments_.begin(), segments_.end(),
            [](const MonotoneSegment& a, const MonotoneSegment& b) {
              return a.lo() < b.lo();
            });
  if (segments_.front().lo() != -kPi) {
    throw CoverageError("first segment must start at -pi");
  }
  if (segments_.back().hi() != kPi) {
    throw CoverageError("last segment must end at pi");
  }
  for (std::size_t j = 1; j < segments_.size(); ++j) {
    const MonotoneSegment& left = segments_[j - 1];
    const MonotoneSegment& right = segments_[j];
    if (left.hi() != right.lo()) {
      throw CoverageError(
          (left.hi() < right.lo() ? "gap between " : "overlap between ") +
          interval(left.lo(), left.hi()) + " and " +
          interval(right.lo(), right.hi()));
    }
    const double l = left.value_at_hi();
    const double r = right.value_at_lo();
    const double scale = std::max({1.0, std::fabs(l), std::fabs(r)});
    if (std::fabs(l - r) > 1e-12 * scale) {
      jumps_.push_back({right.lo(), l, r});
    }
  }
}

std::size_t PiecewiseFunction::owner(double x) const {
  const auto it = std::upper_bound(
      segments_.begin(), segments_.end(), x,
      [](double v, const MonotoneSegment& s) { return v < s.lo(); });
  return static_cast<std::size_t>(it - segments_.begin()) - 1;
}

double PiecewiseFunction::eval(double x) const {
  if (!(x >= -kPi && x <= kPi)) {
    throw DomainError("x = " + std::to_string(x) + " outside [-pi, pi]");
  }
  return segments_[owner(x)](x);
}

double PiecewiseFunction::eval_clamped(double x) const {
  return eval(std::clamp(x, -kPi, kPi));
}

OneSidedLimits PiecewiseFunction::one_sided_limits(double x) const {
  if (!(x >= -kPi && x <= kPi)) {
    throw DomainError("x = " + std::to_string(x) + " outside [-pi, pi]");
  }
  const double start = segments_.front().value_at_lo();
  const double end = segments_.back().value_at_hi();
  if (x == -kPi) return {end, start};
  if (x == kPi) return {end, start};

  const std::size_t j = owner(x);
  if (j > 0 && segments_[j].lo() == x) {
    return {segments_[j - 1].value_at_hi(), segments_[j].value_at_lo()};
  }
  const double v = segments_[j](x);
  return {v, v};
}

std::vector<double> PiecewiseFunction::extrema_and_jumps() const {
  std::vector<double> out;
  std::size_t next_jump = 0;
  for (std::size_t j = 1; j < segments_.size(); ++j) {
    const double b = segments_[j].lo();
    bool is_jump = false;
    while (next_jump < jumps_.size() && jumps_[next_jump].x <= b) {
      is_jump |= jumps_[next_jump].x == b;
      ++next_jump;
    }
    if (is_jump || segments_[j - 1].direction() != segments_[j].direction()) {
      out.push_back(b);
    }
  }
  return out;
}

std::vector<double> PiecewiseFunction::breakpoints() const {
  std::vector<double> out;
  out.reserve(segments_.size() - 1);
  for (std::size_t j = 1; j < segments_.size(); ++j) out.push_back(segments_[j].lo());
  return out;
}

std::vector<double> PiecewiseFunction::smoothness_breaks() const {
  std::vector<double> out = breakpoints();
  for (const MonotoneSegment& s : segments_) {
    if (const auto* t = std::get_if<primitive::MonotoneTable>(&s.primitive())) {
      for (double x : t->x) {
        if (x > s.lo() && x < s.hi()) out.push_back(x);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

double PiecewiseFunction::sup_norm() const noexcept {
  double m = 0.0;
  for (const MonotoneSegment& s : segments_) {
    m = std::max({m, std::fabs(s.value_at_lo()), std::fabs(s.value_at_hi())});
  }
  return m;
}

}  // namespace dirichlet
