#include "dirichlet/oscillatory.hpp"

#include <array>
#include <cmath>
#include <string>

#include "dirichlet/error.hpp"
#include "dirichlet/summation.hpp"

namespace dirichlet {
namespace {

constexpr double kHalfPi = kPi / 2.0;

// f must be continuous and monotone on the open interval (a, b): no jump
// strictly inside, and all non-constant pieces that meet it agree.
void require_monotone_on(const PiecewiseFunction& f, double a, double b) {
  for (const JumpPoint& j : f.jumps()) {
    if (j.x > a && j.x < b) {
      throw DomainError("function jumps at " + std::to_string(j.x) +
                        " inside [" + std::to_string(a) + ", " +
                        std::to_string(b) + "]");
    }
  }
  std::optional<Direction> seen;
  for (const MonotoneSegment& s : f.segments()) {
    if (s.hi() <= a || s.lo() >= b || s.direction() == Direction::constant) continue;
    if (seen && *seen != s.direction()) {
      throw DomainError("function is not monotone on [" + std::to_string(a) +
                        ", " + std::to_string(b) + "]");
    }
    seen = s.direction();
  }
}

Integrand restrict(const PiecewiseFunction& f) {
  return [&f](double beta) { return f.eval_clamped(beta); };
}

double block_integral(const Integrand& g, double a, double b, double rel_tol) {
  const std::array<double, 2> edges{a, b};
  return integrate(g, edges, QuadratureOptions{.rel_tol = rel_tol}).value;
}

}  // namespace

Frequency::Frequency(double i) : i_(i) {
  if (!(i > 0.0) || !std::isfinite(i)) {
    throw DomainError("frequency must be positive and finite, got " + std::to_string(i));
  }
}

double oscillatory_weight(double i, double beta) {
  if (std::fabs(beta) < kWeightSingularityThreshold) return i;
  return std::sin(i * beta) / std::sin(beta);
}

SignBlockDecomposition decompose(const Integrand& f, Frequency freq, double h,
                                 double rel_tol) {
  if (!(h > 0.0 && h <= kHalfPi)) {
    throw DomainError("decompose: h must lie in (0, pi/2], got " + std::to_string(h));
  }
  const double i = freq.value();
  const double step = kPi / i;

  // h i / pi may land a rounding error below an integer (h = pi/2, i = 10).
  const double q = h * i / kPi;
  double whole = std::floor(q);
  if (std::ceil(q) - q <= 1e-12 * std::max(1.0, q)) whole = std::ceil(q);
  if (whole > 1e8) throw DomainError("decompose: too many blocks");

  SignBlockDecomposition d;
  d.frequency = i;
  d.h = h;
  d.r = static_cast<int>(whole);
  d.boundaries.reserve(d.r + 2);
  for (int nu = 0; nu <= d.r; ++nu) d.boundaries.push_back(std::min(nu * step, h));
  if (h - d.boundaries.back() > 1e-12 * h) {
    d.boundaries.push_back(h);
  } else {
    d.boundaries.back() = h;
  }

  const Integrand weighted = [&f, i](double beta) {
    if (beta < kWeightSingularityThreshold) return i * f(beta);
    return f(beta) * (std::sin(i * beta) / std::sin(beta));
  };
  const Integrand weight = [i](double beta) { return oscillatory_weight(i, beta); };

  const std::size_t blocks = d.boundaries.size() - 1;
  d.block_values.reserve(blocks);
  d.K.reserve(blocks);
  d.rho.reserve(blocks);
  for (std::size_t nu = 0; nu < blocks; ++nu) {
    const double a = d.boundaries[nu];
    const double b = d.boundaries[nu + 1];
    const double value = block_integral(weighted, a, b, rel_tol);
    const double k = std::fabs(block_integral(weight, a, b, rel_tol));
    d.block_values.push_back(value);
    d.K.push_back(k);
    d.rho.push_back(k > 0.0 ? std::fabs(value) / k : 0.0);
  }
  return d;
}

SignBlockDecomposition decompose(const PiecewiseFunction& f, Frequency i,
                                 double h, double rel_tol) {
  if (!(h > 0.0 && h <= kHalfPi)) {
    throw DomainError("decompose: h must lie in (0, pi/2], got " + std::to_string(h));
  }
  require_monotone_on(f, 0.0, h);
  return decompose(restrict(f), i, h, rel_tol);
}

double sine_block(int nu, double rel_tol) {
  if (nu < 1) throw DomainError("sine_block: nu must be >= 1");
  const Integrand sinc = [](double g) {
    return g < kWeightSingularityThreshold ? 1.0 : std::sin(g) / g;
  };
  return std::fabs(block_integral(sinc, (nu - 1) * kPi, nu * kPi, rel_tol));
}

AlternatingTail tail(int n_max, double rel_tol) {
  if (n_max < 1) throw DomainError("tail: n_max must be >= 1");
  AlternatingTail t;
  t.k.reserve(n_max + 1);
  for (int nu = 1; nu <= n_max + 1; ++nu) t.k.push_back(sine_block(nu, rel_tol));

  t.partial_sums.reserve(n_max);
  CompensatedSum s;
  for (int n = 1; n <= n_max; ++n) {
    s += (n % 2 == 1) ? t.k[n - 1] : -t.k[n - 1];
    t.partial_sums.push_back(s.value());
  }
  return t;
}

ConvergenceReport limit_verify(const Integrand& f, double g, double h,
                               std::span<const double> schedule, double rel_tol) {
  if (!(g >= 0.0 && g < h && h <= kHalfPi)) {
    throw DomainError("limit_verify: require 0 <= g < h <= pi/2");
  }
  if (schedule.empty()) throw DomainError("limit_verify: empty schedule");
  for (std::size_t j = 0; j < schedule.size(); ++j) {
    Frequency{schedule[j]};
    if (j > 0 && !(schedule[j] > schedule[j - 1])) {
      throw DomainError("limit_verify: schedule must be increasing");
    }
  }

  ConvergenceReport report;
  report.x = g;
  report.predicted = (g == 0.0) ? kHalfPi * f(0.0) : 0.0;
  for (double i : schedule) {
    const double step = kPi / i;
    std::vector<double> zeros;
    for (double nu = std::floor(g / step) + 1; nu * step < h; nu += 1.0) {
      zeros.push_back(nu * step);
    }
    const auto edges = make_breakpoints(g, h, zeros);
    const Integrand weighted = [&f, i](double beta) {
      if (beta < kWeightSingularityThreshold) return i * f(beta);
      return f(beta) * (std::sin(i * beta) / std::sin(beta));
    };
    const double value =
        integrate(weighted, edges, QuadratureOptions{.rel_tol = rel_tol}).value;
    report.schedule.push_back(i);
    report.values.push_back(value);
    report.errors.push_back(std::fabs(value - report.predicted));
  }
  return report;
}

ConvergenceReport limit_verify(const PiecewiseFunction& f, double g, double h,
                               std::span<const double> schedule, double rel_tol) {
  if (!(g >= 0.0 && g < h && h <= kHalfPi)) {
    throw DomainError("limit_verify: require 0 <= g < h <= pi/2");
  }
  require_monotone_on(f, g, h);
  return limit_verify(restrict(f), g, h, schedule, rel_tol);
}

GroupTail group_tail_bound(const SignBlockDecomposition& d, int m) {
  if (m < 0 || m % 2 != 0) {
    throw DomainError("group_tail_bound: m must be a non-negative even integer");
  }
  if (m >= d.r) {
    throw DomainError("group_tail_bound: m = " + std::to_string(m) +
                      " must be below r = " + std::to_string(d.r));
  }
  const std::span<const double> rest(d.block_values.begin() + m, d.block_values.end());
  return {exact_sum(rest), std::fabs(d.block_values[m])};
}

}  // namespace dirichlet
