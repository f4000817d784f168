#include "dirichlet/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dirichlet/error.hpp"
#include "dirichlet/kernel.hpp"
#include "dirichlet/quadrature.hpp"
#include "dirichlet/summation.hpp"

namespace dirichlet {
namespace {

constexpr double kHalfPi = kPi / 2.0;

void require_abscissa(double x, const char* op) {
  if (!(x >= -kPi && x <= kPi)) {
    throw DomainError(std::string(op) + ": x = " + std::to_string(x) +
                      " outside [-pi, pi]");
  }
}

double integrate_over_period(const PiecewiseFunction& f, const Integrand& g,
                             std::span<const double> extra, double max_width,
                             double tol) {
  std::vector<double> interior = f.smoothness_breaks();
  interior.insert(interior.end(), extra.begin(), extra.end());
  const auto edges = make_breakpoints(-kPi, kPi, interior);
  return integrate(g, edges,
                   QuadratureOptions{.rel_tol = tol, .max_panel_width = max_width})
      .value;
}

// Segment boundaries of f seen from x along a = x + sign * 2b.
std::vector<double> mapped(std::span<const double> abscissae, double x,
                           double sign) {
  std::vector<double> out;
  for (double s : abscissae) {
    const double beta = sign * (s - x) / 2.0;
    if (beta > 0.0) out.push_back(beta);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// int_0^H sin((2n+1)b)/sin(b) phi(x + sign 2b) db, with the part beyond
// pi/2 reflected through b = pi - g.
double side_integral(const PiecewiseFunction& f, double x, int n, double sign,
                     double tol) {
  const double H = (kPi - sign * x) / 2.0;
  if (H <= 0.0) return 0.0;

  const KernelOrder order(n);
  const double max_width = kPi / (2.0 * n + 1.0);
  const auto boundaries = mapped(f.smoothness_breaks(), x, sign);
  const QuadratureOptions options{.rel_tol = tol, .max_panel_width = max_width};

  // sin((2n+1)b)/sin(b) = 2 D_n(2b); the kernel resolves b = 0 and b = pi.
  const Integrand inner = [&f, x, sign, order](double beta) {
    return 2.0 * dirichlet_kernel(order, 2.0 * beta) *
           f.eval_clamped(x + sign * 2.0 * beta);
  };
  const double inner_end = std::min(H, kHalfPi);
  double total = integrate(inner, make_breakpoints(0.0, inner_end, boundaries),
                           options)
                     .value;

  if (H > kHalfPi) {
    const Integrand outer = [&f, x, sign, order](double gamma) {
      return 2.0 * dirichlet_kernel(order, 2.0 * gamma) *
             f.eval_clamped(x + sign * (2.0 * kPi - 2.0 * gamma));
    };
    std::vector<double> reflected;
    for (double beta : boundaries) {
      if (beta > kHalfPi && beta < H) reflected.push_back(kPi - beta);
    }
    total += integrate(outer, make_breakpoints(kPi - H, kHalfPi, reflected),
                       options)
                 .value;
  }
  return total;
}

}  // namespace

FourierCoefficients coefficients(const PiecewiseFunction& f, int n_max,
                                 double tol) {
  if (n_max < 1) throw DomainError("coefficients: n_max must be >= 1");
  FourierCoefficients c;
  c.tol = tol;
  c.a.reserve(n_max);
  c.b.reserve(n_max);

  const Integrand plain = [&f](double a) { return f.eval_clamped(a); };
  c.a0 = integrate_over_period(f, plain, {}, kPi, tol) / (2.0 * kPi);

  for (int k = 1; k <= n_max; ++k) {
    const double width = kPi / (k + 1);
    const Integrand cosine = [&f, k](double a) {
      return f.eval_clamped(a) * std::cos(k * a);
    };
    const Integrand sine = [&f, k](double a) {
      return f.eval_clamped(a) * std::sin(k * a);
    };
    c.a.push_back(integrate_over_period(f, cosine, {}, width, tol) / kPi);
    c.b.push_back(integrate_over_period(f, sine, {}, width, tol) / kPi);
  }
  return c;
}

double partial_sum(const FourierCoefficients& c, double x, int n) {
  require_abscissa(x, "partial_sum");
  if (n < 0 || n > c.order()) {
    throw DomainError("partial_sum: n = " + std::to_string(n) +
                      " outside coefficient range [0, " +
                      std::to_string(c.order()) + "]");
  }
  const bool endpoint = std::fabs(x) == kPi;
  CompensatedSum sum;
  sum += c.a0;
  for (int k = 1; k <= n; ++k) {
    if (endpoint) {
      sum += (k % 2 == 0 ? 1.0 : -1.0) * c.a[k - 1];
    } else {
      sum += c.a[k - 1] * std::cos(k * x);
      sum += c.b[k - 1] * std::sin(k * x);
    }
  }
  return sum.value();
}

double partial_sum_kernel(const PiecewiseFunction& f, double x, int n,
                          double tol) {
  require_abscissa(x, "partial_sum_kernel");
  const KernelOrder order(n);
  const Integrand g = [&f, x, order](double a) {
    return f.eval_clamped(a) * dirichlet_kernel(order, a - x);
  };
  const double peak[] = {x};
  return integrate_over_period(f, g, peak, kPi / (n + 1.0), tol) / kPi;
}

SplitIntegrals split_integrals(const PiecewiseFunction& f, double x, int n,
                               double tol) {
  require_abscissa(x, "split_integrals");
  return {side_integral(f, x, n, -1.0, tol), side_integral(f, x, n, +1.0, tol)};
}

std::vector<double> beta_split_points(const PiecewiseFunction& f, double x,
                                      Side side) {
  require_abscissa(x, "beta_split_points");
  const double sign = side == Side::upper ? 1.0 : -1.0;
  const double H = (kPi - sign * x) / 2.0;
  std::vector<double> out;
  for (double beta : mapped(f.extrema_and_jumps(), x, sign)) {
    if (beta < H) out.push_back(beta);
  }
  if (H > kHalfPi) {
    out.push_back(kHalfPi);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  return out;
}

double predicted_limit(const PiecewiseFunction& f, double x) {
  require_abscissa(x, "predicted_limit");
  const OneSidedLimits lim = f.one_sided_limits(x);
  return 0.5 * (lim.left + lim.right);
}

ConvergenceReport convergence_report(const PiecewiseFunction& f, double x,
                                     std::span<const int> schedule, double tol) {
  require_abscissa(x, "convergence_report");
  if (schedule.empty()) throw DomainError("convergence_report: empty schedule");
  for (std::size_t j = 0; j < schedule.size(); ++j) {
    if (schedule[j] < 0 || (j > 0 && schedule[j] <= schedule[j - 1])) {
      throw DomainError("convergence_report: schedule must be non-negative and increasing");
    }
  }

  const FourierCoefficients c =
      coefficients(f, std::max(1, schedule.back()), tol);
  const OneSidedLimits lim = f.one_sided_limits(x);

  ConvergenceReport report;
  report.x = x;
  report.predicted = predicted_limit(f, x);
  report.minus_reading = 0.5 * (lim.right - lim.left);
  for (int n : schedule) {
    const double v = partial_sum(c, x, n);
    report.schedule.push_back(n);
    report.values.push_back(v);
    report.errors.push_back(std::fabs(v - report.predicted));
  }
  return report;
}

}  // namespace dirichlet
