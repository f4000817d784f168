#include "dirichlet/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "dirichlet/error.hpp"
#include "dirichlet/summation.hpp"

namespace dirichlet {
namespace {

// 15-point Kronrod abscissae/weights with the embedded 7-point Gauss rule
// (nodes xgk[1], xgk[3], xgk[5] and the centre).
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kRoundoff = 50.0 * kEps;

// A bisection that removes less than this share of a parent's error, on a
// panel already accurate to kNoiseLevel of its L1 mass, is taken to be
// measuring evaluation noise (e.g. sin(k x) for large k x) rather than
// truncation error.
constexpr double kStallRatio = 0.7;
constexpr double kNoiseLevel = 1e-8;

struct Panel {
  double a;
  double b;
  double value;
  double error;
  double l1;
  bool noisy = false;
};

Panel gauss_kronrod(const Integrand& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const double fc = f(centre);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  double abs_sum = std::fabs(fc) * kWgk[7];
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = f(centre - dx);
    const double f2 = f(centre + dx);
    kronrod += kWgk[j] * (f1 + f2);
    abs_sum += kWgk[j] * (std::fabs(f1) + std::fabs(f2));
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }

  const double value = kronrod * half;
  if (!std::isfinite(value)) {
    throw QuadratureError("non-finite integrand on [" + std::to_string(a) +
                          ", " + std::to_string(b) + "]");
  }
  return {a, b, value, std::fabs(kronrod - gauss) * std::fabs(half),
          abs_sum * std::fabs(half)};
}

// Points j = 0..m across [lo, hi]. Points in the lower half are measured
// from lo and those in the upper half from hi, and the centre is the
// midpoint, so the set for [-hi, -lo] is the exact negation.
void subdivide(double lo, double hi, double max_width,
               std::vector<double>& out) {
  std::size_t m = 1;
  if (std::isfinite(max_width) && max_width > 0.0) {
    m = std::max<std::size_t>(1, static_cast<std::size_t>(
                                     std::ceil((hi - lo) / max_width)));
  }
  const double width = hi - lo;
  for (std::size_t j = 1; j < m; ++j) {
    if (2 * j < m) {
      out.push_back(lo + width * (static_cast<double>(j) / m));
    } else if (2 * j > m) {
      out.push_back(hi - width * (static_cast<double>(m - j) / m));
    } else {
      out.push_back(0.5 * (lo + hi));
    }
  }
  out.push_back(hi);
}

}  // namespace

QuadratureResult integrate(const Integrand& f,
                           std::span<const double> breakpoints,
                           const QuadratureOptions& options) {
  if (breakpoints.size() < 2) {
    throw DomainError("integrate: need at least two breakpoints");
  }
  for (std::size_t j = 1; j < breakpoints.size(); ++j) {
    if (!(breakpoints[j] > breakpoints[j - 1])) {
      throw DomainError("integrate: breakpoints must be strictly increasing");
    }
  }
  if (!std::isfinite(breakpoints.front()) || !std::isfinite(breakpoints.back())) {
    throw DomainError("integrate: non-finite limits");
  }

  std::vector<double> edges{breakpoints.front()};
  for (std::size_t j = 1; j < breakpoints.size(); ++j) {
    subdivide(breakpoints[j - 1], breakpoints[j], options.max_panel_width,
              edges);
  }
  if (edges.size() - 1 > options.max_panels) {
    throw QuadratureError("integrate: initial panel count exceeds budget");
  }

  std::vector<Panel> panels;
  panels.reserve(edges.size() - 1);
  for (std::size_t j = 1; j < edges.size(); ++j) {
    panels.push_back(gauss_kronrod(f, edges[j - 1], edges[j]));
  }

  const double total_width = breakpoints.back() - breakpoints.front();
  std::vector<double> values;
  std::vector<Panel> next;
  while (true) {
    values.clear();
    double error = 0.0;
    double l1 = 0.0;
    for (const Panel& p : panels) {
      values.push_back(p.value);
      error += p.error;
      l1 += p.l1;
    }
    const double value = exact_sum(values);
    const double target =
        std::max(options.rel_tol * std::fabs(value), kRoundoff * l1);
    if (error <= target) {
      return {value, error, l1, panels.size()};
    }

    next.clear();
    bool split_any = false;
    bool too_narrow = false;
    for (const Panel& p : panels) {
      const double share = target * ((p.b - p.a) / total_width);
      const double mid = 0.5 * (p.a + p.b);
      if (p.error <= share || p.error <= kRoundoff * p.l1 || p.noisy) {
        next.push_back(p);
      } else if (!(mid > p.a && mid < p.b)) {
        too_narrow = true;
        next.push_back(p);
      } else {
        Panel left = gauss_kronrod(f, p.a, mid);
        Panel right = gauss_kronrod(f, mid, p.b);
        if (left.error + right.error > kStallRatio * p.error &&
            p.error <= kNoiseLevel * p.l1) {
          left.noisy = right.noisy = true;
        }
        next.push_back(left);
        next.push_back(right);
        split_any = true;
      }
    }
    if (!split_any) {
      // What remains is limited by rounding or by evaluation noise; the
      // reported error says how far from the target that left us.
      if (!too_narrow || error <= 2.0 * target) {
        return {value, error, l1, panels.size()};
      }
      throw QuadratureError("integrate: panels too narrow to reach tolerance " +
                            std::to_string(options.rel_tol));
    }
    if (next.size() > options.max_panels) {
      throw QuadratureError("integrate: subdivision budget exhausted (" +
                            std::to_string(options.max_panels) +
                            " panels) before reaching tolerance " +
                            std::to_string(options.rel_tol));
    }
    panels.swap(next);
  }
}

double integrate(const Integrand& f, double lo, double hi, double rel_tol) {
  if (!(lo < hi)) throw DomainError("integrate: require lo < hi");
  const std::array<double, 2> edges{lo, hi};
  return integrate(f, edges, QuadratureOptions{.rel_tol = rel_tol}).value;
}

std::vector<double> make_breakpoints(double lo, double hi,
                                     std::span<const double> interior) {
  const double merge = 8.0 * kEps * std::max({1.0, std::fabs(lo), std::fabs(hi)});
  std::vector<double> pts{lo};
  std::vector<double> inner(interior.begin(), interior.end());
  std::sort(inner.begin(), inner.end());
  for (double x : inner) {
    if (x - lo <= merge || hi - x <= merge) continue;
    if (x - pts.back() <= merge) continue;
    pts.push_back(x);
  }
  pts.push_back(hi);
  return pts;
}

}  // namespace dirichlet
