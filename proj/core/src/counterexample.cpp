#include "dirichlet/counterexample.hpp"

#include <cmath>
#include <string>

#include "dirichlet/error.hpp"
#include "dirichlet/summation.hpp"

namespace dirichlet {
namespace {

double alternating_sign(std::size_t n) { return n % 2 == 0 ? 1.0 : -1.0; }

}  // namespace

std::string_view to_string(SeriesKind kind) noexcept {
  switch (kind) {
    case SeriesKind::u:
      return "u";
    case SeriesKind::v:
      return "v";
    case SeriesKind::diff:
      return "diff";
  }
  return "u";
}

SeriesKind parse_series_kind(std::string_view name) {
  if (name == "u") return SeriesKind::u;
  if (name == "v") return SeriesKind::v;
  if (name == "diff") return SeriesKind::diff;
  throw DomainError("unknown series kind \"" + std::string(name) + "\"");
}

double series_term(SeriesKind kind, std::size_t n) {
  if (n < 1) throw DomainError("series terms are indexed from n = 1");
  const double s = alternating_sign(n);
  const double root = std::sqrt(static_cast<double>(n));
  switch (kind) {
    case SeriesKind::u:
      return s / root;
    case SeriesKind::v:
      return (s / root) * (1.0 + s / root);
    case SeriesKind::diff:
      return -1.0 / static_cast<double>(n);
  }
  return 0.0;
}

double term_ratio(std::size_t n) {
  return series_term(SeriesKind::v, n) / series_term(SeriesKind::u, n);
}

SeriesProbe probe(SeriesKind kind, std::size_t N) {
  if (N < 1) throw DomainError("probe: N must be >= 1");
  SeriesProbe p{kind, N, {}, {}};
  p.partial_sums.reserve(N);
  CompensatedSum sum;
  for (std::size_t n = 1; n <= N; ++n) {
    sum += series_term(kind, n);
    p.partial_sums.push_back(sum.value());
  }
  if (kind == SeriesKind::v) {
    p.ratios.reserve(N);
    for (std::size_t n = 1; n <= N; ++n) p.ratios.push_back(term_ratio(n));
  }
  return p;
}

std::optional<std::size_t> divergence_witness(SeriesKind kind, double bound,
                                              std::size_t n_max) {
  if (bound == 0.0 || !std::isfinite(bound)) {
    throw DomainError("divergence_witness: bound must be finite and non-zero");
  }
  CompensatedSum sum;
  for (std::size_t n = 1; n <= n_max; ++n) {
    sum += series_term(kind, n);
    const double s = sum.value();
    if (bound < 0.0 ? s < bound : s > bound) return n;
  }
  return std::nullopt;
}

}  // namespace dirichlet
