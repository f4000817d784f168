#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace dirichlet {

/// Two series whose terms have ratio -> 1, yet one converges and the other
/// does not:
///   u_n = (-1)^n / sqrt(n)                        (converges)
///   v_n = (-1)^n / sqrt(n) * (1 + (-1)^n/sqrt(n))  (diverges)
///   diff_n = u_n - v_n = -1/n                      (harmonic, diverges)
/// Indexing starts at n = 1.
enum class SeriesKind { u, v, diff };

std::string_view to_string(SeriesKind kind) noexcept;

/// Throws DomainError for an unknown name.
SeriesKind parse_series_kind(std::string_view name);

/// Term n >= 1 of the series.
double series_term(SeriesKind kind, std::size_t n);

/// v_n / u_n, i.e. 1 + (-1)^n / sqrt(n).
double term_ratio(std::size_t n);

struct SeriesProbe {
  SeriesKind kind;
  std::size_t N = 0;
  /// partial_sums[j] = sum of terms 1 .. j+1 (compensated).
  std::vector<double> partial_sums;
  /// ratios[j] = v_{j+1} / u_{j+1}; filled for kind v only.
  std::vector<double> ratios;
};

/// Throws DomainError if N < 1.
SeriesProbe probe(SeriesKind kind, std::size_t N);

/// First N <= n_max whose partial sum crosses `bound`: below it for a
/// negative bound, above it for a positive one. nullopt if no crossing
/// occurs within the budget. Throws DomainError for bound == 0.
std::optional<std::size_t> divergence_witness(SeriesKind kind, double bound,
                                              std::size_t n_max);

}  // namespace dirichlet
