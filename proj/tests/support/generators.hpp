#pragma once

// Seeded random inputs for property tests.

#include <algorithm>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "dirichlet/piecewise.hpp"
#include "json.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double a, double b) {
  return std::uniform_real_distribution<double>(a, b)(rng);
}

inline int uniform_int(Rng& rng, int a, int b) {
  return std::uniform_int_distribution<int>(a, b)(rng);
}

inline nlohmann::json random_segment(Rng& rng, double lo, double hi) {
  using nlohmann::json;
  json seg;
  seg["lo"] = lo;
  seg["hi"] = hi;
  switch (uniform_int(rng, 0, 4)) {
    case 0:
      seg["kind"] = "constant";
      seg["params"] = {{"c", uniform(rng, -2, 2)}};
      break;
    case 1:
      seg["kind"] = "affine";
      seg["params"] = {{"a", uniform(rng, -1, 1)}, {"b", uniform(rng, -1, 1)}};
      break;
    case 2:
      seg["kind"] = "exponential";
      seg["params"] = {{"a", uniform(rng, -1.5, 1.5)}, {"b", uniform(rng, -0.8, 0.8)}};
      break;
    case 3:
      seg["kind"] = "power";
      seg["params"] = {{"a", uniform(rng, -1, 1)},
                       {"x0", lo - uniform(rng, 0.0, 0.5)},
                       {"p", uniform(rng, 0.3, 2.5)}};
      break;
    default: {
      const int k = uniform_int(rng, 2, 5);
      std::vector<double> xs{lo, hi};
      for (int j = 0; j < k - 2; ++j) xs.push_back(uniform(rng, lo, hi));
      std::sort(xs.begin(), xs.end());
      xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
      const double sign = uniform_int(rng, 0, 1) ? 1.0 : -1.0;
      std::vector<double> ys{uniform(rng, -1, 1)};
      for (std::size_t j = 1; j < xs.size(); ++j) {
        ys.push_back(ys.back() + sign * uniform(rng, 0.01, 1.0));
      }
      seg["kind"] = "monotone-table";
      seg["params"] = {{"x", xs}, {"y", ys}};
    }
  }
  return seg;
}

/// A random valid function-spec document with 1..5 segments.
inline std::string random_spec(Rng& rng) {
  const double pi = std::numbers::pi;
  const int m = uniform_int(rng, 1, 5);
  std::vector<double> cuts;
  while (static_cast<int>(cuts.size()) < m - 1) {
    const double c = uniform(rng, -pi + 0.1, pi - 0.1);
    const bool close = std::any_of(cuts.begin(), cuts.end(),
                                   [c](double d) { return std::abs(c - d) < 0.1; });
    if (!close) cuts.push_back(c);
  }
  std::sort(cuts.begin(), cuts.end());
  std::vector<double> edges{-pi};
  edges.insert(edges.end(), cuts.begin(), cuts.end());
  edges.push_back(pi);

  nlohmann::json segments = nlohmann::json::array();
  for (std::size_t j = 1; j < edges.size(); ++j) {
    segments.push_back(random_segment(rng, edges[j - 1], edges[j]));
  }
  // Shuffle to exercise sorting in the parser.
  std::vector<nlohmann::json> items(segments.begin(), segments.end());
  std::shuffle(items.begin(), items.end(), rng);
  return nlohmann::json{{"segments", items}}.dump();
}

/// A random primitive that is positive and non-increasing on [0, pi/2].
inline dirichlet::Primitive random_positive_decreasing(Rng& rng) {
  namespace p = dirichlet::primitive;
  const double h = std::numbers::pi / 2;
  switch (uniform_int(rng, 0, 3)) {
    case 0:
      return p::Constant{uniform(rng, 0.5, 2.0)};
    case 1: {
      const double slope = uniform(rng, -0.5, -0.05);
      return p::Affine{slope, uniform(rng, 0.2 - slope * h, 3.0)};
    }
    case 2:
      return p::Exponential{uniform(rng, 0.5, 2.0), uniform(rng, -2.0, -0.1)};
    default: {
      const int k = uniform_int(rng, 2, 6);
      std::vector<double> xs{0.0, h};
      for (int j = 0; j < k - 2; ++j) xs.push_back(uniform(rng, 0.0, h));
      std::sort(xs.begin(), xs.end());
      xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
      std::vector<double> ys{uniform(rng, 1.5, 3.0)};
      for (std::size_t j = 1; j < xs.size(); ++j) {
        ys.push_back(ys.back() - uniform(rng, 0.01, 1.2 / xs.size()));
      }
      return p::MonotoneTable{xs, ys};
    }
  }
}

}  // namespace gen
