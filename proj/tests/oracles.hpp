// Copyright 2026 The sharpkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Independent reference implementations used only by the tests. Nothing here
// calls into the library, and the formulas are deliberately different from
// the ones the library uses (pairwise sums instead of sorting, direct loops
// instead of compensated prefix sums).

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

// Insertion sort; the library uses std::stable_sort.
inline std::vector<double> sorted(std::vector<double> v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    const double x = v[i];
    std::size_t j = i;
    while (j > 0 && v[j - 1] > x) {
      v[j] = v[j - 1];
      --j;
    }
    v[j] = x;
  }
  return v;
}

// Mean-difference form of the discrete score: sum_{i,j} |p_i - p_j| / (2(n-1)).
// Equal to the compact sorted-coefficient form, but needs no ordering.
inline double discrete_sharpness(const std::vector<double>& p) {
  const double n = static_cast<double>(p.size());
  long double s = 0.0L;
  for (double a : p)
    for (double b : p) s += std::fabs(static_cast<long double>(a) - b);
  return static_cast<double>(s / (2.0L * (n - 1.0L)));
}

// The cumulative form written straight from its definition, O(n^2).
inline double discrete_cumulative(const std::vector<double>& raw) {
  const auto p = sorted(raw);
  const std::size_t n = p.size();
  long double total = 0.0L;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    long double m = 0.0L;
    for (std::size_t k = j; k < n; ++k) m += p[k];
    total += m - static_cast<long double>(p[j]) * static_cast<long double>(n - j);
  }
  return static_cast<double>(total / static_cast<long double>(n - 1));
}

inline double tvd(const std::vector<double>& p) {
  const double n = static_cast<double>(p.size());
  double s = 0.0;
  for (double x : p) s += std::fabs(x - 1.0 / n);
  return s / (2.0 * (1.0 - 1.0 / n));
}

// Continuous score of a piecewise-constant density with equal cells.
// S = 1 - 2 int L(u) du, and for a piecewise-linear Lorenz curve that is the
// Gini mean difference: sum_{i,j} |v_i - v_j| dt^2 / (2 |Omega|). The cell
// order is irrelevant, so no rearrangement is needed.
inline double continuous_sharpness(const std::vector<double>& v, double omega) {
  const double dt = omega / static_cast<double>(v.size());
  long double s = 0.0L;
  for (double a : v)
    for (double b : v) s += std::fabs(static_cast<long double>(a) - b);
  return static_cast<double>(s * dt * dt / (2.0L * omega));
}

inline double uniform_subset(double l, double omega) { return 1.0 - l / omega; }

// Mass to the right of each cell edge, summed directly for every edge.
inline std::vector<double> mass_edges(const std::vector<double>& sorted_v, double omega) {
  const std::size_t n = sorted_v.size();
  const double dt = omega / static_cast<double>(n);
  std::vector<double> m(n + 1, 0.0);
  for (std::size_t i = 0; i <= n; ++i) {
    long double s = 0.0L;
    for (std::size_t k = i; k < n; ++k) s += static_cast<long double>(sorted_v[k]) * dt;
    m[i] = static_cast<double>(s);
  }
  return m;
}

// Lorenz ordinates at u = k/N.
inline std::vector<double> lorenz(const std::vector<double>& sorted_v, double omega) {
  const std::size_t n = sorted_v.size();
  const double dt = omega / static_cast<double>(n);
  std::vector<double> l(n + 1, 0.0);
  long double s = 0.0L;
  for (std::size_t k = 0; k < n; ++k) {
    s += static_cast<long double>(sorted_v[k]) * dt;
    l[k + 1] = static_cast<double>(s);
  }
  return l;
}

inline double entropy(const std::vector<double>& p, double log_base) {
  double h = 0.0;
  for (double x : p)
    if (x > 0.0) h -= x * std::log(x) / std::log(log_base);
  return h;
}

inline double variance(const std::vector<double>& p, const std::vector<double>& x) {
  double m = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) m += p[i] * x[i];
  double v = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) v += p[i] * (x[i] - m) * (x[i] - m);
  return v;
}

// Hyndman-Fan type 7 on an unsorted sample.
inline double quantile7(std::vector<double> x, double q) {
  x = sorted(std::move(x));
  const double h = (static_cast<double>(x.size()) - 1.0) * q;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, x.size() - 1);
  return x[lo] + (h - std::floor(h)) * (x[hi] - x[lo]);
}

// Two-sided KS statistic of a sample against U[0,1].
inline double ks_uniform(std::vector<double> x) {
  std::sort(x.begin(), x.end());
  const double n = static_cast<double>(x.size());
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    d = std::max(d, static_cast<double>(i + 1) / n - x[i]);
    d = std::max(d, x[i] - static_cast<double>(i) / n);
  }
  return d;
}

// Random test inputs. std distributions are fine here; the library does not
// depend on them.
struct Gen {
  std::mt19937_64 eng;
  explicit Gen(std::uint64_t seed) : eng(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0) { return std::uniform_real_distribution<double>(lo, hi)(eng); }
  std::size_t index(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(eng);
  }

  // Random non-negative weights with a mix of shapes: flat noise, sparse
  // spikes, exact zeros and repeated levels.
  std::vector<double> weights(std::size_t n) {
    std::vector<double> w(n);
    switch (index(0, 3)) {
      case 0:
        for (auto& x : w) x = uniform();
        break;
      case 1:
        for (auto& x : w) x = uniform() < 0.3 ? 0.0 : uniform();
        break;
      case 2:
        for (auto& x : w) x = std::pow(uniform(), 6.0);
        break;
      default:
        for (auto& x : w) x = static_cast<double>(index(0, 3));
        break;
    }
    if (std::all_of(w.begin(), w.end(), [](double x) { return x == 0.0; })) w[index(0, n - 1)] = 1.0;
    return w;
  }

  std::vector<double> simplex(std::size_t n) {
    auto w = weights(n);
    double s = 0.0;
    for (double x : w) s += x;
    for (auto& x : w) x /= s;
    return w;
  }

  // Cell densities on a domain of measure omega that integrate to one.
  std::vector<double> density(std::size_t cells, double omega) {
    auto w = weights(cells);
    double s = 0.0;
    for (double x : w) s += x;
    const double dt = omega / static_cast<double>(cells);
    for (auto& x : w) x /= s * dt;
    return w;
  }
};

}  // namespace oracle
