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

#pragma once

// Analysis in the rearranged space: mapping original-space points to their
// rearranged positions, plateaus, local contributions to the score, mass above
// a density level, relative likelihood and relative rank.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sharpkit/continuous.hpp"
#include "sharpkit/core.hpp"

namespace sharpkit {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  friend bool operator==(const Interval&, const Interval&) = default;
};

struct MappedPoint {
  std::vector<double> source;             // original-space coordinates
  std::optional<std::size_t> source_cell; // set when the point was given as a cell id
  double density = 0.0;                   // d(y) at the containing cell
  std::size_t t_index = 0;
  double t = 0.0;                         // midpoint of the matched rearranged cell
  std::optional<Interval> plateau;        // equal-density run containing t
};

/// Plateau tolerance used when none is given: 1e-9 times the maximum density.
inline double default_plateau_eps(const RearrangedDensity& d_star) { return 1e-9 * d_star.max_value(); }

namespace detail {

inline void require_matching(const GriddedDensity& d, const RearrangedDensity& d_star) {
  require(d.size() == d_star.size(), ErrorKind::ShapeMismatch,
          "rearrangement has a different cell count than the density");
}

// [first, last) indices with |d* - tau| <= eps.
inline std::pair<std::size_t, std::size_t> level_range(const RearrangedDensity& d_star, double tau, double eps) {
  const auto v = d_star.values();
  auto within = [&](double x) { return std::abs(x - tau) <= eps; };
  std::size_t lo = static_cast<std::size_t>(std::lower_bound(v.begin(), v.end(), tau - eps) - v.begin());
  std::size_t hi = static_cast<std::size_t>(std::upper_bound(v.begin(), v.end(), tau + eps) - v.begin());
  while (lo > 0 && within(v[lo - 1])) --lo;
  while (lo < hi && !within(v[lo])) ++lo;
  while (hi < v.size() && within(v[hi])) ++hi;
  while (hi > lo && !within(v[hi - 1])) --hi;
  return {lo, hi};
}

}  // namespace detail

/// argmin_i |d*(t_i) - level|, ties resolved to the smallest index.
inline std::size_t nearest_index(const RearrangedDensity& d_star, double level) {
  const auto v = d_star.values();
  const auto first_of = [&](double x) {
    return static_cast<std::size_t>(std::lower_bound(v.begin(), v.end(), x) - v.begin());
  };
  const std::size_t k = first_of(level);
  if (k == v.size()) return first_of(v.back());
  if (v[k] == level || k == 0) return k;
  const double below = level - v[k - 1];
  const double above = v[k] - level;
  return below <= above ? first_of(v[k - 1]) : k;
}

/// First and last grid midpoints whose density is within eps of tau.
inline Interval plateau_interval(const RearrangedDensity& d_star, double tau, double eps) {
  require(eps >= 0.0, ErrorKind::RangeError, "plateau tolerance must be non-negative");
  const auto [lo, hi] = detail::level_range(d_star, tau, eps);
  require(hi > lo, ErrorKind::LevelNotPresent, "no rearranged cell has density near " + detail::num(tau));
  return {d_star.t_at(lo), d_star.t_at(hi - 1)};
}

/// Maps a density level onto the rearranged grid.
inline MappedPoint map_level(const RearrangedDensity& d_star, double density,
                             std::optional<double> eps = std::nullopt) {
  MappedPoint p;
  p.density = density;
  p.t_index = nearest_index(d_star, density);
  p.t = d_star.t_at(p.t_index);
  const double e = eps.value_or(default_plateau_eps(d_star));
  const auto [lo, hi] = detail::level_range(d_star, d_star[p.t_index], e);
  if (hi - lo >= 2) p.plateau = Interval{d_star.t_at(lo), d_star.t_at(hi - 1)};
  return p;
}

inline MappedPoint map_point(const GriddedDensity& d, const RearrangedDensity& d_star,
                             std::span<const double> y, std::optional<double> eps = std::nullopt) {
  detail::require_matching(d, d_star);
  MappedPoint p = map_level(d_star, d.value_at(y), eps);
  p.source.assign(y.begin(), y.end());
  return p;
}

inline MappedPoint map_point(const GriddedDensity& d, const RearrangedDensity& d_star, double y,
                             std::optional<double> eps = std::nullopt) {
  return map_point(d, d_star, std::span<const double>(&y, 1), eps);
}

/// Maps an original-space cell (region id) onto the rearranged grid.
inline MappedPoint map_cell(const GriddedDensity& d, const RearrangedDensity& d_star, std::size_t cell,
                            std::optional<double> eps = std::nullopt) {
  detail::require_matching(d, d_star);
  require(cell < d.size(), ErrorKind::OutOfDomain, "cell index out of range");
  MappedPoint p = map_level(d_star, d[cell], eps);
  p.source = d.cell_center(cell);
  p.source_cell = cell;
  return p;
}

/// Left edge of the first strictly positive rearranged cell.
inline double support_boundary(const RearrangedDensity& d_star) {
  const auto v = d_star.values();
  const auto it = std::upper_bound(v.begin(), v.end(), 0.0);
  require(it != v.end(), ErrorKind::AllZero, "density has no positive cell");
  return d_star.left_edge(static_cast<std::size_t>(it - v.begin()));
}

/// Contribution of the rearranged interval [t_a, t_b] to the score. The
/// integrand is constant per cell, so partial cells are weighted by overlap.
inline double local_contribution(const MassLengthCurve& curve, double t_a, double t_b) {
  const double omega = curve.domain_measure;
  require(t_a >= 0.0 && t_a <= t_b && t_b <= omega, ErrorKind::RangeError,
          "need 0 <= t_a <= t_b <= |Omega|");
  const double dt = curve.cell_width;
  const std::size_t n = curve.size();
  const auto first = std::min(n, static_cast<std::size_t>(std::floor(t_a / dt)));
  const auto last = std::min(n, static_cast<std::size_t>(std::ceil(t_b / dt)));
  detail::CompensatedSum s;
  for (std::size_t i = first; i < last; ++i) {
    const double left = static_cast<double>(i) * dt;
    const double right = (i + 1 == n) ? omega : static_cast<double>(i + 1) * dt;
    const double overlap = std::min(t_b, right) - std::max(t_a, left);
    if (overlap > 0.0) s.add(curve.integrand[i] * overlap);
  }
  return s.value() / omega;
}

/// Contribution of a set of original-space cells. Each cell is matched to its
/// density level in d*; equal levels contribute equally, so shared indices are
/// counted once per cell.
inline double local_contribution_region(const GriddedDensity& d, const RearrangedDensity& d_star,
                                        const MassLengthCurve& curve, std::span<const std::size_t> cells) {
  detail::require_matching(d, d_star);
  require(curve.size() == d_star.size(), ErrorKind::ShapeMismatch, "curve does not match the rearrangement");
  detail::CompensatedSum s;
  for (std::size_t c : cells) {
    require(c < d.size(), ErrorKind::OutOfDomain, "region cell " + std::to_string(c) + " is out of range");
    s.add(curve.integrand[nearest_index(d_star, d[c])] * curve.cell_width);
  }
  return s.value() / curve.domain_measure;
}

/// Cells of a 1-D density whose centers fall in [lo, hi].
inline std::vector<std::size_t> cells_in_interval(const GriddedDensity& d, double lo, double hi) {
  require(d.domain().dim() == 1, ErrorKind::ShapeMismatch, "interval regions need a 1-D domain");
  require(lo <= hi, ErrorKind::RangeError, "region needs lo <= hi");
  const auto& b = d.domain().axis(0);
  require(lo >= b.lo && hi <= b.hi, ErrorKind::OutOfDomain, "region lies outside the domain");
  std::vector<std::size_t> cells;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double c = d.cell_center(i)[0];
    if (c >= lo && c <= hi) cells.push_back(i);
  }
  return cells;
}

/// Mass carried by rearranged cells with density strictly above tau.
inline double mass_above(const RearrangedDensity& d_star, double tau) {
  require(tau >= 0.0, ErrorKind::RangeError, "density level must be non-negative");
  const auto v = d_star.values();
  const auto k = static_cast<std::size_t>(std::upper_bound(v.begin(), v.end(), tau) - v.begin());
  detail::CompensatedSum s;
  for (std::size_t i = k; i < v.size(); ++i) s.add(v[i] * d_star.cell_width());
  return s.value();
}

inline double max_density(const GriddedDensity& d) {
  return *std::max_element(d.values().begin(), d.values().end());
}

/// d(y) / max d.
inline double relative_likelihood(const GriddedDensity& d, std::span<const double> y) {
  return d.value_at(y) / max_density(d);
}
inline double relative_likelihood(const GriddedDensity& d, double y) {
  return relative_likelihood(d, std::span<const double>(&y, 1));
}

/// Share of rearranged cells with density strictly below d(y).
inline double relative_rank(const GriddedDensity& d, const RearrangedDensity& d_star, std::span<const double> y) {
  detail::require_matching(d, d_star);
  const double level = d.value_at(y);
  const auto v = d_star.values();
  const auto below = std::lower_bound(v.begin(), v.end(), level) - v.begin();
  return static_cast<double>(below) / static_cast<double>(v.size());
}
inline double relative_rank(const GriddedDensity& d, const RearrangedDensity& d_star, double y) {
  return relative_rank(d, d_star, std::span<const double>(&y, 1));
}

struct KeyPoints {
  MappedPoint mode;
  std::optional<MappedPoint> median;  // one-dimensional domains only
  MappedPoint mean;
};

inline KeyPoints key_points(const GriddedDensity& d, const RearrangedDensity& d_star) {
  detail::require_matching(d, d_star);
  const auto v = d.values();
  KeyPoints kp;

  const auto mode_cell = static_cast<std::size_t>(std::max_element(v.begin(), v.end()) - v.begin());
  kp.mode = map_cell(d, d_star, mode_cell);
  kp.mode.source_cell.reset();

  const std::size_t dim = d.domain().dim();
  std::vector<detail::CompensatedSum> mean(dim);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0.0) continue;
    const auto c = d.cell_center(i);
    for (std::size_t a = 0; a < dim; ++a) mean[a].add(c[a] * v[i] * d.cell_measure());
  }
  std::vector<double> mu(dim);
  for (std::size_t a = 0; a < dim; ++a) {
    const auto& b = d.domain().axis(a);
    mu[a] = std::clamp(mean[a].value(), b.lo, b.hi);
  }
  kp.mean = map_point(d, d_star, mu);

  if (dim == 1) {
    const double lo = d.domain().axis(0).lo;
    const double w = d.cell_width(0);
    detail::CompensatedSum cum;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const double before = cum.value();
      const double cell_mass = v[i] * d.cell_measure();
      cum.add(cell_mass);
      if (cell_mass > 0.0 && cum.value() >= 0.5) {
        const double frac = std::clamp((0.5 - before) / cell_mass, 0.0, 1.0);
        MappedPoint m = map_level(d_star, v[i]);
        m.source = {lo + (static_cast<double>(i) + frac) * w};
        kp.median = m;
        break;
      }
    }
  }
  return kp;
}

}  // namespace sharpkit
