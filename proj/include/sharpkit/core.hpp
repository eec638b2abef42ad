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

// Value types shared by every module: domains, validated distributions, the
// gridded density representation, and the monotone rearrangement kernel.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <iomanip>
#include <limits>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sharpkit/error.hpp"

namespace sharpkit {

namespace tol {
inline constexpr double normalization = 1e-9;
inline constexpr double negative_slack = 1e-12;
inline constexpr double score_clamp = 1e-12;
inline constexpr double grid_uniformity = 1e-12;
}  // namespace tol

namespace detail {

// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

inline double compensated_sum(std::span<const double> xs) noexcept {
  CompensatedSum s;
  for (double x : xs) s.add(x);
  return s.value();
}

inline std::string num(double x) {
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

// Clamps tiny negative round-off to zero; rejects anything more negative.
inline void clamp_non_negative(std::vector<double>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    double& v = values[i];
    require(std::isfinite(v), ErrorKind::NegativeMass,
            "entry " + std::to_string(i) + " is not finite");
    if (v < -tol::negative_slack) {
      fail(ErrorKind::NegativeMass,
           "entry " + std::to_string(i) + " is negative (" + num(v) + ")");
    }
    if (v < 0.0) v = 0.0;
  }
}

}  // namespace detail

enum class NormalizationPolicy { Strict, Renormalize };

struct AxisBounds {
  double lo = 0.0;
  double hi = 1.0;
  double extent() const noexcept { return hi - lo; }
};

/// Box-shaped outcome region with finite positive measure.
class BoundedDomain {
 public:
  explicit BoundedDomain(std::vector<AxisBounds> bounds) : bounds_(std::move(bounds)) {
    require(!bounds_.empty(), ErrorKind::RangeError, "domain needs at least one axis");
    measure_ = 1.0;
    for (std::size_t a = 0; a < bounds_.size(); ++a) {
      const auto& b = bounds_[a];
      require(std::isfinite(b.lo) && std::isfinite(b.hi) && b.hi > b.lo, ErrorKind::RangeError,
              "axis " + std::to_string(a) + " requires finite lo < hi");
      measure_ *= b.extent();
    }
    require(std::isfinite(measure_) && measure_ > 0.0, ErrorKind::RangeError,
            "domain measure must be positive and finite");
  }

  static BoundedDomain interval(double lo, double hi) { return BoundedDomain({{lo, hi}}); }
  static BoundedDomain unit_cube(std::size_t dim) {
    return BoundedDomain(std::vector<AxisBounds>(dim, AxisBounds{0.0, 1.0}));
  }

  std::size_t dim() const noexcept { return bounds_.size(); }
  std::span<const AxisBounds> bounds() const noexcept { return bounds_; }
  const AxisBounds& axis(std::size_t a) const { return bounds_.at(a); }
  double measure() const noexcept { return measure_; }

  bool contains(std::span<const double> y) const noexcept {
    if (y.size() != bounds_.size()) return false;
    for (std::size_t a = 0; a < y.size(); ++a) {
      if (!(y[a] >= bounds_[a].lo && y[a] <= bounds_[a].hi)) return false;
    }
    return true;
  }

 private:
  std::vector<AxisBounds> bounds_;
  double measure_ = 1.0;
};

/// Finite probability vector over n >= 2 ordered outcomes.
class DiscreteDistribution {
 public:
  static DiscreteDistribution validate(std::span<const double> raw,
                                       NormalizationPolicy policy = NormalizationPolicy::Strict) {
    require(raw.size() >= 2, ErrorKind::RangeError, "a distribution needs at least 2 outcomes");
    std::vector<double> probs(raw.begin(), raw.end());
    detail::clamp_non_negative(probs);
    const double total = detail::compensated_sum(probs);
    if (policy == NormalizationPolicy::Strict) {
      require(std::abs(total - 1.0) <= tol::normalization, ErrorKind::NotNormalized,
              "probabilities sum to " + detail::num(total));
    } else {
      require(total > 0.0, ErrorKind::ZeroTotal, "probabilities sum to zero");
      for (double& p : probs) p /= total;
    }
    return DiscreteDistribution(std::move(probs));
  }

  std::size_t size() const noexcept { return probs_.size(); }
  std::span<const double> probs() const noexcept { return probs_; }
  double operator[](std::size_t i) const { return probs_[i]; }

  /// Probabilities in ascending order (stable).
  std::vector<double> sorted() const {
    std::vector<double> s = probs_;
    std::stable_sort(s.begin(), s.end());
    return s;
  }

 private:
  explicit DiscreteDistribution(std::vector<double> probs) : probs_(std::move(probs)) {}
  std::vector<double> probs_;
};

inline DiscreteDistribution validate_distribution(
    std::span<const double> probs, NormalizationPolicy policy = NormalizationPolicy::Strict) {
  return DiscreteDistribution::validate(probs, policy);
}

inline DiscreteDistribution validate_distribution(
    std::initializer_list<double> probs, NormalizationPolicy policy = NormalizationPolicy::Strict) {
  return DiscreteDistribution::validate(std::span<const double>(probs.begin(), probs.size()), policy);
}

/// Piecewise-constant density on a uniform grid over a box domain. Cells are
/// stored row-major (last axis fastest).
class GriddedDensity {
 public:
  static GriddedDensity from_values(BoundedDomain domain, std::vector<std::size_t> shape,
                                    std::vector<double> values,
                                    NormalizationPolicy policy = NormalizationPolicy::Strict) {
    require(shape.size() == domain.dim(), ErrorKind::ShapeMismatch,
            "grid shape rank does not match domain dimension");
    std::size_t n = 1;
    for (std::size_t s : shape) {
      require(s >= 1, ErrorKind::ShapeMismatch, "every axis needs at least one cell");
      n *= s;
    }
    require(n == values.size(), ErrorKind::ShapeMismatch,
            "grid shape holds " + std::to_string(n) + " cells but " +
                std::to_string(values.size()) + " values were given");
    detail::clamp_non_negative(values);
    const double cell_measure = domain.measure() / static_cast<double>(n);
    const double mass = detail::compensated_sum(values) * cell_measure;
    if (policy == NormalizationPolicy::Strict) {
      require(std::abs(mass - 1.0) <= tol::normalization, ErrorKind::NotNormalized,
              "density integrates to " + detail::num(mass));
    } else {
      require(mass > 0.0, ErrorKind::ZeroTotal, "density integrates to zero");
      for (double& v : values) v /= mass;
    }
    return GriddedDensity(std::move(domain), std::move(shape), std::move(values), cell_measure);
  }

  static GriddedDensity from_values(BoundedDomain domain, std::vector<double> values,
                                    NormalizationPolicy policy = NormalizationPolicy::Strict) {
    require(domain.dim() == 1, ErrorKind::ShapeMismatch, "multi-axis domains need an explicit shape");
    std::vector<std::size_t> shape{values.size()};
    return from_values(std::move(domain), std::move(shape), std::move(values), policy);
  }

  const BoundedDomain& domain() const noexcept { return domain_; }
  std::span<const std::size_t> shape() const noexcept { return shape_; }
  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double cell_measure() const noexcept { return cell_measure_; }
  double operator[](std::size_t i) const { return values_[i]; }

  double cell_width(std::size_t axis) const {
    return domain_.axis(axis).extent() / static_cast<double>(shape_.at(axis));
  }

  /// Flat index of the cell containing y; the upper boundary belongs to the last cell.
  std::size_t cell_index(std::span<const double> y) const {
    require(domain_.contains(y), ErrorKind::OutOfDomain, "point lies outside the domain");
    std::size_t flat = 0;
    for (std::size_t a = 0; a < shape_.size(); ++a) {
      const auto& b = domain_.axis(a);
      const double w = cell_width(a);
      auto k = static_cast<std::size_t>(std::floor((y[a] - b.lo) / w));
      k = std::min(k, shape_[a] - 1);
      flat = flat * shape_[a] + k;
    }
    return flat;
  }
  std::size_t cell_index(double y) const { return cell_index(std::span<const double>(&y, 1)); }

  double value_at(std::span<const double> y) const { return values_[cell_index(y)]; }
  double value_at(double y) const { return values_[cell_index(y)]; }

  std::vector<double> cell_center(std::size_t flat) const {
    require(flat < values_.size(), ErrorKind::OutOfDomain, "cell index out of range");
    std::vector<double> c(shape_.size());
    for (std::size_t a = shape_.size(); a-- > 0;) {
      const std::size_t k = flat % shape_[a];
      flat /= shape_[a];
      c[a] = domain_.axis(a).lo + (static_cast<double>(k) + 0.5) * cell_width(a);
    }
    return c;
  }

 private:
  GriddedDensity(BoundedDomain domain, std::vector<std::size_t> shape, std::vector<double> values,
                 double cell_measure)
      : domain_(std::move(domain)),
        shape_(std::move(shape)),
        values_(std::move(values)),
        cell_measure_(cell_measure) {}

  BoundedDomain domain_;
  std::vector<std::size_t> shape_;
  std::vector<double> values_;
  double cell_measure_;
};

/// Non-decreasing rearrangement d*(t) on [0, |Omega|], one value per cell.
class RearrangedDensity {
 public:
  /// Wraps an already sorted sequence; validates order and normalization.
  static RearrangedDensity from_sorted(double domain_measure, std::vector<double> values) {
    require(std::isfinite(domain_measure) && domain_measure > 0.0, ErrorKind::RangeError,
            "domain measure must be positive");
    require(!values.empty(), ErrorKind::EmptySample, "rearranged density has no cells");
    detail::clamp_non_negative(values);
    require(std::is_sorted(values.begin(), values.end()), ErrorKind::RangeError,
            "rearranged values must be non-decreasing");
    const double dt = domain_measure / static_cast<double>(values.size());
    const double mass = detail::compensated_sum(values) * dt;
    require(std::abs(mass - 1.0) <= tol::normalization, ErrorKind::NotNormalized,
            "rearranged density integrates to " + detail::num(mass));
    return RearrangedDensity(domain_measure, std::move(values));
  }

  double domain_measure() const noexcept { return measure_; }
  double cell_width() const noexcept { return dt_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }

  /// Midpoint of cell i.
  double t_at(std::size_t i) const noexcept { return (static_cast<double>(i) + 0.5) * dt_; }
  double left_edge(std::size_t i) const noexcept { return static_cast<double>(i) * dt_; }

  std::vector<double> t_grid() const {
    std::vector<double> t(values_.size());
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = t_at(i);
    return t;
  }

  double max_value() const noexcept { return values_.back(); }

 private:
  friend RearrangedDensity rearrange(const GriddedDensity& d);
  RearrangedDensity(double measure, std::vector<double> values)
      : measure_(measure), dt_(measure / static_cast<double>(values.size())), values_(std::move(values)) {}

  double measure_;
  double dt_;
  std::vector<double> values_;
};

/// Sorts the cell densities ascending. Spatial layout and dimension are discarded.
inline RearrangedDensity rearrange(const GriddedDensity& d) {
  std::vector<double> sorted(d.values().begin(), d.values().end());
  std::stable_sort(sorted.begin(), sorted.end());
  return RearrangedDensity(d.domain().measure(), std::move(sorted));
}

/// Views a rearrangement as a density on the interval [0, |Omega|].
inline GriddedDensity as_density(const RearrangedDensity& r) {
  return GriddedDensity::from_values(BoundedDomain::interval(0.0, r.domain_measure()),
                                     std::vector<double>(r.values().begin(), r.values().end()));
}

/// Mass and length curves of a rearrangement, sampled at cell midpoints.
///
/// Inside a cell m(t) and d*(t) L(t) both fall at rate d*, so the integrand
/// m - d* L is constant per cell and the midpoint value integrates it exactly.
struct MassLengthCurve {
  double domain_measure = 0.0;
  double cell_width = 0.0;
  std::vector<double> t_grid;
  std::vector<double> density;    // d*(t_i)
  std::vector<double> mass;       // m(t_i)
  std::vector<double> mass_edges; // m at the N+1 cell edges; m(0) = 1, m(|Omega|) = 0
  std::vector<double> length;     // L(t_i) = |Omega| - t_i
  std::vector<double> integrand;  // m(t_i) - d*(t_i) L(t_i)

  std::size_t size() const noexcept { return t_grid.size(); }
};

inline MassLengthCurve mass_length(const RearrangedDensity& d_star) {
  const std::size_t n = d_star.size();
  const double dt = d_star.cell_width();
  const double omega = d_star.domain_measure();
  MassLengthCurve c;
  c.domain_measure = omega;
  c.cell_width = dt;
  c.t_grid = d_star.t_grid();
  c.density.assign(d_star.values().begin(), d_star.values().end());
  c.mass.resize(n);
  c.mass_edges.assign(n + 1, 0.0);
  c.length.resize(n);
  c.integrand.resize(n);

  detail::CompensatedSum suffix;
  for (std::size_t i = n; i-- > 0;) {
    const double cell_mass = d_star[i] * dt;
    const double right = suffix.value();
    suffix.add(cell_mass);
    c.mass_edges[i] = suffix.value();
    c.mass[i] = right + 0.5 * cell_mass;
    c.length[i] = omega - c.t_grid[i];
    c.integrand[i] = c.mass[i] - d_star[i] * c.length[i];
  }
  return c;
}

/// Flattens densities on a tensor grid with explicit per-axis cell edges.
/// All cells must have equal measure.
inline GriddedDensity flatten_multidim(std::vector<double> values,
                                       const std::vector<std::vector<double>>& axis_edges,
                                       NormalizationPolicy policy = NormalizationPolicy::Strict) {
  require(!axis_edges.empty(), ErrorKind::ShapeMismatch, "at least one axis is required");
  std::vector<AxisBounds> bounds;
  std::vector<std::size_t> shape;
  double ratio = 1.0;  // max cell measure / min cell measure
  for (std::size_t a = 0; a < axis_edges.size(); ++a) {
    const auto& e = axis_edges[a];
    require(e.size() >= 2, ErrorKind::ShapeMismatch,
            "axis " + std::to_string(a) + " needs at least two edges");
    double wmin = std::numeric_limits<double>::infinity();
    double wmax = 0.0;
    for (std::size_t k = 1; k < e.size(); ++k) {
      const double w = e[k] - e[k - 1];
      require(w > 0.0, ErrorKind::RangeError, "axis edges must be strictly increasing");
      wmin = std::min(wmin, w);
      wmax = std::max(wmax, w);
    }
    ratio *= wmax / wmin;
    bounds.push_back({e.front(), e.back()});
    shape.push_back(e.size() - 1);
  }
  require(ratio - 1.0 <= tol::grid_uniformity, ErrorKind::NonUniformGrid,
          "cell measures differ by a relative " + detail::num(ratio - 1.0));
  return GriddedDensity::from_values(BoundedDomain(std::move(bounds)), std::move(shape),
                                     std::move(values), policy);
}

/// Uniform tensor grid with `shape` cells per axis over `domain`.
inline GriddedDensity flatten_multidim(std::vector<double> values, const BoundedDomain& domain,
                                       std::vector<std::size_t> shape,
                                       NormalizationPolicy policy = NormalizationPolicy::Strict) {
  return GriddedDensity::from_values(domain, std::move(shape), std::move(values), policy);
}

/// Samples f at the cell midpoints of a uniform 1-D grid and renormalizes on the domain.
inline GriddedDensity sample_density(const BoundedDomain& domain, std::size_t cells,
                                     const std::function<double(double)>& f) {
  require(domain.dim() == 1, ErrorKind::ShapeMismatch, "analytic sampling is one-dimensional");
  require(cells >= 1, ErrorKind::RangeError, "need at least one cell");
  const auto& b = domain.axis(0);
  const double w = b.extent() / static_cast<double>(cells);
  std::vector<double> v(cells);
  for (std::size_t i = 0; i < cells; ++i) v[i] = f(b.lo + (static_cast<double>(i) + 0.5) * w);
  return GriddedDensity::from_values(domain, std::move(v), NormalizationPolicy::Renormalize);
}

inline constexpr std::size_t default_grid_cells = 10'000;

}  // namespace sharpkit
