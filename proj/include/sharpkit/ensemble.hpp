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

// Ensemble workflow on a 2-D spatial grid: member samples per cell become
// histogram densities, and each cell reports its sharpness and a central
// member interval.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sharpkit/continuous.hpp"
#include "sharpkit/core.hpp"
#include "sharpkit/diagnostics.hpp"
#include "sharpkit/parallel.hpp"
#include "sharpkit/rng.hpp"

namespace sharpkit {

inline constexpr std::size_t default_histogram_bins = 50;

/// Normalized equal-width histogram over a 1-D domain. The upper bound falls in
/// the last bin; samples outside the domain are rejected, never clipped.
inline GriddedDensity density_from_samples(std::span<const double> samples, const BoundedDomain& domain,
                                           std::size_t bins = default_histogram_bins) {
  require(domain.dim() == 1, ErrorKind::ShapeMismatch, "histogram domain must be one-dimensional");
  require(bins >= 1, ErrorKind::RangeError, "need at least one bin");
  require(!samples.empty(), ErrorKind::EmptySample, "no samples");
  const auto& b = domain.axis(0);
  const double w = b.extent() / static_cast<double>(bins);
  std::vector<double> counts(bins, 0.0);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double x = samples[i];
    if (!(x >= b.lo && x <= b.hi)) {
      fail(ErrorKind::SampleOutOfDomain, "sample " + std::to_string(i) + " (" + detail::num(x) +
                                             ") lies outside [" + detail::num(b.lo) + ", " +
                                             detail::num(b.hi) + "]");
    }
    auto k = static_cast<std::size_t>(std::floor((x - b.lo) / w));
    counts[std::min(k, bins - 1)] += 1.0;
  }
  const double scale = 1.0 / (static_cast<double>(samples.size()) * w);
  for (double& c : counts) c *= scale;
  return GriddedDensity::from_values(domain, std::move(counts));
}

/// Linear interpolation between order statistics at position q (n - 1).
inline double empirical_quantile(std::span<const double> sorted, double q) {
  require(!sorted.empty(), ErrorKind::EmptySample, "quantile of an empty sample");
  require(q >= 0.0 && q <= 1.0, ErrorKind::RangeError, "quantile level must lie in [0, 1]");
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto k = static_cast<std::size_t>(std::floor(pos));
  if (k + 1 >= sorted.size()) return sorted.back();
  const double frac = pos - static_cast<double>(k);
  return sorted[k] + frac * (sorted[k + 1] - sorted[k]);
}

class EnsembleGrid {
 public:
  /// `members` is row-major with rows * cols entries.
  EnsembleGrid(std::size_t rows, std::size_t cols, std::vector<std::vector<double>> members, BoundedDomain domain)
      : rows_(rows), cols_(cols), members_(std::move(members)), domain_(std::move(domain)) {
    require(rows >= 1 && cols >= 1, ErrorKind::ShapeMismatch, "grid needs at least one cell");
    require(members_.size() == rows * cols, ErrorKind::ShapeMismatch, "member table does not match grid shape");
    require(domain_.dim() == 1, ErrorKind::ShapeMismatch, "forecast variable domain must be one-dimensional");
    const auto& b = domain_.axis(0);
    for (std::size_t i = 0; i < members_.size(); ++i) {
      const std::string where = "cell (" + std::to_string(i / cols) + "," + std::to_string(i % cols) + ")";
      require(members_[i].size() >= 2, ErrorKind::EmptySample, where + " needs at least 2 members");
      for (double x : members_[i]) {
        require(x >= b.lo && x <= b.hi, ErrorKind::SampleOutOfDomain,
                where + " has member " + detail::num(x) + " outside the domain");
      }
    }
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const BoundedDomain& domain() const noexcept { return domain_; }
  std::span<const double> cell(std::size_t row, std::size_t col) const { return members_.at(row * cols_ + col); }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::vector<double>> members_;
  BoundedDomain domain_;
};

struct CellReport {
  std::size_t row = 0;
  std::size_t col = 0;
  double sharpness = 0.0;
  Interval interval;  // 5th to 95th member percentile
  std::size_t member_count = 0;

  friend bool operator==(const CellReport&, const CellReport&) = default;
};

struct SharpnessMap {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<CellReport> cells;  // row-major

  const CellReport& at(std::size_t row, std::size_t col) const { return cells.at(row * cols + col); }
};

inline CellReport report_cell(std::span<const double> members, const BoundedDomain& domain, std::size_t bins) {
  CellReport r;
  r.sharpness = sharpness_simplified(rearrange(density_from_samples(members, domain, bins)));
  std::vector<double> sorted(members.begin(), members.end());
  std::sort(sorted.begin(), sorted.end());
  r.interval = {empirical_quantile(sorted, 0.05), empirical_quantile(sorted, 0.95)};
  r.member_count = members.size();
  return r;
}

/// Per-cell histogram -> rearrangement -> simplified sharpness. Cells run in
/// parallel; results are ordered by (row, col).
inline SharpnessMap grid_sharpness_map(const EnsembleGrid& grid, std::size_t bins = default_histogram_bins) {
  SharpnessMap map;
  map.rows = grid.rows();
  map.cols = grid.cols();
  map.cells.resize(grid.rows() * grid.cols());
  std::vector<std::optional<Error>> errors(map.cells.size());
  parallel_for(map.cells.size(), [&](std::size_t i) {
    const std::size_t row = i / grid.cols();
    const std::size_t col = i % grid.cols();
    try {
      map.cells[i] = report_cell(grid.cell(row, col), grid.domain(), bins);
    } catch (const Error& e) {
      errors[i] = Error(e.kind(), "cell (" + std::to_string(row) + "," + std::to_string(col) + "): " + e.message());
    }
    map.cells[i].row = row;
    map.cells[i].col = col;
  });
  for (auto& e : errors) {
    if (e) throw *e;
  }
  return map;
}

struct SharpnessSeries {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<double>> values;       // per cell, one entry per issue
  std::vector<std::vector<double>> differences;  // per cell, issue-to-issue change

  std::span<const double> at(std::size_t row, std::size_t col) const { return values.at(row * cols + col); }
  std::span<const double> diff_at(std::size_t row, std::size_t col) const {
    return differences.at(row * cols + col);
  }
};

/// Per-cell sharpness over successive forecast issues.
inline SharpnessSeries sharpness_timeseries(std::span<const SharpnessMap> issues) {
  require(!issues.empty(), ErrorKind::EmptySample, "no forecast issues");
  SharpnessSeries s;
  s.rows = issues.front().rows;
  s.cols = issues.front().cols;
  const std::size_t cells = s.rows * s.cols;
  for (std::size_t k = 0; k < issues.size(); ++k) {
    require(issues[k].rows == s.rows && issues[k].cols == s.cols && issues[k].cells.size() == cells,
            ErrorKind::ShapeMismatch, "issue " + std::to_string(k) + " has a different grid shape");
  }
  s.values.assign(cells, {});
  s.differences.assign(cells, {});
  for (std::size_t c = 0; c < cells; ++c) {
    for (std::size_t k = 0; k < issues.size(); ++k) {
      s.values[c].push_back(issues[k].cells[c].sharpness);
      if (k > 0) s.differences[c].push_back(s.values[c][k] - s.values[c][k - 1]);
    }
  }
  return s;
}

/// Synthetic rainfall ensemble: each cell draws a mean from a categorical set
/// and a spread from a uniform range, then members from that normal.
struct RainfallSimulation {
  std::size_t rows = 6;
  std::size_t cols = 6;
  std::size_t members = 30;
  std::vector<double> means{0.2, 0.5, 1.0, 2.0, 3.0};
  std::vector<double> mean_probs{0.4, 0.3, 0.15, 0.1, 0.05};
  double sigma_lo = 0.1;
  double sigma_hi = 1.0;
  double domain_lo = 0.0;
  double domain_hi = 10.0;
};

struct SimulatedEnsemble {
  EnsembleGrid grid;
  std::vector<double> cell_mean;   // row-major
  std::vector<double> cell_sigma;  // row-major
};

/// Members are drawn from the normal truncated to the domain (rejection), so
/// every sample is a valid in-domain value.
inline SimulatedEnsemble simulate_rainfall(const RainfallSimulation& cfg, std::uint64_t seed) {
  require(cfg.means.size() == cfg.mean_probs.size() && !cfg.means.empty(), ErrorKind::LengthMismatch,
          "means and their probabilities must have equal nonzero length");
  Rng rng(seed);
  const std::size_t cells = cfg.rows * cfg.cols;
  std::vector<std::vector<double>> members(cells);
  std::vector<double> mean(cells), sigma(cells);
  for (std::size_t c = 0; c < cells; ++c) {
    mean[c] = cfg.means[rng.categorical(cfg.mean_probs)];
    sigma[c] = rng.uniform(cfg.sigma_lo, cfg.sigma_hi);
    members[c].reserve(cfg.members);
    while (members[c].size() < cfg.members) {
      const double x = rng.normal(mean[c], sigma[c]);
      if (x >= cfg.domain_lo && x <= cfg.domain_hi) members[c].push_back(x);
    }
  }
  return {EnsembleGrid(cfg.rows, cfg.cols, std::move(members), BoundedDomain::interval(cfg.domain_lo, cfg.domain_hi)),
          std::move(mean), std::move(sigma)};
}

}  // namespace sharpkit
