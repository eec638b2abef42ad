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

// Sharpness of finite outcome spaces: the deterministic exclusion score, the
// TVD baseline, the cumulative shortfall construction and its compact
// coefficient form, plus the relative gain between two scores.

#include <cstddef>
#include <vector>

#include "sharpkit/core.hpp"

namespace sharpkit {

namespace detail {

// Absorbs round-off near the unit interval; anything further out is a bug.
inline double clamp_score(double s, const char* where) {
  if (s < 0.0) {
    if (s < -tol::score_clamp) fail(ErrorKind::InternalError, std::string(where) + " below 0: " + num(s));
    return 0.0;
  }
  if (s > 1.0) {
    if (s > 1.0 + tol::score_clamp) fail(ErrorKind::InternalError, std::string(where) + " above 1: " + num(s));
    return 1.0;
  }
  return s;
}

}  // namespace detail

/// Fraction of ruled-out outcomes, r / (n - 1).
inline double sharpness_det(std::size_t n, std::size_t excluded) {
  require(n >= 2, ErrorKind::RangeError, "n must be at least 2");
  require(excluded <= n - 1, ErrorKind::RangeError, "cannot exclude more than n - 1 outcomes");
  return static_cast<double>(excluded) / static_cast<double>(n - 1);
}

/// Total variation distance from uniform, scaled to [0, 1].
inline double tvd_sharpness(const DiscreteDistribution& p) {
  const double n = static_cast<double>(p.size());
  detail::CompensatedSum s;
  for (double pi : p.probs()) s.add(std::abs(pi - 1.0 / n));
  return detail::clamp_score(s.value() / (2.0 * (1.0 - 1.0 / n)), "tvd_sharpness");
}

/// One step of the cumulative construction (1-based j).
struct CumulativeStep {
  std::size_t j = 0;
  double p = 0.0;          // j-th smallest probability
  double mass = 0.0;       // remaining mass m_j
  std::size_t length = 0;  // remaining outcome count n - j + 1
  double shortfall = 0.0;  // m_j - p_j L_j
};

struct CumulativeSharpness {
  double score = 0.0;
  std::vector<CumulativeStep> steps;
};

/// Sum of local shortfalls from uniformity over the remaining outcomes.
inline CumulativeSharpness sharpness_cumulative(const DiscreteDistribution& p) {
  const std::vector<double> sorted = p.sorted();
  const std::size_t n = sorted.size();

  // suffix[j] = sum_{k >= j} p_(k), 0-based
  std::vector<double> suffix(n + 1, 0.0);
  detail::CompensatedSum acc;
  for (std::size_t k = n; k-- > 0;) {
    acc.add(sorted[k]);
    suffix[k] = acc.value();
  }

  CumulativeSharpness out;
  out.steps.reserve(n - 1);
  detail::CompensatedSum total;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    CumulativeStep step;
    step.j = k + 1;
    step.p = sorted[k];
    step.mass = suffix[k];
    step.length = n - k;
    step.shortfall = step.mass - step.p * static_cast<double>(step.length);
    total.add(step.shortfall);
    out.steps.push_back(step);
  }
  out.score = detail::clamp_score(total.value() / static_cast<double>(n - 1), "sharpness_cumulative");
  return out;
}

/// Compact form: sum_j ((2j - n - 1)/(n - 1)) p_(j) over ascending probabilities.
inline double sharpness_discrete(const DiscreteDistribution& p) {
  const std::vector<double> sorted = p.sorted();
  const std::size_t n = sorted.size();
  const double denom = static_cast<double>(n - 1);
  detail::CompensatedSum s;
  for (std::size_t k = 0; k < n; ++k) {
    const double j = static_cast<double>(k + 1);
    s.add((2.0 * j - static_cast<double>(n) - 1.0) / denom * sorted[k]);
  }
  return detail::clamp_score(s.value(), "sharpness_discrete");
}

/// Share of the available headroom above s1 that s2 achieves.
inline double relative_sharpness(double s1, double s2) {
  require(s1 >= 0.0 && s2 <= 1.0, ErrorKind::RangeError, "scores must lie in [0, 1]");
  require(s2 >= s1, ErrorKind::RangeError, "relative gain needs s2 >= s1");
  require(s1 < 1.0, ErrorKind::DegenerateBaseline, "baseline score is already 1");
  return (s2 - s1) / (1.0 - s1);
}

}  // namespace sharpkit
