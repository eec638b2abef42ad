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

// Entropy, KL divergence from uniform, and variance. Discrete quantities
// default to bits, continuous ones to nats.

#include <cmath>
#include <numbers>
#include <optional>
#include <span>
#include <vector>

#include "sharpkit/core.hpp"

namespace sharpkit {

enum class LogBase { Bits, Nats };

namespace detail {
inline double log_in(double x, LogBase base) {
  return base == LogBase::Bits ? std::log2(x) : std::log(x);
}
}  // namespace detail

inline double entropy_discrete(const DiscreteDistribution& p, LogBase base = LogBase::Bits) {
  detail::CompensatedSum s;
  for (double pi : p.probs()) {
    if (pi > 0.0) s.add(-pi * detail::log_in(pi, base));
  }
  return s.value();
}

inline double kl_from_uniform_discrete(const DiscreteDistribution& p, LogBase base = LogBase::Bits) {
  const double n = static_cast<double>(p.size());
  detail::CompensatedSum s;
  for (double pi : p.probs()) {
    if (pi > 0.0) s.add(pi * detail::log_in(pi * n, base));
  }
  return s.value();
}

/// Variance of the outcome labels; labels default to 0, 1, ..., n - 1.
inline double variance_discrete(const DiscreteDistribution& p,
                                std::optional<std::span<const double>> labels = std::nullopt) {
  if (labels) {
    require(labels->size() == p.size(), ErrorKind::LengthMismatch,
            "expected " + std::to_string(p.size()) + " labels, got " + std::to_string(labels->size()));
  }
  detail::CompensatedSum mean;
  detail::CompensatedSum second;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double x = labels ? (*labels)[i] : static_cast<double>(i);
    mean.add(p[i] * x);
    second.add(p[i] * x * x);
  }
  const double mu = mean.value();
  return std::max(0.0, second.value() - mu * mu);
}

/// Differential entropy of the piecewise-constant representation.
inline double entropy_continuous(const GriddedDensity& d, LogBase base = LogBase::Nats) {
  detail::CompensatedSum s;
  for (double v : d.values()) {
    if (v > 0.0) s.add(-v * detail::log_in(v, base) * d.cell_measure());
  }
  return s.value();
}

inline double kl_from_uniform_continuous(const GriddedDensity& d, LogBase base = LogBase::Nats) {
  const double omega = d.domain().measure();
  detail::CompensatedSum s;
  for (double v : d.values()) {
    if (v > 0.0) s.add(v * detail::log_in(v * omega, base) * d.cell_measure());
  }
  return s.value();
}

}  // namespace sharpkit
