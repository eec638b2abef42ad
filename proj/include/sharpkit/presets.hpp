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

// Analytic density families sampled onto a uniform grid: uniform, truncated
// Gaussian, two-or-more component Gaussian mixture, and step functions.

#include <cmath>
#include <vector>

#include "sharpkit/core.hpp"

namespace sharpkit {

struct GaussianComponent {
  double weight = 1.0;
  double mu = 0.0;
  double sigma = 1.0;
};

/// Value `value` from `start` up to the next step's start (or the domain end).
struct PiecewiseStep {
  double start = 0.0;
  double value = 0.0;
};

inline double gaussian_pdf(double y, double mu, double sigma) {
  const double z = (y - mu) / sigma;
  return std::exp(-0.5 * z * z) / (sigma * std::sqrt(2.0 * 3.14159265358979323846));
}

inline GriddedDensity uniform_density(const BoundedDomain& domain, std::size_t cells) {
  return sample_density(domain, cells, [](double) { return 1.0; });
}

/// Gaussian truncated to the domain and renormalized there.
inline GriddedDensity gaussian_density(const BoundedDomain& domain, std::size_t cells, double mu, double sigma) {
  require(sigma > 0.0, ErrorKind::RangeError, "sigma must be positive");
  return sample_density(domain, cells, [=](double y) { return gaussian_pdf(y, mu, sigma); });
}

inline GriddedDensity mixture_density(const BoundedDomain& domain, std::size_t cells,
                                      const std::vector<GaussianComponent>& components) {
  require(!components.empty(), ErrorKind::RangeError, "mixture needs at least one component");
  for (const auto& c : components) {
    require(c.sigma > 0.0, ErrorKind::RangeError, "mixture sigma must be positive");
    require(c.weight >= 0.0, ErrorKind::NegativeMass, "mixture weight must be non-negative");
  }
  std::vector<GaussianComponent> comps(components.begin(), components.end());
  return sample_density(domain, cells, [comps](double y) {
    double s = 0.0;
    for (const auto& c : comps) s += c.weight * gaussian_pdf(y, c.mu, c.sigma);
    return s;
  });
}

inline GriddedDensity piecewise_density(const BoundedDomain& domain, std::size_t cells,
                                        const std::vector<PiecewiseStep>& steps) {
  require(!steps.empty(), ErrorKind::RangeError, "piecewise density needs at least one step");
  for (std::size_t k = 0; k < steps.size(); ++k) {
    require(steps[k].value >= 0.0, ErrorKind::NegativeMass, "piecewise values must be non-negative");
    if (k > 0) {
      require(steps[k].start > steps[k - 1].start, ErrorKind::RangeError,
              "piecewise breakpoints must be increasing");
    }
  }
  std::vector<PiecewiseStep> s(steps.begin(), steps.end());
  return sample_density(domain, cells, [s](double y) {
    double v = 0.0;
    for (const auto& step : s) {
      if (y >= step.start) v = step.value;
    }
    return v;
  });
}

}  // namespace sharpkit
