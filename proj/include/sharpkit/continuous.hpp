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

#include "sharpkit/core.hpp"
#include "sharpkit/discrete.hpp"

namespace sharpkit {

/// Mass-length form: (1/|Omega|) * integral of m(t) - d*(t) L(t).
inline double sharpness_integral(const MassLengthCurve& curve) {
  detail::CompensatedSum s;
  for (double v : curve.integrand) s.add(v * curve.cell_width);
  return detail::clamp_score(s.value() / curve.domain_measure, "sharpness_integral");
}

/// Simplified form: (2/|Omega|) * integral of t d*(t) - 1. Midpoints make the
/// cell integrals exact on the piecewise-constant representation.
inline double sharpness_simplified(const RearrangedDensity& d_star) {
  const double dt = d_star.cell_width();
  detail::CompensatedSum s;
  for (std::size_t i = 0; i < d_star.size(); ++i) s.add(d_star.t_at(i) * d_star[i] * dt);
  return detail::clamp_score(2.0 / d_star.domain_measure() * s.value() - 1.0, "sharpness_simplified");
}

/// Shorthand for rearrange + simplified form.
inline double sharpness(const GriddedDensity& d) { return sharpness_simplified(rearrange(d)); }

/// Closed form for a density uniform on a subset of measure `subset_measure`.
inline double sharpness_uniform_subset(double subset_measure, double domain_measure) {
  require(domain_measure > 0.0, ErrorKind::RangeError, "domain measure must be positive");
  require(subset_measure > 0.0 && subset_measure <= domain_measure, ErrorKind::RangeError,
          "subset measure must lie in (0, |Omega|]");
  return 1.0 - subset_measure / domain_measure;
}

}  // namespace sharpkit
