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

// Lorenz-type curve of the rearranged density and the Gini-style score.

#include <cstddef>
#include <iomanip>
#include <ostream>
#include <vector>

#include "sharpkit/core.hpp"
#include "sharpkit/discrete.hpp"

namespace sharpkit {

struct LorenzCurve {
  std::vector<double> u;       // normalized rearranged position in [0, 1]
  std::vector<double> values;  // cumulative mass share L(u)

  std::size_t size() const noexcept { return u.size(); }
};

/// Samples L(u) = integral_0^{u|Omega|} d* at `points` evenly spaced u values.
/// L is piecewise linear between cell edges, so interpolation there is exact.
/// points == 0 selects one point per cell edge (N + 1 points).
inline LorenzCurve lorenz(const RearrangedDensity& d_star, std::size_t points = 0) {
  const std::size_t n = d_star.size();
  if (points == 0) points = n + 1;
  require(points >= 2, ErrorKind::RangeError, "Lorenz grid needs at least 2 points");

  const double dt = d_star.cell_width();
  std::vector<double> prefix(n + 1, 0.0);
  detail::CompensatedSum acc;
  for (std::size_t i = 0; i < n; ++i) {
    acc.add(d_star[i] * dt);
    prefix[i + 1] = acc.value();
  }

  LorenzCurve c;
  c.u.resize(points);
  c.values.resize(points);
  const double last = static_cast<double>(points - 1);
  for (std::size_t k = 0; k < points; ++k) {
    const double u = static_cast<double>(k) / last;
    c.u[k] = u;
    const double x = u * static_cast<double>(n);
    auto cell = static_cast<std::size_t>(x);
    if (cell >= n) {
      c.values[k] = prefix[n];
      continue;
    }
    const double frac = x - static_cast<double>(cell);
    c.values[k] = prefix[cell] + frac * d_star[cell] * dt;
  }
  return c;
}

/// 1 - 2 * (trapezoidal integral of L over [0, 1]).
inline double sharpness_gini(const LorenzCurve& curve) {
  require(curve.size() >= 2, ErrorKind::RangeError, "Lorenz curve needs at least 2 points");
  detail::CompensatedSum area;
  for (std::size_t k = 1; k < curve.size(); ++k) {
    area.add(0.5 * (curve.values[k] + curve.values[k - 1]) * (curve.u[k] - curve.u[k - 1]));
  }
  return detail::clamp_score(1.0 - 2.0 * area.value(), "sharpness_gini");
}

inline void write_csv(std::ostream& os, const LorenzCurve& curve) {
  os << "u,L\n" << std::setprecision(17);
  for (std::size_t k = 0; k < curve.size(); ++k) os << curve.u[k] << ',' << curve.values[k] << '\n';
}

inline void write_csv(std::ostream& os, const MassLengthCurve& curve) {
  os << "t,density,mass,length,integrand\n" << std::setprecision(17);
  for (std::size_t i = 0; i < curve.size(); ++i) {
    os << curve.t_grid[i] << ',' << curve.density[i] << ',' << curve.mass[i] << ',' << curve.length[i]
       << ',' << curve.integrand[i] << '\n';
  }
}

}  // namespace sharpkit
