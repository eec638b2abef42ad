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

// Rescaling of sharpness scores when a domain is extended with zero-mass
// outcomes (forward) or restricted to drop them (inverse).

#include <cstddef>

#include "sharpkit/error.hpp"

namespace sharpkit {

namespace detail {

inline void require_score(double s) {
  require(s >= 0.0 && s <= 1.0, ErrorKind::RangeError, "score must lie in [0, 1]");
}

inline double checked_result(double s) {
  if (s < -1e-12 || s > 1.0 + 1e-12) {
    fail(ErrorKind::OutOfRangeResult,
         "transformed score " + std::to_string(s) +
             " is outside [0, 1]; the removed region was not mass-free");
  }
  return s < 0.0 ? 0.0 : (s > 1.0 ? 1.0 : s);
}

}  // namespace detail

/// Embed a score over m outcomes into n > m outcomes.
inline double discrete_forward(double s_m, std::size_t m, std::size_t n) {
  require(m >= 2 && m < n, ErrorKind::RangeError, "need 2 <= m < n");
  detail::require_score(s_m);
  return 1.0 + static_cast<double>(m - 1) / static_cast<double>(n - 1) * (s_m - 1.0);
}

/// Restrict a score over n outcomes to m < n, assuming n - m outcomes carry no mass.
inline double discrete_inverse(double s_n, std::size_t n, std::size_t m) {
  require(m >= 2 && m < n, ErrorKind::RangeError, "need 2 <= m < n");
  detail::require_score(s_n);
  return detail::checked_result(1.0 + static_cast<double>(n - 1) / static_cast<double>(m - 1) * (s_n - 1.0));
}

/// Extend a score on a region of measure l to a region of measure big_l > l.
inline double continuous_forward(double s_l, double l, double big_l) {
  require(l > 0.0 && l < big_l, ErrorKind::RangeError, "need 0 < l < L");
  detail::require_score(s_l);
  return 1.0 + (l / big_l) * (s_l - 1.0);
}

/// Restrict a score on measure big_l to a mass-carrying subregion of measure l.
inline double continuous_inverse(double s_big_l, double big_l, double l) {
  require(l > 0.0 && l < big_l, ErrorKind::RangeError, "need 0 < l < L");
  detail::require_score(s_big_l);
  return detail::checked_result(1.0 + (big_l / l) * (s_big_l - 1.0));
}

}  // namespace sharpkit
