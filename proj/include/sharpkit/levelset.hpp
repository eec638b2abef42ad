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

// Sampled level sets on the probability simplex: keep the draws whose
// constrained measure lies in a band around a target, then report where an
// overlaid measure is smallest and largest inside that band.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "sharpkit/companions.hpp"
#include "sharpkit/core.hpp"
#include "sharpkit/discrete.hpp"
#include "sharpkit/parallel.hpp"
#include "sharpkit/rng.hpp"

namespace sharpkit {

enum class Measure { Sharpness, Entropy, Variance };

constexpr std::string_view to_string(Measure m) noexcept {
  switch (m) {
    case Measure::Sharpness: return "sharpness";
    case Measure::Entropy: return "entropy";
    case Measure::Variance: return "variance";
  }
  return "unknown";
}

inline std::optional<Measure> parse_measure(std::string_view s) {
  if (s == "sharpness") return Measure::Sharpness;
  if (s == "entropy") return Measure::Entropy;
  if (s == "variance") return Measure::Variance;
  return std::nullopt;
}

/// Draws per independent random stream. Fixed so that a seed selects the same
/// samples regardless of how many workers run.
inline constexpr std::size_t simplex_shard_size = 1u << 16;

struct LevelSetQuery {
  std::size_t n = 4;
  Measure constrain = Measure::Variance;
  double target = 1.0;
  double tol = 0.01;
  Measure score = Measure::Sharpness;
  std::size_t sample_count = 1'000'000;
  std::uint64_t seed = 0;
  LogBase entropy_unit = LogBase::Nats;
};

namespace detail {

inline void fill_simplex_draw(Rng& rng, std::vector<double>& out) {
  double total = 0.0;
  for (double& x : out) {
    x = rng.exponential();
    total += x;
  }
  for (double& x : out) x /= total;
}

template <class Fn>
void for_each_simplex_draw(std::size_t n, std::size_t first, std::size_t last, std::uint64_t seed, Fn&& fn) {
  std::vector<double> p(n);
  std::size_t j = first;
  while (j < last) {
    const std::size_t shard = j / simplex_shard_size;
    Rng rng(derive_seed(seed, shard));
    // skip to j within the shard
    for (std::size_t k = shard * simplex_shard_size; k < j; ++k) fill_simplex_draw(rng, p);
    const std::size_t shard_end = std::min(last, (shard + 1) * simplex_shard_size);
    for (; j < shard_end; ++j) {
      fill_simplex_draw(rng, p);
      fn(j, p);
    }
  }
}

}  // namespace detail

/// Uniform draws on the (n-1)-simplex by normalizing i.i.d. exponentials.
inline std::vector<DiscreteDistribution> sample_simplex(std::size_t n, std::size_t count, std::uint64_t seed) {
  require(n >= 2, ErrorKind::RangeError, "n must be at least 2");
  require(count >= 1, ErrorKind::RangeError, "count must be at least 1");
  std::vector<DiscreteDistribution> out;
  out.reserve(count);
  detail::for_each_simplex_draw(n, 0, count, seed,
                                [&](std::size_t, const std::vector<double>& p) { out.push_back(validate_distribution(p)); });
  return out;
}

inline double evaluate(Measure m, const DiscreteDistribution& p, LogBase entropy_unit = LogBase::Nats) {
  switch (m) {
    case Measure::Sharpness: return sharpness_discrete(p);
    case Measure::Entropy: return entropy_discrete(p, entropy_unit);
    case Measure::Variance: return variance_discrete(p);
  }
  fail(ErrorKind::InternalError, "unknown measure");
}

/// Attainable [min, max] of a measure over distributions on n outcomes with labels 0..n-1.
inline Interval attainable_range(Measure m, std::size_t n, LogBase entropy_unit = LogBase::Nats) {
  const double nn = static_cast<double>(n);
  switch (m) {
    case Measure::Sharpness: return {0.0, 1.0};
    case Measure::Entropy: return {0.0, entropy_unit == LogBase::Bits ? std::log2(nn) : std::log(nn)};
    case Measure::Variance: return {0.0, (nn - 1.0) * (nn - 1.0) / 4.0};
  }
  fail(ErrorKind::InternalError, "unknown measure");
}

inline void validate(const LevelSetQuery& q) {
  require(q.n >= 2, ErrorKind::RangeError, "n must be at least 2");
  require(q.tol > 0.0, ErrorKind::RangeError, "tolerance must be positive");
  require(q.sample_count >= 1, ErrorKind::RangeError, "sample count must be at least 1");
  const Interval r = attainable_range(q.constrain, q.n, q.entropy_unit);
  require(q.target >= r.lo && q.target <= r.hi, ErrorKind::RangeError,
          std::string(to_string(q.constrain)) + " target outside its attainable range [" + detail::num(r.lo) +
              ", " + detail::num(r.hi) + "]");
}

struct ScoredDistribution {
  std::size_t index = 0;  // position in the seeded sample sequence
  std::vector<double> probs;
  double score = 0.0;     // the overlaid measure
  double sharpness = 0.0;
  double entropy_bits = 0.0;
  double entropy_nats = 0.0;
  double variance = 0.0;
};

struct LevelSetResult {
  LevelSetQuery query;
  ScoredDistribution min;
  ScoredDistribution max;
  std::size_t kept_count = 0;
  std::vector<ScoredDistribution> kept;  // first `keep_cap` kept samples, in sample order
};

inline ScoredDistribution score_distribution(std::size_t index, const DiscreteDistribution& p, double score) {
  ScoredDistribution s;
  s.index = index;
  s.probs.assign(p.probs().begin(), p.probs().end());
  s.score = score;
  s.sharpness = sharpness_discrete(p);
  s.entropy_bits = entropy_discrete(p, LogBase::Bits);
  s.entropy_nats = entropy_discrete(p, LogBase::Nats);
  s.variance = variance_discrete(p);
  return s;
}

/// Filters seeded simplex draws by the constraint band and reports the overlay
/// extrema. Ties go to the earliest draw.
inline LevelSetResult level_set_extrema(const LevelSetQuery& q, std::size_t keep_cap = 0) {
  validate(q);

  struct Partial {
    std::size_t kept = 0;
    std::optional<ScoredDistribution> min, max;
    std::vector<ScoredDistribution> sample;
  };

  const std::size_t shards = (q.sample_count + simplex_shard_size - 1) / simplex_shard_size;
  std::vector<Partial> parts(shards);
  parallel_for(shards, [&](std::size_t s) {
    Partial& part = parts[s];
    const std::size_t first = s * simplex_shard_size;
    const std::size_t last = std::min(q.sample_count, first + simplex_shard_size);
    detail::for_each_simplex_draw(q.n, first, last, q.seed, [&](std::size_t j, const std::vector<double>& raw) {
      const auto p = validate_distribution(raw);
      if (std::abs(evaluate(q.constrain, p, q.entropy_unit) - q.target) > q.tol) return;
      const double score = evaluate(q.score, p, q.entropy_unit);
      ++part.kept;
      const bool new_min = !part.min || score < part.min->score;
      const bool new_max = !part.max || score > part.max->score;
      if (new_min || new_max || part.sample.size() < keep_cap) {
        const auto scored = score_distribution(j, p, score);
        if (new_min) part.min = scored;
        if (new_max) part.max = scored;
        if (part.sample.size() < keep_cap) part.sample.push_back(scored);
      }
    });
  });

  LevelSetResult out;
  out.query = q;
  std::optional<ScoredDistribution> lo, hi;
  for (auto& part : parts) {
    out.kept_count += part.kept;
    if (part.min && (!lo || part.min->score < lo->score)) lo = part.min;
    if (part.max && (!hi || part.max->score > hi->score)) hi = part.max;
    for (auto& s : part.sample) {
      if (out.kept.size() < keep_cap) out.kept.push_back(std::move(s));
    }
  }
  require(out.kept_count > 0, ErrorKind::EmptyLevelSet,
          "no sample has " + std::string(to_string(q.constrain)) + " within " + detail::num(q.tol) + " of " +
              detail::num(q.target));
  out.min = std::move(*lo);
  out.max = std::move(*hi);
  return out;
}

}  // namespace sharpkit
