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

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "sharpkit/sharpkit.hpp"

using namespace sharpkit;

TEST(EntropyDiscrete, Examples) {
  EXPECT_NEAR(entropy_discrete(validate_distribution({0.25, 0.25, 0.25, 0.25})), 2.0, 1e-12);
  EXPECT_NEAR(entropy_discrete(validate_distribution({0, 0, 0.3, 0.7})), 0.881, 0.001);
  EXPECT_EQ(entropy_discrete(validate_distribution({0, 1, 0})), 0.0);
  EXPECT_NEAR(entropy_discrete(validate_distribution({0.5, 0.5}), LogBase::Nats), std::log(2.0), 1e-15);
}

TEST(KlDiscrete, Examples) {
  EXPECT_NEAR(kl_from_uniform_discrete(validate_distribution({0.25, 0.25, 0.25, 0.25})), 0.0, 1e-12);
  EXPECT_NEAR(kl_from_uniform_discrete(validate_distribution({0, 0, 0.01, 0.99})), 1.919, 0.001);
  EXPECT_NEAR(kl_from_uniform_discrete(validate_distribution({0, 1.0 / 3, 1.0 / 3, 1.0 / 3})), 0.415, 0.001);
}

TEST(VarianceDiscrete, Examples) {
  EXPECT_NEAR(variance_discrete(validate_distribution({0.25, 0.25, 0.25, 0.25})), 1.25, 1e-12);
  EXPECT_NEAR(variance_discrete(validate_distribution({0.24, 0.24, 0.28, 0.24})), 1.2096, 1e-12);
  EXPECT_NEAR(variance_discrete(validate_distribution({0, 0, 1, 0})), 0.0, 1e-15);
}

TEST(VarianceDiscrete, Labels) {
  const auto p = validate_distribution({0.5, 0.5});
  const std::vector<double> x{-1.0, 3.0};
  EXPECT_NEAR(variance_discrete(p, std::span<const double>(x)), 4.0, 1e-12);
  const std::vector<double> short_labels{1.0};
  try {
    variance_discrete(p, std::span<const double>(short_labels));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::LengthMismatch);
  }
}

TEST(Discrete, MatchesOraclesAndIdentity) {
  oracle::Gen g(71);
  for (int rep = 0; rep < 500; ++rep) {
    const std::size_t n = g.index(2, 50);
    const auto raw = g.simplex(n);
    const auto p = validate_distribution(raw);
    std::vector<double> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<double>(i);
    ASSERT_NEAR(entropy_discrete(p), oracle::entropy(raw, 2.0), 1e-12);
    ASSERT_NEAR(variance_discrete(p), oracle::variance(raw, labels), 1e-10);
    for (auto base : {LogBase::Bits, LogBase::Nats}) {
      const double logn = base == LogBase::Bits ? std::log2(double(n)) : std::log(double(n));
      ASSERT_NEAR(kl_from_uniform_discrete(p, base), logn - entropy_discrete(p, base), 1e-12);
    }
  }
}

TEST(EntropyContinuous, Examples) {
  const auto dom = BoundedDomain::interval(0, 4);
  EXPECT_NEAR(entropy_continuous(uniform_density(dom, 100)), std::log(4.0), 1e-12);
  EXPECT_NEAR(entropy_continuous(gaussian_density(dom, 100000, 2.8, 1.0)), 1.149, 0.005);
  EXPECT_NEAR(entropy_continuous(gaussian_density(dom, 100000, 2.8, 0.1)), -0.884, 0.005);
}

TEST(KlContinuous, Examples) {
  const auto dom = BoundedDomain::interval(0, 4);
  EXPECT_NEAR(kl_from_uniform_continuous(uniform_density(dom, 100)), 0.0, 1e-12);
  EXPECT_NEAR(kl_from_uniform_continuous(piecewise_density(dom, 400, {{0, 0}, {2, 0.5}})), 0.693, 0.001);
  EXPECT_NEAR(kl_from_uniform_continuous(gaussian_density(dom, 200000, 2.8, 0.01)), 4.573, 0.01);
}

TEST(Continuous, IdentityAndRearrangementInvariance) {
  oracle::Gen g(72);
  for (int rep = 0; rep < 200; ++rep) {
    const double omega = g.uniform(0.5, 9);
    const auto d = GriddedDensity::from_values(BoundedDomain::interval(0, omega), g.density(g.index(1, 400), omega));
    ASSERT_NEAR(kl_from_uniform_continuous(d), std::log(omega) - entropy_continuous(d), 1e-12);
    ASSERT_NEAR(entropy_continuous(as_density(rearrange(d))), entropy_continuous(d), 1e-12);
    ASSERT_NEAR(entropy_continuous(d, LogBase::Bits), entropy_continuous(d) / std::log(2.0), 1e-12);
  }
}
