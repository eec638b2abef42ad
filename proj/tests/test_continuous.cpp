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

#include <vector>

#include "oracles.hpp"
#include "sharpkit/sharpkit.hpp"

using namespace sharpkit;

namespace {

const BoundedDomain kDom = BoundedDomain::interval(0, 4);

GriddedDensity step(std::vector<PiecewiseStep> steps, std::size_t cells = 4000) {
  return piecewise_density(kDom, cells, std::move(steps));
}

template <class Fn>
ErrorKind kind_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorKind::InternalError;
}

}  // namespace

TEST(Integral, Examples) {
  EXPECT_NEAR(sharpness_integral(mass_length(rearrange(uniform_density(kDom, 1000)))), 0.0, 1e-12);
  EXPECT_NEAR(sharpness_integral(mass_length(rearrange(step({{0, 0}, {2, 0.5}})))), 0.5, 1e-12);
  EXPECT_NEAR(sharpness_integral(mass_length(rearrange(gaussian_density(kDom, 20000, 2.8, 1.0)))), 0.354, 0.005);
}

TEST(Simplified, Examples) {
  EXPECT_NEAR(sharpness(gaussian_density(kDom, 20000, 2.8, 0.1)), 0.920, 0.005);
  const auto mix = mixture_density(kDom, 20000, {{0.5, 1.2, 0.3}, {0.5, 3.0, 0.4}});
  EXPECT_NEAR(sharpness(mix), 0.459, 0.005);
}

TEST(Simplified, BlockAtDomainEdgeApproachesOne) {
  double prev = 0.0;
  for (double delta : {0.4, 0.04, 0.004}) {
    const double s = sharpness(step({{0, 0}, {4 - delta, 1.0 / delta}}, 100000));
    EXPECT_GT(s, prev);
    EXPECT_NEAR(s, oracle::uniform_subset(delta, 4.0), 1e-9);
    prev = s;
  }
}

TEST(Simplified, AgreesWithIntegralAndPairwiseOracle) {
  oracle::Gen g(31);
  for (int rep = 0; rep < 300; ++rep) {
    const std::size_t n = g.index(1, 300);
    const double omega = g.uniform(0.2, 12.0);
    const auto v = g.density(n, omega);
    const auto d = GriddedDensity::from_values(BoundedDomain::interval(1.0, 1.0 + omega), v);
    const auto r = rearrange(d);
    const double s = sharpness_simplified(r);
    ASSERT_NEAR(s, sharpness_integral(mass_length(r)), 1e-12);
    ASSERT_NEAR(s, oracle::continuous_sharpness(v, omega), 1e-12);
    ASSERT_GE(s, 0.0);
    ASSERT_LE(s, 1.0);
  }
}

TEST(UniformSubset, ClosedForm) {
  EXPECT_EQ(sharpness_uniform_subset(2, 4), 0.5);
  EXPECT_EQ(sharpness_uniform_subset(4, 4), 0.0);
  EXPECT_EQ(sharpness_uniform_subset(1, 8), 0.875);
  EXPECT_EQ(kind_of([] { sharpness_uniform_subset(5, 4); }), ErrorKind::RangeError);
  EXPECT_EQ(kind_of([] { sharpness_uniform_subset(0, 4); }), ErrorKind::RangeError);
}

TEST(UniformSubset, GriddedUnionOfIntervals) {
  // support [1,2] plus [5,6] on [0,8]: l = 2
  std::vector<double> v(800, 0.0);
  for (std::size_t i = 100; i < 200; ++i) v[i] = 0.5;
  for (std::size_t i = 500; i < 600; ++i) v[i] = 0.5;
  const auto d = GriddedDensity::from_values(BoundedDomain::interval(0, 8), v);
  EXPECT_NEAR(sharpness(d), sharpness_uniform_subset(2, 8), 1e-12);
  // l = 1 on |Omega| = 8
  std::vector<double> w(800, 0.0);
  for (std::size_t i = 300; i < 400; ++i) w[i] = 1.0;
  EXPECT_NEAR(sharpness(GriddedDensity::from_values(BoundedDomain::interval(0, 8), w)), 0.875, 1e-12);
}

TEST(Refinement, DoublingCellsBarelyMovesGaussians) {
  for (double sigma : {1.0, 0.5, 0.1, 0.01}) {
    const double a = sharpness(gaussian_density(kDom, 100000, 2.8, sigma));
    const double b = sharpness(gaussian_density(kDom, 200000, 2.8, sigma));
    EXPECT_LT(std::abs(a - b), 1e-3) << sigma;
  }
}

TEST(Monotonicity, RightwardTransfersIncreaseScore) {
  oracle::Gen g(32);
  for (int rep = 0; rep < 200; ++rep) {
    const std::size_t n = g.index(3, 200);
    auto v = oracle::sorted(g.density(n, 2.0));
    const double before = sharpness(GriddedDensity::from_values(BoundedDomain::interval(0, 2), v));
    std::size_t i = g.index(0, n - 2);
    while (v[i] == 0.0 && i + 1 < n - 1) ++i;
    if (v[i] == 0.0) continue;
    const std::size_t j = g.index(i + 1, n - 1);
    const double moved = g.uniform(0.1, 1.0) * v[i];
    v[i] -= moved;
    v[j] += moved;
    const double after = sharpness(GriddedDensity::from_values(BoundedDomain::interval(0, 2), v));
    ASSERT_GT(after, before);
  }
}
