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

#include <algorithm>
#include <cstdlib>
#include <vector>

#include "oracles.hpp"
#include "sharpkit/sharpkit.hpp"

using namespace sharpkit;

namespace {

const BoundedDomain kRain = BoundedDomain::interval(0, 10);

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

TEST(Histogram, AllEqualSamplesFillOneBin) {
  const std::vector<double> x(30, 2.3);
  const auto d = density_from_samples(x, kRain, 50);
  EXPECT_EQ(std::count_if(d.values().begin(), d.values().end(), [](double v) { return v > 0; }), 1);
  EXPECT_NEAR(sharpness(d), sharpness_uniform_subset(10.0 / 50.0, 10.0), 1e-12);
  EXPECT_NEAR(sharpness(d), 1.0 - 1.0 / 50.0, 1e-12);
}

TEST(Histogram, IntegratesToOne) {
  oracle::Gen g(81);
  std::vector<double> x(1000);
  for (auto& v : x) v = g.uniform(0, 10);
  const auto d = density_from_samples(x, kRain, 37);
  double m = 0.0;
  for (double v : d.values()) m += v * d.cell_measure();
  EXPECT_NEAR(m, 1.0, 1e-12);
}

TEST(Histogram, ManyUniformSamplesAreNotSharp) {
  Rng rng(5);
  std::vector<double> x(1'000'000);
  for (auto& v : x) v = rng.uniform(0, 10);
  EXPECT_LE(sharpness(density_from_samples(x, kRain, 50)), 0.05);
}

TEST(Histogram, EdgesAndErrors) {
  const std::vector<double> edge{0.0, 10.0};
  const auto d = density_from_samples(edge, kRain, 10);
  EXPECT_GT(d[0], 0.0);
  EXPECT_GT(d[9], 0.0);  // upper bound falls in the last bin
  const std::vector<double> out{1.0, 10.5};
  EXPECT_EQ(kind_of([&] { density_from_samples(out, kRain, 10); }), ErrorKind::SampleOutOfDomain);
  const std::vector<double> neg{-0.01};
  EXPECT_EQ(kind_of([&] { density_from_samples(neg, kRain, 10); }), ErrorKind::SampleOutOfDomain);
  EXPECT_EQ(kind_of([&] { density_from_samples(std::vector<double>{}, kRain, 10); }), ErrorKind::EmptySample);
  EXPECT_EQ(kind_of([&] { density_from_samples(edge, kRain, 0); }), ErrorKind::RangeError);
}

TEST(Quantile, MatchesType7Oracle) {
  oracle::Gen g(82);
  for (int rep = 0; rep < 200; ++rep) {
    std::vector<double> x(g.index(1, 60));
    for (auto& v : x) v = g.uniform(0, 10);
    auto s = x;
    std::sort(s.begin(), s.end());
    for (double q : {0.0, 0.05, 0.5, 0.95, 1.0, g.uniform()}) ASSERT_NEAR(empirical_quantile(s, q), oracle::quantile7(x, q), 1e-12);
  }
}

TEST(Grid, IdenticalCellsGiveIdenticalReports) {
  const std::vector<double> m{1.0, 1.5, 2.0, 2.2, 3.1};
  EnsembleGrid grid(3, 4, std::vector<std::vector<double>>(12, m), kRain);
  const auto map = grid_sharpness_map(grid);
  for (const auto& c : map.cells) {
    EXPECT_EQ(c.sharpness, map.cells[0].sharpness);
    EXPECT_EQ(c.interval, map.cells[0].interval);
    EXPECT_EQ(c.member_count, 5u);
  }
  EXPECT_EQ(map.at(2, 3).row, 2u);
  EXPECT_EQ(map.at(2, 3).col, 3u);
}

TEST(Grid, OneMemberPerBinIsWide) {
  std::vector<double> m;
  for (int k = 0; k < 50; ++k) m.push_back(0.1 + 0.2 * k);
  const auto r = report_cell(m, kRain, 50);
  EXPECT_NEAR(r.sharpness, 0.0, 1e-12);
  EXPECT_NEAR(r.interval.lo, oracle::quantile7(m, 0.05), 1e-12);
  EXPECT_NEAR(r.interval.hi, oracle::quantile7(m, 0.95), 1e-12);
  EXPECT_GT(r.interval.hi - r.interval.lo, 8.0);
}

TEST(Grid, IntervalInsideDomain) {
  const auto sim = simulate_rainfall({}, 3);
  for (const auto& c : grid_sharpness_map(sim.grid).cells) {
    EXPECT_LE(c.interval.lo, c.interval.hi);
    EXPECT_GE(c.interval.lo, 0.0);
    EXPECT_LE(c.interval.hi, 10.0);
  }
}

TEST(Grid, ValidatesMembers) {
  EXPECT_EQ(kind_of([] { EnsembleGrid(1, 2, {{1.0, 2.0}, {3.0}}, kRain); }), ErrorKind::EmptySample);
  EXPECT_EQ(kind_of([] { EnsembleGrid(1, 2, {{1.0, 2.0}, {3.0, 11.0}}, kRain); }), ErrorKind::SampleOutOfDomain);
  EXPECT_EQ(kind_of([] { EnsembleGrid(2, 2, {{1.0, 2.0}}, kRain); }), ErrorKind::ShapeMismatch);
}

TEST(Grid, ErrorsCarryCellCoordinates) {
  EnsembleGrid grid(2, 2, std::vector<std::vector<double>>(4, {1.0, 2.0}), kRain);
  try {
    grid_sharpness_map(grid, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RangeError);
    EXPECT_NE(std::string(e.what()).find("cell (0,0)"), std::string::npos) << e.what();
  }
}

TEST(Grid, SeededSimulationIsDeterministicAcrossThreadCounts) {
  const auto a = grid_sharpness_map(simulate_rainfall({}, 7).grid);
  setenv("SHARPKIT_THREADS", "1", 1);
  const auto b = grid_sharpness_map(simulate_rainfall({}, 7).grid);
  unsetenv("SHARPKIT_THREADS");
  ASSERT_EQ(a.cells.size(), 36u);
  EXPECT_EQ(a.cells, b.cells);
  const auto c = grid_sharpness_map(simulate_rainfall({}, 8).grid);
  EXPECT_NE(a.cells, c.cells);
}

TEST(Grid, TightCellsScoreHigherThanWideCells) {
  // tightest cells beat the widest on average over a seeded run
  const auto sim = simulate_rainfall({}, 7);
  const auto map = grid_sharpness_map(sim.grid);
  double tight = 0, wide = 0;
  int nt = 0, nw = 0;
  for (std::size_t i = 0; i < 36; ++i) {
    if (sim.cell_sigma[i] < 0.3) tight += map.cells[i].sharpness, ++nt;
    if (sim.cell_sigma[i] > 0.8) wide += map.cells[i].sharpness, ++nw;
  }
  ASSERT_GT(nt, 0);
  ASSERT_GT(nw, 0);
  EXPECT_GT(tight / nt, wide / nw);
}

TEST(Grid, ScoreAtLeastUniformizedSupport) {
  const auto sim = simulate_rainfall({}, 11);
  for (std::size_t r = 0; r < 6; ++r) {
    for (std::size_t c = 0; c < 6; ++c) {
      const auto d = density_from_samples(sim.grid.cell(r, c), kRain, 50);
      const auto occupied = std::count_if(d.values().begin(), d.values().end(), [](double v) { return v > 0; });
      EXPECT_GE(sharpness(d) + 1e-12, sharpness_uniform_subset(0.2 * double(occupied), 10.0));
    }
  }
}

TEST(Series, Examples) {
  const auto map = grid_sharpness_map(simulate_rainfall({}, 1).grid);
  const std::vector<SharpnessMap> same{map, map, map};
  const auto s = sharpness_timeseries(same);
  for (std::size_t i = 0; i < 36; ++i) {
    ASSERT_EQ(s.values[i].size(), 3u);
    for (double dlt : s.differences[i]) EXPECT_EQ(dlt, 0.0);
  }
  const std::vector<SharpnessMap> one{map};
  EXPECT_TRUE(sharpness_timeseries(one).diff_at(0, 0).empty());

  SharpnessMap other = map;
  other.rows = 3;
  other.cols = 12;
  const std::vector<SharpnessMap> mixed{map, other};
  EXPECT_EQ(kind_of([&] { sharpness_timeseries(mixed); }), ErrorKind::ShapeMismatch);
}

TEST(Series, HalvingSpreadRaisesScore) {
  Rng rng(19);
  std::vector<double> wide, tight;
  for (int k = 0; k < 30; ++k) {
    const double z = rng.normal();
    wide.push_back(std::clamp(3.0 + 0.8 * z, 0.0, 10.0));
    tight.push_back(std::clamp(3.0 + 0.4 * z, 0.0, 10.0));
  }
  EnsembleGrid g1(1, 1, {wide}, kRain), g2(1, 1, {tight}, kRain);
  const std::vector<SharpnessMap> issues{grid_sharpness_map(g1), grid_sharpness_map(g2)};
  EXPECT_GT(sharpness_timeseries(issues).diff_at(0, 0)[0], 0.0);
}
