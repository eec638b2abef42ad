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

// JSON records for the command-line reports. Keys are part of the versioned
// output schema consumed by downstream plotting scripts.

#include <json.hpp>

#include "sharpkit/sharpkit.hpp"

namespace sharpkit::cli {

using json = nlohmann::ordered_json;

inline json to_json(const Interval& i) { return json::array({i.lo, i.hi}); }

inline json to_json(const BoundedDomain& d) {
  json axes = json::array();
  for (const auto& b : d.bounds()) axes.push_back(json::array({b.lo, b.hi}));
  return axes;
}

inline json to_json(const MappedPoint& p) {
  json j;
  j["y"] = p.source.size() == 1 ? json(p.source[0]) : json(p.source);
  if (p.source_cell) j["cell"] = *p.source_cell;
  j["density"] = p.density;
  j["t_index"] = p.t_index;
  j["t"] = p.t;
  j["plateau"] = p.plateau ? to_json(*p.plateau) : json(nullptr);
  return j;
}

inline json to_json(const KeyPoints& k) {
  json j;
  j["mode"] = to_json(k.mode);
  j["median"] = k.median ? to_json(*k.median) : json(nullptr);
  j["mean"] = to_json(k.mean);
  return j;
}

inline json to_json(const CumulativeStep& s) {
  return {{"j", s.j}, {"p", s.p}, {"mass", s.mass}, {"length", s.length}, {"shortfall", s.shortfall}};
}

inline json to_json(const CellReport& c) {
  return {{"row", c.row}, {"col", c.col}, {"sharpness", c.sharpness}, {"interval", to_json(c.interval)},
          {"n", c.member_count}};
}

inline json to_json(const ScoredDistribution& s) {
  return {{"index", s.index},           {"probs", s.probs},
          {"score", s.score},           {"sharpness", s.sharpness},
          {"entropy_bits", s.entropy_bits}, {"entropy_nats", s.entropy_nats},
          {"variance", s.variance}};
}

inline json to_json(const LevelSetQuery& q) {
  return {{"n", q.n},
          {"constrain", to_string(q.constrain)},
          {"target", q.target},
          {"tol", q.tol},
          {"score", to_string(q.score)},
          {"samples", q.sample_count},
          {"seed", q.seed},
          {"entropy_unit", q.entropy_unit == LogBase::Bits ? "bits" : "nats"}};
}

}  // namespace sharpkit::cli
