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

// Text inputs of the command line: number lists, domains, analytic density
// specs, and the CSV layouts. Every failure names the offending position.

#include <cctype>
#include <charconv>
#include <cstddef>
#include <fstream>
#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "sharpkit/core.hpp"
#include "sharpkit/presets.hpp"

namespace sharpkit::cli {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t k = s.find(sep, start);
    parts.push_back(s.substr(start, k == std::string_view::npos ? std::string_view::npos : k - start));
    if (k == std::string_view::npos) break;
    start = k + 1;
  }
  return parts;
}

inline double parse_double(std::string_view token, const std::string& where) {
  const std::string_view t = trim(token);
  double v = 0.0;
  const auto* first = t.data();
  const auto* last = t.data() + t.size();
  if (!t.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (t.empty() || ec != std::errc() || ptr != last) {
    fail(ErrorKind::ParseError, where + ": '" + std::string(t) + "' is not a number");
  }
  return v;
}

inline std::size_t parse_size(std::string_view token, const std::string& where) {
  const std::string_view t = trim(token);
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
    fail(ErrorKind::ParseError, where + ": '" + std::string(t) + "' is not a non-negative integer");
  }
  return v;
}

/// "0.1,0.2,0.7" -> {0.1, 0.2, 0.7}
inline std::vector<double> parse_list(std::string_view s, const std::string& what) {
  std::vector<double> out;
  const auto parts = split(s, ',');
  for (std::size_t i = 0; i < parts.size(); ++i) {
    out.push_back(parse_double(parts[i], what + " entry " + std::to_string(i)));
  }
  return out;
}

inline std::vector<std::size_t> parse_size_list(std::string_view s, const std::string& what) {
  std::vector<std::size_t> out;
  const auto parts = split(s, ',');
  for (std::size_t i = 0; i < parts.size(); ++i) {
    out.push_back(parse_size(parts[i], what + " entry " + std::to_string(i)));
  }
  return out;
}

/// "lo:hi" -> (lo, hi)
inline std::pair<double, double> parse_range(std::string_view s, const std::string& what) {
  const auto parts = split(s, ':');
  if (parts.size() != 2) fail(ErrorKind::ParseError, what + ": expected lo:hi, got '" + std::string(s) + "'");
  return {parse_double(parts[0], what + " lower bound"), parse_double(parts[1], what + " upper bound")};
}

/// "0:4" or "0:1,0:1,0:1"
inline BoundedDomain parse_domain(std::string_view s) {
  std::vector<AxisBounds> axes;
  const auto parts = split(s, ',');
  for (std::size_t a = 0; a < parts.size(); ++a) {
    const auto [lo, hi] = parse_range(parts[a], "--domain axis " + std::to_string(a));
    axes.push_back({lo, hi});
  }
  return BoundedDomain(std::move(axes));
}

namespace detail {

inline std::map<std::string, double> parse_params(std::string_view body, std::size_t offset) {
  std::map<std::string, double> params;
  std::size_t pos = offset;
  for (auto item : split(body, ',')) {
    const std::size_t eq = item.find('=');
    const std::string where = "--preset at offset " + std::to_string(pos);
    if (eq == std::string_view::npos) fail(ErrorKind::ParseError, where + ": expected key=value");
    const std::string key(trim(item.substr(0, eq)));
    params[key] = parse_double(item.substr(eq + 1), where);
    pos += item.size() + 1;
  }
  return params;
}

inline double take(std::map<std::string, double>& params, const std::string& key, const std::string& kind) {
  const auto it = params.find(key);
  if (it == params.end()) fail(ErrorKind::ParseError, "--preset " + kind + ": missing parameter '" + key + "'");
  const double v = it->second;
  params.erase(it);
  return v;
}

inline void require_consumed(const std::map<std::string, double>& params, const std::string& kind) {
  if (!params.empty()) {
    fail(ErrorKind::ParseError, "--preset " + kind + ": unknown parameter '" + params.begin()->first + "'");
  }
}

}  // namespace detail

/// Analytic presets:
///   uniform
///   gauss:mu=2.8,sigma=1
///   mixture:w1=0.5,mu1=1.2,sigma1=0.3,w2=0.5,mu2=3,sigma2=0.4
///   piecewise:0:0,2:0.15,3:0.85      (start:value pairs)
inline GriddedDensity parse_preset(std::string_view text, const BoundedDomain& domain, std::size_t cells) {
  const std::size_t colon = text.find(':');
  const std::string kind(text.substr(0, colon));
  const std::string_view body = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  const std::size_t offset = colon == std::string_view::npos ? text.size() : colon + 1;

  if (domain.dim() != 1) fail(ErrorKind::ParseError, "--preset requires a one-dimensional --domain");

  if (kind == "uniform") {
    if (!body.empty()) fail(ErrorKind::ParseError, "--preset uniform takes no parameters");
    return uniform_density(domain, cells);
  }
  if (kind == "gauss" || kind == "gaussian") {
    auto p = detail::parse_params(body, offset);
    const double mu = detail::take(p, "mu", kind);
    const double sigma = detail::take(p, "sigma", kind);
    detail::require_consumed(p, kind);
    return gaussian_density(domain, cells, mu, sigma);
  }
  if (kind == "mixture" || kind == "gauss-mixture") {
    auto p = detail::parse_params(body, offset);
    std::vector<GaussianComponent> comps;
    for (int k = 1; p.count("mu" + std::to_string(k)) != 0; ++k) {
      const std::string s = std::to_string(k);
      GaussianComponent c;
      c.weight = detail::take(p, "w" + s, kind);
      c.mu = detail::take(p, "mu" + s, kind);
      c.sigma = detail::take(p, "sigma" + s, kind);
      comps.push_back(c);
    }
    detail::require_consumed(p, kind);
    if (comps.empty()) fail(ErrorKind::ParseError, "--preset mixture: no components (expected w1,mu1,sigma1,...)");
    return mixture_density(domain, cells, comps);
  }
  if (kind == "piecewise") {
    std::vector<PiecewiseStep> steps;
    std::size_t pos = offset;
    for (auto item : split(body, ',')) {
      const std::string where = "--preset at offset " + std::to_string(pos);
      const auto kv = split(item, ':');
      if (kv.size() != 2) fail(ErrorKind::ParseError, where + ": expected start:value");
      steps.push_back({parse_double(kv[0], where), parse_double(kv[1], where)});
      pos += item.size() + 1;
    }
    return piecewise_density(domain, cells, steps);
  }
  fail(ErrorKind::ParseError, "--preset: unknown kind '" + kind + "' (uniform, gauss, mixture, piecewise)");
}

inline std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot open '" + path + "'");
  return in;
}

/// Numbers separated by commas and/or newlines. A non-numeric first line is a header.
inline std::vector<double> read_numbers(std::istream& in, const std::string& name) {
  std::vector<double> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    if (out.empty() && lineno == 1 && !(std::isdigit(static_cast<unsigned char>(t.front())) ||
                                        t.front() == '-' || t.front() == '+' || t.front() == '.')) {
      continue;
    }
    const auto parts = split(t, ',');
    for (std::size_t i = 0; i < parts.size(); ++i) {
      out.push_back(parse_double(parts[i], name + " line " + std::to_string(lineno) + " field " + std::to_string(i + 1)));
    }
  }
  return out;
}

struct EnsembleRecord {
  std::size_t row = 0;
  std::size_t col = 0;
  std::size_t member = 0;
  double value = 0.0;
};

/// Header `row,col,member,value`, one sample per line.
inline std::vector<EnsembleRecord> read_ensemble_csv(std::istream& in, const std::string& name) {
  std::vector<EnsembleRecord> out;
  std::string line;
  std::size_t lineno = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    const auto t = trim(line);
    if (t.empty()) continue;
    const auto parts = split(t, ',');
    const std::string where = name + " line " + std::to_string(lineno);
    if (!header_seen) {
      header_seen = true;
      if (parts.size() != 4 || trim(parts[0]) != "row" || trim(parts[1]) != "col" || trim(parts[2]) != "member" ||
          trim(parts[3]) != "value") {
        fail(ErrorKind::ParseError, where + ": expected header 'row,col,member,value'");
      }
      continue;
    }
    if (parts.size() != 4) fail(ErrorKind::ParseError, where + ": expected 4 fields");
    out.push_back({parse_size(parts[0], where + " field row"), parse_size(parts[1], where + " field col"),
                   parse_size(parts[2], where + " field member"), parse_double(parts[3], where + " field value")});
  }
  if (!header_seen) fail(ErrorKind::ParseError, name + ": empty file");
  return out;
}

}  // namespace sharpkit::cli
