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

#include <stdexcept>
#include <string>
#include <string_view>

namespace sharpkit {

enum class ErrorKind {
  NegativeMass,
  NotNormalized,
  ZeroTotal,
  RangeError,
  DegenerateBaseline,
  OutOfRangeResult,
  NonUniformGrid,
  OutOfDomain,
  LevelNotPresent,
  AllZero,
  LengthMismatch,
  SampleOutOfDomain,
  EmptySample,
  ShapeMismatch,
  EmptyLevelSet,
  ParseError,
  InternalError,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NegativeMass: return "NegativeMass";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::ZeroTotal: return "ZeroTotal";
    case ErrorKind::RangeError: return "RangeError";
    case ErrorKind::DegenerateBaseline: return "DegenerateBaseline";
    case ErrorKind::OutOfRangeResult: return "OutOfRangeResult";
    case ErrorKind::NonUniformGrid: return "NonUniformGrid";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::LevelNotPresent: return "LevelNotPresent";
    case ErrorKind::AllZero: return "AllZero";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::SampleOutOfDomain: return "SampleOutOfDomain";
    case ErrorKind::EmptySample: return "EmptySample";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::EmptyLevelSet: return "EmptyLevelSet";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InternalError: return "InternalError";
  }
  return "Unknown";
}

/// Single exception type for the library; `kind()` carries the taxonomy.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), message_(what) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// The message without the kind prefix.
  const std::string& message() const noexcept { return message_; }

  /// Input errors are the caller's fault; InternalError means a broken invariant.
  bool is_internal() const noexcept { return kind_ == ErrorKind::InternalError; }

 private:
  ErrorKind kind_;
  std::string message_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace sharpkit
