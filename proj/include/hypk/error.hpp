/*
 * Copyright 2026 The hypk Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hypk {

/// Structured failure reasons. Every module reports errors through
/// `hypk::Error` carrying one of these codes; the C API maps them 1:1 onto
/// `hypk_status`.
enum class ErrorCode {
  UnknownName = 1,
  MalformedNotation,
  AsymmetricMatrix,
  UnclassifiableRank3,
  ToleranceAmbiguity,
  NonPrimeP,
  UnknownType,
  LoopDetected,
  UnsupportedStabilizer,
  MissingInducedMap,
  NonCollapsingPage,
  UnknownTag,
  Io,
  InvalidArgument,
  Internal,
};

/// Stable identifier, e.g. "UnknownName".
std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace hypk
