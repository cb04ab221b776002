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
#include "hypk/error.hpp"

namespace hypk {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::MalformedNotation: return "MalformedNotation";
    case ErrorCode::AsymmetricMatrix: return "AsymmetricMatrix";
    case ErrorCode::UnclassifiableRank3: return "UnclassifiableRank3";
    case ErrorCode::ToleranceAmbiguity: return "ToleranceAmbiguity";
    case ErrorCode::NonPrimeP: return "NonPrimeP";
    case ErrorCode::UnknownType: return "UnknownType";
    case ErrorCode::LoopDetected: return "LoopDetected";
    case ErrorCode::UnsupportedStabilizer: return "UnsupportedStabilizer";
    case ErrorCode::MissingInducedMap: return "MissingInducedMap";
    case ErrorCode::NonCollapsingPage: return "NonCollapsingPage";
    case ErrorCode::UnknownTag: return "UnknownTag";
    case ErrorCode::Io: return "Io";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Internal: return "Internal";
  }
  return "Internal";
}

}  // namespace hypk
