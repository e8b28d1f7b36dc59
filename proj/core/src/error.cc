// Copyright 2026 The NNexus Authors.
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

#include "nnexus/error.h"

namespace nnexus {

const char *ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyLabel: return "EmptyLabel";
    case ErrorCode::kEmptyPhrase: return "EmptyPhrase";
    case ErrorCode::kDuplicateConcept: return "DuplicateConcept";
    case ErrorCode::kInvalidUrl: return "InvalidUrl";
    case ErrorCode::kInvalidMsc: return "InvalidMsc";
    case ErrorCode::kUnknownId: return "UnknownId";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kDuplicateSource: return "DuplicateSource";
    case ErrorCode::kUnknownSource: return "UnknownSource";
    case ErrorCode::kSpanMismatch: return "SpanMismatch";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

}  // namespace nnexus
