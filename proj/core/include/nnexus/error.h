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

#ifndef NNEXUS_ERROR_H_
#define NNEXUS_ERROR_H_

#include <stdexcept>
#include <string>

namespace nnexus {

enum class ErrorCode {
  kEmptyLabel,
  kEmptyPhrase,
  kDuplicateConcept,
  kInvalidUrl,
  kInvalidMsc,
  kUnknownId,
  kIoError,
  kParseError,
  kDuplicateSource,
  kUnknownSource,
  kSpanMismatch,
  kInvalidArgument,
};

const char *ErrorCodeName(ErrorCode code);

// All library failures are reported as nnexus::Error carrying a code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace nnexus

#endif  // NNEXUS_ERROR_H_
