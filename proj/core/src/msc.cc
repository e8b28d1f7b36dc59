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

#include "nnexus/msc.h"

#include "nnexus/error.h"

namespace nnexus {

namespace {

bool IsDigit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

bool MscCode::IsValid(std::string_view text) {
  if (text.size() != 5) return false;
  if (!IsDigit(text[0]) || !IsDigit(text[1])) return false;
  if (text[2] < 'A' || text[2] > 'Z') return false;
  for (int i = 3; i < 5; ++i) {
    if (!IsDigit(text[i]) && text[i] != 'x') return false;
  }
  return true;
}

std::optional<MscCode> MscCode::TryParse(std::string_view text) {
  if (!IsValid(text)) return std::nullopt;
  return MscCode(std::string(text));
}

MscCode MscCode::Parse(std::string_view text) {
  if (!IsValid(text)) {
    throw Error(ErrorCode::kInvalidMsc,
                "malformed MSC code '" + std::string(text) + "'");
  }
  return MscCode(std::string(text));
}

int MscDistance(const MscCode &a, const MscCode &b) {
  if (a == b) return 0;
  if (a.section() == b.section()) return 1;
  if (a.area() == b.area()) return 2;
  return 3;
}

}  // namespace nnexus
