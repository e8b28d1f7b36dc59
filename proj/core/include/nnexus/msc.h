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

#ifndef NNEXUS_MSC_H_
#define NNEXUS_MSC_H_

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace nnexus {

// A Mathematics Subject Classification (MSC2010) code such as "81P40" or
// "05Cxx": two digits, an uppercase letter, then two characters that are
// each a digit or a lowercase 'x'.
class MscCode {
 public:
  // Throws Error(kInvalidMsc) for malformed codes.
  static MscCode Parse(std::string_view text);
  static std::optional<MscCode> TryParse(std::string_view text);
  static bool IsValid(std::string_view text);

  const std::string &str() const { return code_; }

  // Top-level area ("81"), and the area plus subject letter ("81P").
  std::string_view area() const { return std::string_view(code_).substr(0, 2); }
  std::string_view section() const {
    return std::string_view(code_).substr(0, 3);
  }

  friend bool operator==(const MscCode &, const MscCode &) = default;
  friend auto operator<=>(const MscCode &, const MscCode &) = default;

 private:
  explicit MscCode(std::string code) : code_(std::move(code)) {}

  std::string code_;
};

// Hierarchical prefix distance: 0 for identical codes, 1 when the first three
// characters agree, 2 when only the two-digit area agrees, 3 otherwise. This
// is an ultrametric, so symmetry and the triangle inequality hold.
int MscDistance(const MscCode &a, const MscCode &b);

inline constexpr int kMaxMscDistance = 3;

}  // namespace nnexus

#endif  // NNEXUS_MSC_H_
