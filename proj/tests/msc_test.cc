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

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "nnexus/error.h"
#include "nnexus/hash.h"

namespace nnexus {
namespace {

TEST(MscCodeTest, AcceptsWellFormedCodes) {
  for (const char *code : {"81P40", "05C99", "05Cxx", "20A05", "00A0x"}) {
    EXPECT_TRUE(MscCode::IsValid(code)) << code;
    EXPECT_EQ(MscCode::Parse(code).str(), code);
  }
}

TEST(MscCodeTest, RejectsMalformedCodes) {
  for (const char *code : {"", "81p40", "8P140", "81P4", "81P400", "81PX0",
                           "A1P40", "81P4y", " 81P40"}) {
    EXPECT_FALSE(MscCode::IsValid(code)) << code;
    EXPECT_FALSE(MscCode::TryParse(code).has_value()) << code;
    try {
      MscCode::Parse(code);
      ADD_FAILURE() << code;
    } catch (const Error &e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidMsc);
    }
  }
}

TEST(MscDistanceTest, Examples) {
  auto d = [](const char *a, const char *b) {
    return MscDistance(MscCode::Parse(a), MscCode::Parse(b));
  };
  EXPECT_EQ(d("81P40", "81P40"), 0);
  EXPECT_EQ(d("81P40", "81P68"), 1);
  EXPECT_EQ(d("81P40", "81Q05"), 2);
  EXPECT_EQ(d("81P40", "05C83"), 3);
}

// Exhaustive check of the metric axioms over a grid of codes.
TEST(MscDistanceTest, MetricAxiomsOnGrid) {
  std::vector<MscCode> grid;
  for (const char *area : {"05", "81", "80"}) {
    for (char letter : {'C', 'P'}) {
      for (const char *tail : {"10", "40", "xx", "4x"}) {
        grid.push_back(MscCode::Parse(std::string(area) + letter + tail));
      }
    }
  }
  for (const MscCode &a : grid) {
    for (const MscCode &b : grid) {
      int ab = MscDistance(a, b);
      EXPECT_GE(ab, 0);
      EXPECT_LE(ab, kMaxMscDistance);
      EXPECT_EQ(ab, MscDistance(b, a));
      EXPECT_EQ(ab == 0, a == b);
      for (const MscCode &c : grid) {
        EXPECT_LE(MscDistance(a, c), ab + MscDistance(b, c));
      }
    }
  }
}

TEST(HashTest, FingerprintMatchesReferenceValues) {
  // FNV-1a 64 reference vectors.
  EXPECT_EQ(Fingerprint(""), 0xcbf29ce484222325ull);
  EXPECT_EQ(Fingerprint("a"), 0xaf63dc4c8601ec8cull);
  EXPECT_EQ(Fingerprint("foobar"), 0x85944171f73967e8ull);
  EXPECT_EQ(FingerprintHex(0xabcull), "0000000000000abc");
}

}  // namespace
}  // namespace nnexus
