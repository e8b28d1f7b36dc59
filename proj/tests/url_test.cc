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

#include "nnexus/url.h"

#include <gtest/gtest.h>

namespace nnexus {
namespace {

TEST(UrlTest, AbsoluteUrls) {
  EXPECT_TRUE(IsAbsoluteUrl("https://planetmath.org/group"));
  EXPECT_TRUE(IsAbsoluteUrl("http://a/b"));
  EXPECT_TRUE(IsAbsoluteUrl("file:///tmp/x.html"));
  EXPECT_FALSE(IsAbsoluteUrl(""));
  EXPECT_FALSE(IsAbsoluteUrl("/relative/path"));
  EXPECT_FALSE(IsAbsoluteUrl("planetmath.org/group"));
  EXPECT_FALSE(IsAbsoluteUrl("https://"));
  EXPECT_FALSE(IsAbsoluteUrl("https://a b/c"));
  EXPECT_FALSE(IsAbsoluteUrl("1http://a/b"));
}

// Normal and abnormal examples from RFC 3986, section 5.4.
TEST(UrlTest, ResolvesReferenceExamples) {
  const char *base = "http://a/b/c/d;p?q";
  struct Case {
    const char *ref;
    const char *want;
  } cases[] = {
      {"g:h", "g:h"},
      {"g", "http://a/b/c/g"},
      {"./g", "http://a/b/c/g"},
      {"g/", "http://a/b/c/g/"},
      {"/g", "http://a/g"},
      {"//g", "http://g"},
      {"?y", "http://a/b/c/d;p?y"},
      {"g?y", "http://a/b/c/g?y"},
      {"#s", "http://a/b/c/d;p?q#s"},
      {"g#s", "http://a/b/c/g#s"},
      {";x", "http://a/b/c/;x"},
      {"", "http://a/b/c/d;p?q"},
      {".", "http://a/b/c/"},
      {"..", "http://a/b/"},
      {"../g", "http://a/b/g"},
      {"../..", "http://a/"},
      {"../../g", "http://a/g"},
      {"../../../g", "http://a/g"},
      {"/./g", "http://a/g"},
      {"/../g", "http://a/g"},
      {"g.", "http://a/b/c/g."},
      {"..g", "http://a/b/c/..g"},
      {"./../g", "http://a/b/g"},
      {"g/./h", "http://a/b/c/g/h"},
      {"g/../h", "http://a/b/c/h"},
  };
  for (const Case &c : cases) {
    EXPECT_EQ(ResolveUrl(base, c.ref), c.want) << c.ref;
  }
}

TEST(UrlTest, ResolvesAgainstIndexPages) {
  EXPECT_EQ(ResolveUrl("https://dlmf.nist.gov/idx/G", "/8.2#i"),
            "https://dlmf.nist.gov/8.2#i");
  EXPECT_EQ(ResolveUrl("https://dlmf.nist.gov/idx/G", "../8.2#ii"),
            "https://dlmf.nist.gov/8.2#ii");
  EXPECT_EQ(ResolveUrl("https://dlmf.nist.gov", "8.2"),
            "https://dlmf.nist.gov/8.2");
}

}  // namespace
}  // namespace nnexus
