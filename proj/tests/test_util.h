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

// Helpers shared by the test binaries: fixture paths, scratch directories
// and brute-force reference implementations used as oracles.

#ifndef NNEXUS_TESTS_TEST_UTIL_H_
#define NNEXUS_TESTS_TEST_UTIL_H_

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <map>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace nnexus::testing {

inline std::string FixturePath(std::string_view name) {
  return std::string(NNEXUS_TEST_DATA_DIR) + "/" + std::string(name);
}

inline std::string ReadFileOrDie(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) std::abort();
  return std::string(std::istreambuf_iterator<char>(in), {});
}

inline void WriteFile(const std::string &path, std::string_view data) {
  std::ofstream out(path, std::ios::binary);
  out << data;
}

// A fresh directory under the system temp dir, removed on destruction.
class ScratchDir {
 public:
  ScratchDir() {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("nnexus_test_" + std::to_string(rd()) + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~ScratchDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  ScratchDir(const ScratchDir &) = delete;
  ScratchDir &operator=(const ScratchDir &) = delete;

  std::string File(std::string_view name) const {
    return (path_ / std::string(name)).string();
  }
  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

// A token of space-separated test text: its word and byte span.
struct Word {
  std::string text;
  size_t start;
  size_t end;
};

inline std::vector<Word> SplitOnSpaces(std::string_view text) {
  std::vector<Word> words;
  size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ') {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < text.size() && text[j] != ' ') ++j;
    words.push_back({std::string(text.substr(i, j - i)), i, j});
    i = j;
  }
  return words;
}

// Result of the reference scan: span, surface and matched phrase.
struct OracleMention {
  size_t start;
  size_t end;
  std::vector<std::string> phrase;
  bool operator==(const OracleMention &) const = default;
};

// Reference longest-match scan over space-separated lowercase text whose
// words need no stemming. Stopwords are skipped; at each remaining position
// every length is tried from the longest down against the lexicon, and the
// scan resumes after a match.
inline std::vector<OracleMention> BruteForceScan(
    std::string_view text, const std::set<std::vector<std::string>> &lexicon,
    const std::set<std::string> &stopwords) {
  std::vector<Word> stream;
  for (Word &w : SplitOnSpaces(text)) {
    if (!stopwords.count(w.text)) stream.push_back(std::move(w));
  }
  std::vector<OracleMention> out;
  size_t pos = 0;
  while (pos < stream.size()) {
    size_t best = 0;
    for (size_t len = stream.size() - pos; len >= 1; --len) {
      std::vector<std::string> slice;
      for (size_t k = pos; k < pos + len; ++k) slice.push_back(stream[k].text);
      if (lexicon.count(slice)) {
        best = len;
        out.push_back({stream[pos].start, stream[pos + len - 1].end, slice});
        break;
      }
    }
    pos += best == 0 ? 1 : best;
  }
  return out;
}

// Removes every inserted concept link: each `<a class="nnexus_concept" ...>`
// opening tag together with the first `</a>` that follows it.
inline std::string StripConceptLinks(std::string_view html) {
  static constexpr std::string_view kOpen = "<a class=\"nnexus_concept\"";
  std::string out;
  size_t i = 0;
  while (i < html.size()) {
    size_t open = html.find(kOpen, i);
    if (open == std::string_view::npos) break;
    size_t open_end = html.find('>', open);
    size_t close = html.find("</a>", open_end);
    if (open_end == std::string_view::npos || close == std::string_view::npos) {
      break;
    }
    out.append(html.substr(i, open - i));
    out.append(html.substr(open_end + 1, close - open_end - 1));
    i = close + 4;
  }
  out.append(html.substr(i));
  return out;
}

inline size_t CountOccurrences(std::string_view haystack, std::string_view needle) {
  size_t count = 0;
  for (size_t pos = haystack.find(needle); pos != std::string_view::npos;
       pos = haystack.find(needle, pos + needle.size())) {
    ++count;
  }
  return count;
}

}  // namespace nnexus::testing

#endif  // NNEXUS_TESTS_TEST_UTIL_H_
