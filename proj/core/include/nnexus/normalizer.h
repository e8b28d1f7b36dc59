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

#ifndef NNEXUS_NORMALIZER_H_
#define NNEXUS_NORMALIZER_H_

#include <memory>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace nnexus {

// One token of a text, with its position in the (UTF-8) source.
struct TokenSpan {
  std::string surface;  // source.substr(start, end - start)
  std::string norm;     // normalized form; empty for stopwords
  size_t start = 0;
  size_t end = 0;       // exclusive

  bool is_stopword() const { return norm.empty(); }
  friend bool operator==(const TokenSpan &, const TokenSpan &) = default;
};

// Linguistic normalization applied identically to concept labels and to
// document text: tokenization with byte offsets, lowercasing, NFC, stopword
// removal and a minimal plural stemmer. Instances are immutable and safe to
// share between threads.
class Normalizer {
 public:
  // Uses the stopword list shipped with the library.
  Normalizer();
  explicit Normalizer(std::vector<std::string> stopwords);

  // Reads a stopword file: one lowercase word per line; blank lines and
  // lines starting with '#' are ignored. Throws Error(kIoError).
  static Normalizer FromStopwordFile(const std::string &path);

  // Splits text into maximal runs of letters and digits; a single hyphen
  // between two such characters is kept inside the token ("well-defined").
  // Invalid UTF-8 bytes act as separators.
  std::vector<TokenSpan> Tokenize(std::string_view text) const;

  // Lowercase + NFC, then "" for stopwords, otherwise plural stemming.
  std::string NormalizeToken(std::string_view token) const;

  // Tokenizes and normalizes a phrase, dropping stopwords. This is the
  // canonical index key of a concept label. Throws Error(kEmptyPhrase) if
  // no token survives.
  std::vector<std::string> NormalizePhrase(std::string_view phrase) const;

  // Same as NormalizePhrase but returns an empty vector instead of throwing.
  std::vector<std::string> TryNormalizePhrase(std::string_view phrase) const;

  bool IsStopword(std::string_view lowered) const;
  size_t stopword_count() const { return stopwords_.size(); }

 private:
  std::unordered_set<std::string> stopwords_;
};

// The stopword list compiled into the library, in file order.
const std::vector<std::string> &ShippedStopwords();

// The plural stripper on its own (no case folding, no stopwords). Rules are
// tried in order and the first applicable one fires; this repeats until no
// rule applies:
//   "ies" -> "y" when the word is longer than 4 characters;
//   "sses" -> "ss";
//   "es" is dropped after s, x, z, ch or sh;
//   "s" is dropped when the word is longer than 3 characters and does not
//   end in "ss", "us" or "is".
std::string StemPlural(std::string_view word);

// Shared default instance.
std::shared_ptr<const Normalizer> DefaultNormalizer();

}  // namespace nnexus

#endif  // NNEXUS_NORMALIZER_H_
