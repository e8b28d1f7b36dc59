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

#ifndef NNEXUS_CONCEPT_INDEX_H_
#define NNEXUS_CONCEPT_INDEX_H_

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "nnexus/concept_store.h"
#include "nnexus/normalizer.h"

namespace nnexus {

using Phrase = std::vector<std::string>;

struct IndexMatch {
  size_t length = 0;                   // number of tokens matched
  std::set<std::string> concept_ids;   // every concept sharing the phrase

  friend bool operator==(const IndexMatch &, const IndexMatch &) = default;
};

// Dictionary of normalized, stopword-free phrases (labels and synonyms) keyed
// by token sequence, supporting longest-match lookup. Not internally
// synchronized: callers provide the many-readers/one-writer discipline
// (Engine does).
class ConceptIndex {
 public:
  explicit ConceptIndex(
      std::shared_ptr<const Normalizer> normalizer = DefaultNormalizer());
  ConceptIndex(ConceptIndex &&) = default;
  ConceptIndex &operator=(ConceptIndex &&) = default;

  // Indexes every concept of the store. Concepts whose label normalizes to
  // nothing are skipped and described in `warnings`.
  static ConceptIndex Build(const ConceptStore &store,
                            std::vector<std::string> *warnings = nullptr);

  // Adds the concept under each distinct phrase of its label and synonyms.
  // Returns false (and indexes nothing) if the label has no phrase.
  bool Add(const Concept &concept_record);
  // Removes the concept id from every phrase it was indexed under.
  void Remove(const Concept &concept_record);
  void ApplyChange(const ChangeEvent &event);

  // Longest L >= 1 such that tokens[pos, pos + L) is an indexed phrase.
  std::optional<IndexMatch> LongestMatchAt(std::span<const std::string> tokens,
                                           size_t pos) const;

  // Concept ids for an exact phrase, or null.
  const std::set<std::string> *Lookup(std::span<const std::string> phrase) const;

  // Distinct normalized phrases of a concept's label and synonyms.
  std::set<Phrase> PhrasesOf(const Concept &concept_record) const;

  // First tokens of all phrases of the concept; the link cache expires any
  // document containing one of these words.
  std::set<std::string> InvalidationKeys(const Concept &concept_record) const;

  // First token -> set of phrase lengths present under it.
  std::map<std::string, std::set<size_t>> FirstWordMap() const;

  // Full phrase table, for comparisons and diagnostics.
  std::map<Phrase, std::set<std::string>> Entries() const;

  // Verifies that the first-word map agrees with the trie and that no empty
  // leaves remain.
  bool CheckConsistency() const;

  size_t size() const { return entry_count_; }
  bool empty() const { return entry_count_ == 0; }

  const Normalizer &normalizer() const { return *normalizer_; }

 private:
  struct Node {
    std::unordered_map<std::string, std::unique_ptr<Node>> children;
    std::set<std::string> ids;
  };

  void Insert(const Phrase &phrase, const std::string &id);
  void Erase(const Phrase &phrase, const std::string &id);
  size_t MaxLengthFor(const std::string &first_word) const;

  std::shared_ptr<const Normalizer> normalizer_;
  std::unique_ptr<Node> root_;
  // first token -> (phrase length -> number of entries)
  std::unordered_map<std::string, std::map<size_t, size_t>> first_words_;
  size_t entry_count_ = 0;
};

}  // namespace nnexus

#endif  // NNEXUS_CONCEPT_INDEX_H_
