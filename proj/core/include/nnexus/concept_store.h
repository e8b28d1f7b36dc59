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

#ifndef NNEXUS_CONCEPT_STORE_H_
#define NNEXUS_CONCEPT_STORE_H_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nnexus/msc.h"
#include "nnexus/normalizer.h"

namespace nnexus {

// A linkable definition harvested from some source.
struct Concept {
  std::string id;  // assigned by ConceptStore
  std::string label;
  std::vector<std::string> synonyms;
  std::vector<MscCode> msc;
  std::string source;
  std::string url;
  // Corpus record fields this version does not interpret, as (key, JSON
  // text) pairs in file order. Written back unchanged on save.
  std::vector<std::pair<std::string, std::string>> extra_fields;

  friend bool operator==(const Concept &, const Concept &) = default;
};

// Deterministic concept id: "<source>:<fingerprint of source/label/url>".
std::string MakeConceptId(std::string_view source, std::string_view label,
                          std::string_view url);

enum class ChangeKind { kAdded, kRemoved };

struct ChangeEvent {
  ChangeKind kind;
  Concept target;
  uint64_t sequence;  // strictly increasing per store
};

using ChangeListener = std::function<void(const ChangeEvent &)>;

// Metadata-quality hazard found by ValidateCorpus.
struct ValidationWarning {
  enum class Kind {
    kDuplicateLabel,     // same normalized label, several concepts, one source
    kSynonymCollision,   // a synonym equals another concept's label
  };
  Kind kind;
  std::string source;
  std::string phrase;                    // normalized phrase, space-joined
  std::vector<std::string> concept_ids;  // sorted
  std::string message;
};

// Owns the set of concepts. Mutations are serialized; readers take a shared
// lock and never observe a half-applied mutation. Change listeners run
// synchronously, in mutation order, while the writer lock is held, so a
// mutation has been fully propagated when AddConcept/RemoveConcept returns.
// Listeners must not call back into the store's mutators.
class ConceptStore {
 public:
  explicit ConceptStore(
      std::shared_ptr<const Normalizer> normalizer = DefaultNormalizer());

  ConceptStore(const ConceptStore &) = delete;
  ConceptStore &operator=(const ConceptStore &) = delete;

  // Registers a concept and returns its id. Throws Error with kEmptyLabel
  // (label normalizes to nothing), kInvalidUrl or kDuplicateConcept (same
  // source, label and url already present).
  std::string AddConcept(std::string label, std::vector<std::string> synonyms,
                         std::vector<MscCode> msc, std::string source,
                         std::string url);
  // As above, taking every field except `id` from `record`.
  std::string AddConcept(Concept record);

  // Throws Error(kUnknownId).
  Concept RemoveConcept(const std::string &id);

  std::optional<Concept> Find(const std::string &id) const;
  bool Contains(const std::string &id) const;

  // All concepts in registration order.
  std::vector<Concept> Snapshot() const;
  size_t size() const;
  std::map<std::string, size_t> CountBySource() const;

  // Returns a handle for Unsubscribe.
  int Subscribe(ChangeListener listener);
  void Unsubscribe(int handle);

  const Normalizer &normalizer() const { return *normalizer_; }
  std::shared_ptr<const Normalizer> shared_normalizer() const {
    return normalizer_;
  }

 private:
  struct Entry {
    uint64_t order;
    Concept value;
  };

  void Emit(ChangeKind kind, const Concept &target);

  std::shared_ptr<const Normalizer> normalizer_;
  mutable std::shared_mutex mu_;
  std::unordered_map<std::string, Entry> concepts_;
  std::map<uint64_t, std::string> order_;
  uint64_t next_order_ = 0;
  uint64_t sequence_ = 0;
  std::map<int, ChangeListener> listeners_;
  int next_listener_ = 0;
};

// Warnings for (a) one normalized label defined by several concepts of the
// same source, and (b) a synonym colliding with another concept's label in
// the same source. Never mutates the store.
std::vector<ValidationWarning> ValidateCorpus(const ConceptStore &store);

// Corpus files hold one JSON object per line:
//   {"label": str, "synonyms": [str], "msc": [str], "source": str, "url": str}
// plus any extra fields, which are preserved.
struct CorpusWarning {
  size_t line;  // 1-based
  std::string message;
};

// Appends the records of a corpus file to `store`. Malformed or rejected
// records are skipped and reported with their line number. Throws
// Error(kIoError) if the file cannot be read.
std::vector<CorpusWarning> LoadCorpus(const std::string &path,
                                      ConceptStore *store);
std::vector<CorpusWarning> LoadCorpus(std::istream &in, ConceptStore *store);

// Writes the store in registration order and returns the record count.
// Throws Error(kIoError).
size_t SaveCorpus(const ConceptStore &store, const std::string &path);
size_t SaveCorpus(const ConceptStore &store, std::ostream &out);

// Canonical single-line serialization of one record (no trailing newline).
std::string SerializeConceptRecord(const Concept &record);

}  // namespace nnexus

#endif  // NNEXUS_CONCEPT_STORE_H_
