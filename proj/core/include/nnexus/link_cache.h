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

#ifndef NNEXUS_LINK_CACHE_H_
#define NNEXUS_LINK_CACHE_H_

#include <cstdint>
#include <list>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "nnexus/annotator.h"
#include "nnexus/concept_index.h"

namespace nnexus {

struct CachedResult {
  std::string html;                     // embedded-link output
  std::vector<Annotation> annotations;  // stand-off output

  friend bool operator==(const CachedResult &, const CachedResult &) = default;
};

struct CacheStats {
  size_t entries = 0;
  uint64_t hits = 0;
  uint64_t misses = 0;
  uint64_t expirations = 0;  // entries dropped by concept changes
  uint64_t evictions = 0;    // entries dropped by the capacity bound
};

// LRU cache of annotation results keyed by document id. Each entry remembers
// the normalized words of its document; a concept change expires every entry
// sharing a word with the concept's invalidation keys (the first words of its
// phrases). Entries stored with no words only go away through hash changes,
// replacement or eviction. All methods are thread-safe.
class LinkCache {
 public:
  static constexpr size_t kDefaultCapacity = 1024;

  explicit LinkCache(size_t capacity = kDefaultCapacity);

  // Hit iff an entry for doc_id exists with the same content hash.
  std::optional<CachedResult> Get(const std::string &doc_id,
                                  uint64_t content_hash);

  // Stores (or replaces) the entry and marks it most recently used.
  void Put(const std::string &doc_id, uint64_t content_hash,
           CachedResult result, std::set<std::string> first_words);

  // Expires entries whose words intersect `keys`; returns how many.
  size_t InvalidateForKeys(const std::set<std::string> &keys);
  size_t InvalidateForConcept(const ConceptIndex &index,
                              const Concept &changed);

  void Clear();
  CacheStats stats() const;
  size_t size() const;
  size_t capacity() const { return capacity_; }

 private:
  struct Entry {
    std::string doc_id;
    uint64_t content_hash;
    CachedResult result;
    std::set<std::string> words;
  };
  using EntryList = std::list<Entry>;

  void EraseLocked(EntryList::iterator it);

  const size_t capacity_;
  mutable std::mutex mu_;
  EntryList lru_;  // most recently used first
  std::unordered_map<std::string, EntryList::iterator> by_id_;
  std::unordered_map<std::string, std::set<std::string>> by_word_;
  CacheStats stats_;
};

}  // namespace nnexus

#endif  // NNEXUS_LINK_CACHE_H_
