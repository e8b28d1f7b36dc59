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

#include "nnexus/link_cache.h"

namespace nnexus {

LinkCache::LinkCache(size_t capacity) : capacity_(capacity) {}

std::optional<CachedResult> LinkCache::Get(const std::string &doc_id,
                                           uint64_t content_hash) {
  std::lock_guard lock(mu_);
  auto it = by_id_.find(doc_id);
  if (it == by_id_.end() || it->second->content_hash != content_hash) {
    ++stats_.misses;
    return std::nullopt;
  }
  lru_.splice(lru_.begin(), lru_, it->second);
  ++stats_.hits;
  return it->second->result;
}

void LinkCache::Put(const std::string &doc_id, uint64_t content_hash,
                    CachedResult result, std::set<std::string> first_words) {
  if (capacity_ == 0) return;
  std::lock_guard lock(mu_);
  auto existing = by_id_.find(doc_id);
  if (existing != by_id_.end()) EraseLocked(existing->second);
  while (lru_.size() >= capacity_) {
    EraseLocked(std::prev(lru_.end()));
    ++stats_.evictions;
  }
  lru_.push_front(
      Entry{doc_id, content_hash, std::move(result), std::move(first_words)});
  by_id_[doc_id] = lru_.begin();
  for (const std::string &word : lru_.front().words) by_word_[word].insert(doc_id);
}

void LinkCache::EraseLocked(EntryList::iterator it) {
  for (const std::string &word : it->words) {
    auto w = by_word_.find(word);
    if (w == by_word_.end()) continue;
    w->second.erase(it->doc_id);
    if (w->second.empty()) by_word_.erase(w);
  }
  by_id_.erase(it->doc_id);
  lru_.erase(it);
}

size_t LinkCache::InvalidateForKeys(const std::set<std::string> &keys) {
  std::lock_guard lock(mu_);
  std::set<std::string> doomed;
  for (const std::string &key : keys) {
    auto w = by_word_.find(key);
    if (w != by_word_.end()) doomed.insert(w->second.begin(), w->second.end());
  }
  for (const std::string &doc_id : doomed) {
    auto it = by_id_.find(doc_id);
    if (it != by_id_.end()) EraseLocked(it->second);
  }
  stats_.expirations += doomed.size();
  return doomed.size();
}

size_t LinkCache::InvalidateForConcept(const ConceptIndex &index,
                                       const Concept &changed) {
  return InvalidateForKeys(index.InvalidationKeys(changed));
}

void LinkCache::Clear() {
  std::lock_guard lock(mu_);
  lru_.clear();
  by_id_.clear();
  by_word_.clear();
}

CacheStats LinkCache::stats() const {
  std::lock_guard lock(mu_);
  CacheStats s = stats_;
  s.entries = lru_.size();
  return s;
}

size_t LinkCache::size() const {
  std::lock_guard lock(mu_);
  return lru_.size();
}

}  // namespace nnexus
