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

#include "nnexus/concept_store.h"

#include <algorithm>
#include <mutex>

#include "nnexus/error.h"
#include "nnexus/hash.h"
#include "nnexus/url.h"

namespace nnexus {

std::string MakeConceptId(std::string_view source, std::string_view label,
                          std::string_view url) {
  std::string key;
  key.reserve(source.size() + label.size() + url.size() + 2);
  key.append(source).push_back('\x1f');
  key.append(label).push_back('\x1f');
  key.append(url);
  return std::string(source) + ":" + FingerprintHex(Fingerprint(key));
}

ConceptStore::ConceptStore(std::shared_ptr<const Normalizer> normalizer)
    : normalizer_(std::move(normalizer)) {}

std::string ConceptStore::AddConcept(std::string label,
                                     std::vector<std::string> synonyms,
                                     std::vector<MscCode> msc,
                                     std::string source, std::string url) {
  Concept record;
  record.label = std::move(label);
  record.synonyms = std::move(synonyms);
  record.msc = std::move(msc);
  record.source = std::move(source);
  record.url = std::move(url);
  return AddConcept(std::move(record));
}

std::string ConceptStore::AddConcept(Concept record) {
  if (normalizer_->TryNormalizePhrase(record.label).empty()) {
    throw Error(ErrorCode::kEmptyLabel,
                "label '" + record.label + "' normalizes to nothing");
  }
  if (!IsAbsoluteUrl(record.url)) {
    throw Error(ErrorCode::kInvalidUrl, "'" + record.url + "' is not an absolute URL");
  }
  if (record.source.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "concept source must not be empty");
  }

  std::unique_lock lock(mu_);
  const std::string base = MakeConceptId(record.source, record.label, record.url);
  std::string id = base;
  for (int suffix = 1;; ++suffix) {
    auto it = concepts_.find(id);
    if (it == concepts_.end()) break;
    const Concept &other = it->second.value;
    if (other.source == record.source && other.label == record.label &&
        other.url == record.url) {
      throw Error(ErrorCode::kDuplicateConcept,
                  "'" + record.label + "' from " + record.source + " at " +
                      record.url + " is already registered as " + id);
    }
    // Fingerprint collision between distinct records.
    id = base + "~" + std::to_string(suffix);
  }
  record.id = id;
  uint64_t order = next_order_++;
  order_.emplace(order, id);
  auto [it, inserted] = concepts_.emplace(id, Entry{order, std::move(record)});
  Emit(ChangeKind::kAdded, it->second.value);
  return id;
}

Concept ConceptStore::RemoveConcept(const std::string &id) {
  std::unique_lock lock(mu_);
  auto it = concepts_.find(id);
  if (it == concepts_.end()) {
    throw Error(ErrorCode::kUnknownId, "no concept with id '" + id + "'");
  }
  Concept removed = std::move(it->second.value);
  order_.erase(it->second.order);
  concepts_.erase(it);
  Emit(ChangeKind::kRemoved, removed);
  return removed;
}

void ConceptStore::Emit(ChangeKind kind, const Concept &target) {
  ChangeEvent event{kind, target, ++sequence_};
  for (auto &[handle, listener] : listeners_) listener(event);
}

std::optional<Concept> ConceptStore::Find(const std::string &id) const {
  std::shared_lock lock(mu_);
  auto it = concepts_.find(id);
  if (it == concepts_.end()) return std::nullopt;
  return it->second.value;
}

bool ConceptStore::Contains(const std::string &id) const {
  std::shared_lock lock(mu_);
  return concepts_.count(id) > 0;
}

std::vector<Concept> ConceptStore::Snapshot() const {
  std::shared_lock lock(mu_);
  std::vector<Concept> out;
  out.reserve(order_.size());
  for (const auto &[order, id] : order_) out.push_back(concepts_.at(id).value);
  return out;
}

size_t ConceptStore::size() const {
  std::shared_lock lock(mu_);
  return concepts_.size();
}

std::map<std::string, size_t> ConceptStore::CountBySource() const {
  std::shared_lock lock(mu_);
  std::map<std::string, size_t> counts;
  for (const auto &[id, entry] : concepts_) ++counts[entry.value.source];
  return counts;
}

int ConceptStore::Subscribe(ChangeListener listener) {
  std::unique_lock lock(mu_);
  int handle = next_listener_++;
  listeners_.emplace(handle, std::move(listener));
  return handle;
}

void ConceptStore::Unsubscribe(int handle) {
  std::unique_lock lock(mu_);
  listeners_.erase(handle);
}

namespace {

std::string JoinPhrase(const std::vector<std::string> &tokens) {
  std::string out;
  for (const std::string &t : tokens) {
    if (!out.empty()) out.push_back(' ');
    out += t;
  }
  return out;
}

std::string JoinIds(const std::vector<std::string> &ids) {
  std::string out;
  for (const std::string &id : ids) {
    if (!out.empty()) out += ", ";
    out += id;
  }
  return out;
}

}  // namespace

std::vector<ValidationWarning> ValidateCorpus(const ConceptStore &store) {
  const Normalizer &normalizer = store.normalizer();
  std::vector<Concept> concepts = store.Snapshot();

  // (source, normalized label) -> concept ids
  std::map<std::pair<std::string, std::string>, std::vector<std::string>> labels;
  for (const Concept &c : concepts) {
    std::string key = JoinPhrase(normalizer.TryNormalizePhrase(c.label));
    if (key.empty()) continue;
    labels[{c.source, key}].push_back(c.id);
  }

  std::vector<ValidationWarning> warnings;
  for (auto &[key, ids] : labels) {
    if (ids.size() < 2) continue;
    std::sort(ids.begin(), ids.end());
    ValidationWarning w;
    w.kind = ValidationWarning::Kind::kDuplicateLabel;
    w.source = key.first;
    w.phrase = key.second;
    w.concept_ids = ids;
    w.message = "'" + key.second + "' is defined by " +
                std::to_string(ids.size()) + " concepts in " + key.first +
                ": " + JoinIds(ids);
    warnings.push_back(std::move(w));
  }

  for (const Concept &c : concepts) {
    std::vector<std::string> seen;
    for (const std::string &synonym : c.synonyms) {
      std::string key = JoinPhrase(normalizer.TryNormalizePhrase(synonym));
      if (key.empty()) continue;
      if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
      seen.push_back(key);
      auto it = labels.find({c.source, key});
      if (it == labels.end()) continue;
      for (const std::string &other : it->second) {
        if (other == c.id) continue;
        ValidationWarning w;
        w.kind = ValidationWarning::Kind::kSynonymCollision;
        w.source = c.source;
        w.phrase = key;
        w.concept_ids = {c.id, other};
        std::sort(w.concept_ids.begin(), w.concept_ids.end());
        w.message = "synonym '" + synonym + "' of " + c.id +
                    " collides with the label of " + other + " in " + c.source;
        warnings.push_back(std::move(w));
      }
    }
  }
  return warnings;
}

}  // namespace nnexus
