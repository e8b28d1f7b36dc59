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

#include "nnexus/concept_index.h"

#include <functional>

namespace nnexus {

ConceptIndex::ConceptIndex(std::shared_ptr<const Normalizer> normalizer)
    : normalizer_(std::move(normalizer)), root_(std::make_unique<Node>()) {}

ConceptIndex ConceptIndex::Build(const ConceptStore &store,
                                 std::vector<std::string> *warnings) {
  ConceptIndex index(store.shared_normalizer());
  for (const Concept &c : store.Snapshot()) {
    if (!index.Add(c) && warnings != nullptr) {
      warnings->push_back("concept " + c.id + " ('" + c.label +
                          "') has no indexable label; skipped");
    }
  }
  return index;
}

std::set<Phrase> ConceptIndex::PhrasesOf(const Concept &concept_record) const {
  std::set<Phrase> phrases;
  Phrase label = normalizer_->TryNormalizePhrase(concept_record.label);
  if (label.empty()) return phrases;
  phrases.insert(std::move(label));
  for (const std::string &synonym : concept_record.synonyms) {
    Phrase p = normalizer_->TryNormalizePhrase(synonym);
    if (!p.empty()) phrases.insert(std::move(p));
  }
  return phrases;
}

std::set<std::string> ConceptIndex::InvalidationKeys(
    const Concept &concept_record) const {
  std::set<std::string> keys;
  for (const Phrase &p : PhrasesOf(concept_record)) keys.insert(p.front());
  return keys;
}

bool ConceptIndex::Add(const Concept &concept_record) {
  std::set<Phrase> phrases = PhrasesOf(concept_record);
  if (phrases.empty()) return false;
  for (const Phrase &p : phrases) Insert(p, concept_record.id);
  return true;
}

void ConceptIndex::Remove(const Concept &concept_record) {
  for (const Phrase &p : PhrasesOf(concept_record)) Erase(p, concept_record.id);
}

void ConceptIndex::ApplyChange(const ChangeEvent &event) {
  if (event.kind == ChangeKind::kAdded) {
    Add(event.target);
  } else {
    Remove(event.target);
  }
}

void ConceptIndex::Insert(const Phrase &phrase, const std::string &id) {
  Node *node = root_.get();
  for (const std::string &token : phrase) {
    std::unique_ptr<Node> &child = node->children[token];
    if (!child) child = std::make_unique<Node>();
    node = child.get();
  }
  bool was_empty = node->ids.empty();
  node->ids.insert(id);
  if (was_empty) {
    ++first_words_[phrase.front()][phrase.size()];
    ++entry_count_;
  }
}

void ConceptIndex::Erase(const Phrase &phrase, const std::string &id) {
  std::vector<Node *> path{root_.get()};
  for (const std::string &token : phrase) {
    auto it = path.back()->children.find(token);
    if (it == path.back()->children.end()) return;
    path.push_back(it->second.get());
  }
  Node *leaf = path.back();
  if (leaf->ids.erase(id) == 0 || !leaf->ids.empty()) return;

  --entry_count_;
  auto fw = first_words_.find(phrase.front());
  if (--fw->second[phrase.size()] == 0) fw->second.erase(phrase.size());
  if (fw->second.empty()) first_words_.erase(fw);

  // Prune nodes that no longer lead to any entry.
  for (size_t depth = phrase.size(); depth > 0; --depth) {
    Node *node = path[depth];
    if (!node->ids.empty() || !node->children.empty()) break;
    path[depth - 1]->children.erase(phrase[depth - 1]);
  }
}

size_t ConceptIndex::MaxLengthFor(const std::string &first_word) const {
  auto it = first_words_.find(first_word);
  if (it == first_words_.end() || it->second.empty()) return 0;
  return it->second.rbegin()->first;
}

std::optional<IndexMatch> ConceptIndex::LongestMatchAt(
    std::span<const std::string> tokens, size_t pos) const {
  if (pos >= tokens.size()) return std::nullopt;
  size_t limit = std::min(MaxLengthFor(tokens[pos]), tokens.size() - pos);
  const Node *node = root_.get();
  const Node *best = nullptr;
  size_t best_length = 0;
  for (size_t len = 1; len <= limit; ++len) {
    auto it = node->children.find(tokens[pos + len - 1]);
    if (it == node->children.end()) break;
    node = it->second.get();
    if (!node->ids.empty()) {
      best = node;
      best_length = len;
    }
  }
  if (best == nullptr) return std::nullopt;
  return IndexMatch{best_length, best->ids};
}

const std::set<std::string> *ConceptIndex::Lookup(
    std::span<const std::string> phrase) const {
  if (phrase.empty()) return nullptr;
  const Node *node = root_.get();
  for (const std::string &token : phrase) {
    auto it = node->children.find(token);
    if (it == node->children.end()) return nullptr;
    node = it->second.get();
  }
  return node->ids.empty() ? nullptr : &node->ids;
}

std::map<Phrase, std::set<std::string>> ConceptIndex::Entries() const {
  std::map<Phrase, std::set<std::string>> entries;
  Phrase prefix;
  std::function<void(const Node &)> walk = [&](const Node &node) {
    if (!node.ids.empty()) entries.emplace(prefix, node.ids);
    for (const auto &[token, child] : node.children) {
      prefix.push_back(token);
      walk(*child);
      prefix.pop_back();
    }
  };
  walk(*root_);
  return entries;
}

std::map<std::string, std::set<size_t>> ConceptIndex::FirstWordMap() const {
  std::map<std::string, std::set<size_t>> out;
  for (const auto &[word, lengths] : first_words_) {
    for (const auto &[length, count] : lengths) out[word].insert(length);
  }
  return out;
}

bool ConceptIndex::CheckConsistency() const {
  std::map<std::string, std::map<size_t, size_t>> derived;
  bool no_dead_leaves = true;
  Phrase prefix;
  std::function<void(const Node &)> walk = [&](const Node &node) {
    if (!node.ids.empty()) ++derived[prefix.front()][prefix.size()];
    if (node.ids.empty() && node.children.empty() && !prefix.empty()) {
      no_dead_leaves = false;
    }
    for (const auto &[token, child] : node.children) {
      prefix.push_back(token);
      walk(*child);
      prefix.pop_back();
    }
  };
  walk(*root_);
  std::map<std::string, std::map<size_t, size_t>> stored(first_words_.begin(),
                                                         first_words_.end());
  size_t total = 0;
  for (const auto &[word, lengths] : derived) {
    for (const auto &[length, count] : lengths) total += count;
  }
  return no_dead_leaves && derived == stored && total == entry_count_;
}

}  // namespace nnexus
