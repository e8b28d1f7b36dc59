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

#ifndef NNEXUS_ENGINE_H_
#define NNEXUS_ENGINE_H_

#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "nnexus/annotator.h"
#include "nnexus/concept_index.h"
#include "nnexus/concept_store.h"
#include "nnexus/disambiguator.h"
#include "nnexus/harvester.h"
#include "nnexus/link_cache.h"

namespace nnexus {

enum class OutputFormat { kEmbed, kStandoff };

std::optional<OutputFormat> ParseOutputFormat(std::string_view text);
std::optional<LinkPolicy> ParseLinkPolicy(std::string_view text);
const char *LinkPolicyName(LinkPolicy policy);

struct EngineOptions {
  std::vector<std::string> source_priority = DefaultSourcePriority();
  size_t cache_capacity = LinkCache::kDefaultCapacity;
};

struct AnnotateOptions {
  LinkPolicy policy = LinkPolicy::kFirstOccurrence;
  std::optional<std::set<std::string>> sources;  // allow-list
  std::string doc_id;  // cache key; derived from the content when empty
};

struct EngineStatus {
  size_t concepts = 0;
  std::vector<std::string> sources;
  CacheStats cache;
};

// The discover -> resolve -> annotate pipeline over a concept store, its
// index, and a result cache. Annotation calls share a reader lock; every
// store mutation takes the writer lock, updates the index and expires
// affected cache entries before it returns.
class Engine {
 public:
  explicit Engine(
      std::shared_ptr<const Normalizer> normalizer = DefaultNormalizer(),
      EngineOptions options = {});
  ~Engine();

  Engine(const Engine &) = delete;
  Engine &operator=(const Engine &) = delete;

  std::string AddConcept(Concept record);
  Concept RemoveConcept(const std::string &id);
  std::vector<CorpusWarning> LoadCorpus(const std::string &path);
  HarvestReport Harvest(const IndexerRegistry &registry, std::string_view source,
                        std::string_view html, std::string_view document_url);
  // Runs `fn` with exclusive access to the store.
  void Mutate(const std::function<void(ConceptStore &)> &fn);

  size_t SaveCorpus(const std::string &path) const;

  // Cached annotation. `cache_hit`, when given, reports whether the result
  // came from the cache.
  CachedResult Annotate(std::string_view html, const AnnotateOptions &options = {},
                        bool *cache_hit = nullptr);

  // Runs the full pipeline without consulting or filling the cache.
  CachedResult AnnotateFresh(std::string_view html,
                             const AnnotateOptions &options = {}) const;

  std::vector<Resolution> ResolveDocument(std::string_view html,
                                          const AnnotateOptions &options = {}) const;

  EngineStatus Status() const;

  // Read access to the store and index under the reader lock.
  void Read(const std::function<void(const ConceptStore &, const ConceptIndex &)>
                &fn) const;

  const ConceptStore &store() const { return store_; }

 private:
  struct PipelineOutput {
    CachedResult result;
    std::set<std::string> words;
  };

  PipelineOutput RunPipelineLocked(std::string_view html,
                                   const AnnotateOptions &options) const;
  ResolveOptions MakeResolveOptions(const AnnotateOptions &options) const;

  EngineOptions options_;
  mutable std::shared_mutex mu_;
  ConceptStore store_;
  ConceptIndex index_;
  LinkCache cache_;
  int subscription_;
};

}  // namespace nnexus

#endif  // NNEXUS_ENGINE_H_
