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

#include "nnexus/engine.h"

#include <mutex>

#include "nnexus/discovery.h"
#include "nnexus/hash.h"

namespace nnexus {

std::optional<OutputFormat> ParseOutputFormat(std::string_view text) {
  if (text == "embed") return OutputFormat::kEmbed;
  if (text == "standoff") return OutputFormat::kStandoff;
  return std::nullopt;
}

std::optional<LinkPolicy> ParseLinkPolicy(std::string_view text) {
  if (text == "first") return LinkPolicy::kFirstOccurrence;
  if (text == "all") return LinkPolicy::kAll;
  return std::nullopt;
}

const char *LinkPolicyName(LinkPolicy policy) {
  return policy == LinkPolicy::kAll ? "all" : "first";
}

Engine::Engine(std::shared_ptr<const Normalizer> normalizer, EngineOptions options)
    : options_(std::move(options)),
      store_(normalizer),
      index_(normalizer),
      cache_(options_.cache_capacity) {
  subscription_ = store_.Subscribe([this](const ChangeEvent &event) {
    index_.ApplyChange(event);
    cache_.InvalidateForConcept(index_, event.target);
  });
}

Engine::~Engine() { store_.Unsubscribe(subscription_); }

std::string Engine::AddConcept(Concept record) {
  std::unique_lock lock(mu_);
  return store_.AddConcept(std::move(record));
}

Concept Engine::RemoveConcept(const std::string &id) {
  std::unique_lock lock(mu_);
  return store_.RemoveConcept(id);
}

std::vector<CorpusWarning> Engine::LoadCorpus(const std::string &path) {
  std::unique_lock lock(mu_);
  return nnexus::LoadCorpus(path, &store_);
}

HarvestReport Engine::Harvest(const IndexerRegistry &registry,
                              std::string_view source, std::string_view html,
                              std::string_view document_url) {
  std::unique_lock lock(mu_);
  return HarvestDocument(registry, source, html, document_url, &store_);
}

void Engine::Mutate(const std::function<void(ConceptStore &)> &fn) {
  std::unique_lock lock(mu_);
  fn(store_);
}

size_t Engine::SaveCorpus(const std::string &path) const {
  std::shared_lock lock(mu_);
  return nnexus::SaveCorpus(store_, path);
}

ResolveOptions Engine::MakeResolveOptions(const AnnotateOptions &options) const {
  ResolveOptions resolve;
  resolve.source_priority = options_.source_priority;
  resolve.allowed_sources = options.sources;
  return resolve;
}

Engine::PipelineOutput Engine::RunPipelineLocked(
    std::string_view html, const AnnotateOptions &options) const {
  DiscoveryResult discovery = Discover(index_, html);
  ResolveOptions resolve = MakeResolveOptions(options);
  resolve.linked_concepts = std::move(discovery.linked_concepts);
  std::vector<Resolution> resolutions =
      Resolve(discovery.mentions, store_, resolve);
  PipelineOutput out;
  out.result.html = EmbedLinks(html, resolutions, options.policy);
  out.result.annotations = Standoff(html, resolutions);
  out.words = std::move(discovery.words);
  return out;
}

std::vector<Resolution> Engine::ResolveDocument(
    std::string_view html, const AnnotateOptions &options) const {
  std::shared_lock lock(mu_);
  DiscoveryResult discovery = Discover(index_, html);
  ResolveOptions resolve = MakeResolveOptions(options);
  resolve.linked_concepts = std::move(discovery.linked_concepts);
  return Resolve(discovery.mentions, store_, resolve);
}

CachedResult Engine::AnnotateFresh(std::string_view html,
                                   const AnnotateOptions &options) const {
  std::shared_lock lock(mu_);
  return RunPipelineLocked(html, options).result;
}

CachedResult Engine::Annotate(std::string_view html,
                              const AnnotateOptions &options, bool *cache_hit) {
  uint64_t hash = Fingerprint(html);
  std::string key = options.doc_id.empty() ? "doc:" + FingerprintHex(hash)
                                           : "id:" + options.doc_id;
  key += "|";
  key += LinkPolicyName(options.policy);
  key += "|";
  if (options.sources) {
    for (const std::string &s : *options.sources) key += s + ",";
  } else {
    key += "*";
  }

  std::shared_lock lock(mu_);
  if (std::optional<CachedResult> hit = cache_.Get(key, hash)) {
    if (cache_hit != nullptr) *cache_hit = true;
    return std::move(*hit);
  }
  if (cache_hit != nullptr) *cache_hit = false;
  PipelineOutput out = RunPipelineLocked(html, options);
  // Invalidation needs the writer lock, so no store change can slip in
  // between computing this result and caching it.
  cache_.Put(key, hash, out.result, std::move(out.words));
  return std::move(out.result);
}

EngineStatus Engine::Status() const {
  std::shared_lock lock(mu_);
  EngineStatus status;
  status.concepts = store_.size();
  for (const auto &[source, count] : store_.CountBySource()) {
    status.sources.push_back(source);
  }
  status.cache = cache_.stats();
  return status;
}

void Engine::Read(
    const std::function<void(const ConceptStore &, const ConceptIndex &)> &fn)
    const {
  std::shared_lock lock(mu_);
  fn(store_, index_);
}

}  // namespace nnexus
