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

#ifndef NNEXUS_DISAMBIGUATOR_H_
#define NNEXUS_DISAMBIGUATOR_H_

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nnexus/concept_store.h"
#include "nnexus/discovery.h"

namespace nnexus {

enum class ResolutionMethod { kUnique, kCluster, kFallback };

const char *ResolutionMethodName(ResolutionMethod method);

struct Resolution {
  Mention mention;  // candidates narrowed to those actually considered
  Concept chosen;
  int score = 0;    // summed anchor distance of the chosen concept
  ResolutionMethod method = ResolutionMethod::kUnique;
  // Summed anchor distance of every candidate (cluster resolutions only).
  std::map<std::string, int> candidate_scores;
};

// Smallest MscDistance over all code pairs; kMaxMscDistance when either
// concept has no codes.
int ConceptDistance(const Concept &a, const Concept &b);

// planetmath, dlmf, encyclopediaofmath, mathworld, wikipedia, nlab, mathhub.
const std::vector<std::string> &DefaultSourcePriority();

struct ResolveOptions {
  std::vector<std::string> source_priority = DefaultSourcePriority();
  // When set, candidates from other sources are dropped before resolution;
  // mentions left without candidates are dropped.
  std::optional<std::set<std::string>> allowed_sources;
  // Concepts the document already links to. A multi-candidate mention that
  // includes some of them chooses among those only, which keeps repeated
  // annotation passes stable.
  std::set<std::string> linked_concepts;
};

using ConceptLookup = std::function<std::optional<Concept>(const std::string &)>;

// Single-candidate mentions resolve to their candidate and become anchors.
// Every other mention picks the candidate with the smallest total distance
// to the (distinct) anchor concepts; ties go to the earlier source in the
// priority list, then to the smaller concept id. Without anchors the
// tie-break alone decides (method kFallback). Candidates the lookup cannot
// find are ignored.
std::vector<Resolution> Resolve(const std::vector<Mention> &mentions,
                                const ConceptLookup &lookup,
                                const ResolveOptions &options = {});
std::vector<Resolution> Resolve(const std::vector<Mention> &mentions,
                                const ConceptStore &store,
                                const ResolveOptions &options = {});

}  // namespace nnexus

#endif  // NNEXUS_DISAMBIGUATOR_H_
