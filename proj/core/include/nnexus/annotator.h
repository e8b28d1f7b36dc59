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

#ifndef NNEXUS_ANNOTATOR_H_
#define NNEXUS_ANNOTATOR_H_

#include <string>
#include <string_view>
#include <vector>

#include "nnexus/disambiguator.h"

namespace nnexus {

enum class LinkPolicy {
  kFirstOccurrence,  // only the earliest mention of each concept is linked
  kAll,
};

// Stand-off record for one resolved mention.
struct Annotation {
  size_t start = 0;
  size_t end = 0;
  std::string surface;
  std::string concept_id;
  std::string href;
  std::string source;
  std::vector<std::string> msc;

  friend bool operator==(const Annotation &, const Annotation &) = default;
};

// <a class="nnexus_concept" href="..." data-concept="..." data-source="...">
std::string LinkOpenTag(const Concept &target);
inline constexpr std::string_view kLinkCloseTag = "</a>";

// Wraps each selected mention's surface in a link, splicing bytes at the
// recorded offsets; every other byte of `html` is copied unchanged. Under
// kFirstOccurrence, concepts that already have an nnexus link in `html` are
// not linked again. Throws Error(kSpanMismatch) if a span does not slice to
// its surface or spans overlap.
std::string EmbedLinks(std::string_view html,
                       const std::vector<Resolution> &resolutions,
                       LinkPolicy policy = LinkPolicy::kFirstOccurrence);

// One record per resolution, sorted by start, regardless of link policy.
// Throws Error(kSpanMismatch).
std::vector<Annotation> Standoff(std::string_view html,
                                 const std::vector<Resolution> &resolutions);

// JSON array of {"start","end","surface","concept","href","source","msc"}.
std::string AnnotationsToJson(const std::vector<Annotation> &annotations);
// Throws Error(kParseError).
std::vector<Annotation> AnnotationsFromJson(std::string_view json_text);

}  // namespace nnexus

#endif  // NNEXUS_ANNOTATOR_H_
