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

#ifndef NNEXUS_DISCOVERY_H_
#define NNEXUS_DISCOVERY_H_

#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nnexus/concept_index.h"
#include "nnexus/html.h"

namespace nnexus {

// A run of linkable text and the byte offset where it starts in the input.
struct Segment {
  std::string text;
  size_t offset = 0;

  friend bool operator==(const Segment &, const Segment &) = default;
};

// A discovered occurrence of an indexed phrase.
struct Mention {
  size_t start = 0;  // byte offsets into the original input, end exclusive
  size_t end = 0;
  std::string surface;
  Phrase phrase;                      // normalized tokens that matched
  std::set<std::string> candidates;   // never empty

  friend bool operator==(const Mention &, const Mention &) = default;
};

// True for elements whose content must never be linked: a, code, pre,
// script, style, math, annotation, annotation-xml, title, textarea, and any
// element carrying a data-nolink attribute.
bool IsExcludedElement(const html::Node &node);

// Text nodes outside excluded elements, in document order. Plain text with
// no markup comes back as a single segment at offset 0.
std::vector<Segment> LinkableSegments(std::string_view html);

// Byte ranges of `text` lying outside inline math ($...$, $$...$$, \(...\)
// and \[...\]). Unpaired delimiters and "\$" are ordinary text.
std::vector<std::pair<size_t, size_t>> MathFreeRanges(std::string_view text);

// Concept ids of links a previous annotation pass already inserted
// (<a class="nnexus_concept" data-concept="...">).
std::set<std::string> ExistingLinkedConcepts(std::string_view html);

struct DiscoveryResult {
  std::vector<Mention> mentions;
  // Every normalized non-stopword token the scanner saw. A concept change can
  // only affect this document if one of its phrases starts with such a word.
  std::set<std::string> words;
  std::set<std::string> linked_concepts;
};

// Left-to-right greedy longest-match scan of every linkable segment. After a
// match the scan resumes behind it, so mentions never overlap. Phrases never
// span markup, math islands, or excluded elements.
DiscoveryResult Discover(const ConceptIndex &index, std::string_view html);

std::vector<Mention> DiscoverMentions(const ConceptIndex &index,
                                      std::string_view html);

// The scan on a single run of plain text; offsets are shifted by `base`.
void ScanText(const ConceptIndex &index, std::string_view text, size_t base,
              std::vector<Mention> *mentions, std::set<std::string> *words);

}  // namespace nnexus

#endif  // NNEXUS_DISCOVERY_H_
