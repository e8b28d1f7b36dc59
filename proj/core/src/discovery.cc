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

#include "nnexus/discovery.h"

#include <functional>
#include <unordered_set>

namespace nnexus {

namespace {

const std::unordered_set<std::string_view> &ExcludedElements() {
  static const std::unordered_set<std::string_view> kExcluded = {
      "a",    "code",           "pre",   "script",  "style",
      "math", "annotation",     "annotation-xml",  "title",
      "textarea"};
  return kExcluded;
}

void CollectSegments(const html::Node &node, std::vector<Segment> *out) {
  for (const auto &child : node.children) {
    if (child->is_text()) {
      out->push_back({child->text, child->start});
    } else if (child->is_element() && !IsExcludedElement(*child)) {
      CollectSegments(*child, out);
    }
  }
}

// Finds the closing `delim` at or after `from`, skipping "\$".
size_t FindCloser(std::string_view text, size_t from, std::string_view delim) {
  while (from < text.size()) {
    size_t at = text.find(delim, from);
    if (at == std::string_view::npos) return at;
    if (delim[0] == '$' && at > 0 && text[at - 1] == '\\') {
      from = at + 1;
      continue;
    }
    return at;
  }
  return std::string_view::npos;
}

std::set<std::string> LinkedConcepts(const html::Document &doc) {
  std::set<std::string> linked;
  doc.Visit([&](const html::Node &node) {
    if (!node.is_element() || node.name != "a") return;
    if (!node.HasClass("nnexus_concept")) return;
    if (const std::string *id = node.attribute("data-concept")) linked.insert(*id);
  });
  return linked;
}

}  // namespace

bool IsExcludedElement(const html::Node &node) {
  if (!node.is_element()) return false;
  return ExcludedElements().count(node.name) > 0 ||
         node.has_attribute("data-nolink");
}

std::vector<Segment> LinkableSegments(std::string_view html) {
  html::Document doc = html::Document::Parse(html);
  std::vector<Segment> segments;
  CollectSegments(doc.root(), &segments);
  return segments;
}

std::vector<std::pair<size_t, size_t>> MathFreeRanges(std::string_view text) {
  std::vector<std::pair<size_t, size_t>> ranges;
  size_t run_start = 0;
  size_t i = 0;
  auto island = [&](size_t open, size_t close_end) {
    if (open > run_start) ranges.emplace_back(run_start, open);
    run_start = close_end;
    i = close_end;
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '\\' && i + 1 < text.size()) {
      char next = text[i + 1];
      if (next == '(' || next == '[') {
        std::string_view closer = next == '(' ? "\\)" : "\\]";
        size_t at = text.find(closer, i + 2);
        if (at != std::string_view::npos) {
          island(i, at + 2);
          continue;
        }
      }
      i += 2;
      continue;
    }
    if (c == '$') {
      std::string_view delim =
          (i + 1 < text.size() && text[i + 1] == '$') ? "$$" : "$";
      size_t at = FindCloser(text, i + delim.size(), delim);
      if (at != std::string_view::npos) {
        island(i, at + delim.size());
        continue;
      }
      i += delim.size();
      continue;
    }
    ++i;
  }
  if (run_start < text.size()) ranges.emplace_back(run_start, text.size());
  return ranges;
}

std::set<std::string> ExistingLinkedConcepts(std::string_view html) {
  return LinkedConcepts(html::Document::Parse(html));
}

void ScanText(const ConceptIndex &index, std::string_view text, size_t base,
              std::vector<Mention> *mentions, std::set<std::string> *words) {
  std::vector<TokenSpan> tokens = index.normalizer().Tokenize(text);
  std::vector<const TokenSpan *> content;
  std::vector<std::string> norms;
  for (const TokenSpan &t : tokens) {
    if (t.is_stopword()) continue;
    content.push_back(&t);
    norms.push_back(t.norm);
    if (words != nullptr) words->insert(t.norm);
  }
  size_t pos = 0;
  while (pos < norms.size()) {
    std::optional<IndexMatch> match = index.LongestMatchAt(norms, pos);
    if (!match) {
      ++pos;
      continue;
    }
    const TokenSpan *first = content[pos];
    const TokenSpan *last = content[pos + match->length - 1];
    Mention m;
    m.start = base + first->start;
    m.end = base + last->end;
    m.surface = std::string(text.substr(first->start, last->end - first->start));
    m.phrase.assign(norms.begin() + pos, norms.begin() + pos + match->length);
    m.candidates = std::move(match->concept_ids);
    mentions->push_back(std::move(m));
    pos += match->length;
  }
}

DiscoveryResult Discover(const ConceptIndex &index, std::string_view html) {
  DiscoveryResult result;
  html::Document doc = html::Document::Parse(html);
  std::vector<Segment> segments;
  CollectSegments(doc.root(), &segments);
  for (const Segment &segment : segments) {
    std::string masked = html::MaskCharacterReferences(segment.text);
    for (auto [begin, end] : MathFreeRanges(masked)) {
      size_t first_new = result.mentions.size();
      ScanText(index, std::string_view(masked).substr(begin, end - begin),
               segment.offset + begin, &result.mentions, &result.words);
      // Masked references inside a span must read back as the original bytes.
      for (size_t k = first_new; k < result.mentions.size(); ++k) {
        Mention &m = result.mentions[k];
        m.surface = std::string(html.substr(m.start, m.end - m.start));
      }
    }
  }
  result.linked_concepts = LinkedConcepts(doc);
  return result;
}

std::vector<Mention> DiscoverMentions(const ConceptIndex &index,
                                      std::string_view html) {
  return Discover(index, html).mentions;
}

}  // namespace nnexus
