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

#ifndef NNEXUS_HARVESTER_H_
#define NNEXUS_HARVESTER_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nnexus/concept_store.h"
#include "nnexus/html.h"

namespace nnexus {

// Declarative node locator: a conjunction of element name, attribute
// presence, attribute value and ancestor element. Element "*" matches any
// element. For the "class" attribute, attr_value matches one class token.
struct ElementSelector {
  std::string element;
  std::optional<std::string> attr;
  std::optional<std::string> attr_value;
  std::optional<std::string> ancestor;

  bool Matches(const html::Node &node) const;
};

enum class UrlRule {
  kDocument,    // the harvested document's own URL
  kAnchorHref,  // href of the enclosing (or matched) <a>, resolved
};

// Per-source extraction rule: where a source's pages keep their defined
// terms, their classification codes, and what each term should link to.
struct IndexerRule {
  std::string source;
  ElementSelector term;
  // Codes are read from the text and the "content" attribute of every
  // matching node and apply to all terms of the document.
  std::optional<ElementSelector> msc;
  UrlRule url = UrlRule::kDocument;
  // "group, abelian" becomes label "group, abelian" plus synonym
  // "abelian group".
  bool inverted_title = false;
};

// Rule files hold one JSON object per line (or a JSON array of them):
//   {"source": str, "term": {"element": str, "attr": str|null,
//    "attr_value": str|null, "ancestor": str|null}, "msc": {...}|null,
//    "url": "document"|"anchor-href", "inverted_title": bool}
// Throws Error(kParseError) / Error(kIoError).
IndexerRule ParseIndexerRule(std::string_view json_text);
std::vector<IndexerRule> ParseIndexerRules(std::string_view text);
std::vector<IndexerRule> LoadIndexerRules(const std::string &path);
std::string SerializeIndexerRule(const IndexerRule &rule);

// Rules for the two page layouts the harvester ships with: term definitions
// marked by a "data-defines" attribute with codes in
// <meta property="msc" content="...">, and index pages listing terms as
// bold text inside anchors.
IndexerRule PlanetMathRule();
IndexerRule DlmfRule();

class IndexerRegistry {
 public:
  // Throws Error(kDuplicateSource).
  void Register(IndexerRule rule);
  const IndexerRule *Find(std::string_view source) const;
  std::vector<std::string> sources() const;

 private:
  std::map<std::string, IndexerRule, std::less<>> rules_;
};

struct ExtractedConcept {
  std::string label;
  std::vector<std::string> synonyms;
  std::vector<MscCode> msc;
  std::string url;
};

struct HarvestReport {
  size_t added = 0;
  size_t skipped = 0;  // duplicates of concepts already in the store
  std::vector<std::string> warnings;
  std::vector<std::string> concept_ids;  // ids of the added concepts

  size_t extracted() const { return added + skipped; }
};

// Applies a rule to one document without touching any store. Nodes that
// yield no usable record (empty label, no anchor href) become warnings.
std::vector<ExtractedConcept> ExtractConcepts(const IndexerRule &rule,
                                              std::string_view html,
                                              std::string_view document_url,
                                              std::vector<std::string> *warnings);

// Extracts with the rule registered for `source` and adds each record to the
// store. Throws Error(kUnknownSource).
HarvestReport HarvestDocument(const IndexerRegistry &registry,
                              std::string_view source, std::string_view html,
                              std::string_view document_url,
                              ConceptStore *store);

// Reads the document from disk first. Throws Error(kIoError).
HarvestReport HarvestFile(const IndexerRegistry &registry,
                          std::string_view source, const std::string &path,
                          std::string_view document_url, ConceptStore *store);

}  // namespace nnexus

#endif  // NNEXUS_HARVESTER_H_
