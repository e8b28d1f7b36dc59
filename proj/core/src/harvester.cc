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

#include "nnexus/harvester.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "nnexus/error.h"
#include "nnexus/url.h"

namespace nnexus {

namespace {

using Json = nlohmann::ordered_json;

bool IsAsciiAlnum(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9');
}

// Appends every standalone MSC code found in `text`.
void ScanMscCodes(std::string_view text, std::vector<MscCode> *codes) {
  for (size_t i = 0; i + 5 <= text.size(); ++i) {
    if (i > 0 && IsAsciiAlnum(text[i - 1])) continue;
    if (i + 5 < text.size() && IsAsciiAlnum(text[i + 5])) continue;
    auto code = MscCode::TryParse(text.substr(i, 5));
    if (!code) continue;
    if (std::find(codes->begin(), codes->end(), *code) == codes->end()) {
      codes->push_back(*code);
    }
    i += 4;
  }
}

const html::Node *FindDescendant(const html::Node &node, std::string_view name) {
  for (const auto &child : node.children) {
    if (child->is_element() && child->name == name) return child.get();
    if (const html::Node *found = FindDescendant(*child, name)) return found;
  }
  return nullptr;
}

std::optional<std::string> OptionalString(const Json &j, const char *field) {
  auto it = j.find(field);
  if (it == j.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) {
    throw Error(ErrorCode::kParseError,
                std::string("rule field '") + field + "' must be a string or null");
  }
  return it->get<std::string>();
}

ElementSelector ParseSelector(const Json &j, const char *what) {
  if (!j.is_object()) {
    throw Error(ErrorCode::kParseError, std::string(what) + " selector must be an object");
  }
  ElementSelector sel;
  auto element = OptionalString(j, "element");
  if (!element || element->empty()) {
    throw Error(ErrorCode::kParseError,
                std::string(what) + " selector needs an 'element'");
  }
  sel.element = *element;
  for (char &c : sel.element) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  sel.attr = OptionalString(j, "attr");
  sel.attr_value = OptionalString(j, "attr_value");
  sel.ancestor = OptionalString(j, "ancestor");
  if (sel.attr_value && !sel.attr) {
    throw Error(ErrorCode::kParseError,
                std::string(what) + " selector has attr_value without attr");
  }
  return sel;
}

Json SelectorToJson(const ElementSelector &sel) {
  auto opt = [](const std::optional<std::string> &v) -> Json {
    return v ? Json(*v) : Json(nullptr);
  };
  return Json{{"element", sel.element},
              {"attr", opt(sel.attr)},
              {"attr_value", opt(sel.attr_value)},
              {"ancestor", opt(sel.ancestor)}};
}

IndexerRule RuleFromJson(const Json &j) {
  if (!j.is_object()) throw Error(ErrorCode::kParseError, "rule must be a JSON object");
  IndexerRule rule;
  auto source = OptionalString(j, "source");
  if (!source || source->empty()) {
    throw Error(ErrorCode::kParseError, "rule needs a non-empty 'source'");
  }
  rule.source = *source;
  auto term = j.find("term");
  if (term == j.end()) throw Error(ErrorCode::kParseError, "rule needs a 'term' selector");
  rule.term = ParseSelector(*term, "term");
  auto msc = j.find("msc");
  if (msc != j.end() && !msc->is_null()) rule.msc = ParseSelector(*msc, "msc");
  std::string url = OptionalString(j, "url").value_or("document");
  if (url == "document") {
    rule.url = UrlRule::kDocument;
  } else if (url == "anchor-href") {
    rule.url = UrlRule::kAnchorHref;
  } else {
    throw Error(ErrorCode::kParseError, "unknown url rule '" + url + "'");
  }
  auto inverted = j.find("inverted_title");
  if (inverted != j.end() && !inverted->is_null()) {
    if (!inverted->is_boolean()) {
      throw Error(ErrorCode::kParseError, "'inverted_title' must be a boolean");
    }
    rule.inverted_title = inverted->get<bool>();
  }
  return rule;
}

std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

bool ElementSelector::Matches(const html::Node &node) const {
  if (!node.is_element()) return false;
  if (element != "*" && node.name != element) return false;
  if (attr) {
    const std::string *value = node.attribute(*attr);
    if (value == nullptr) return false;
    if (attr_value) {
      bool ok = *attr == "class" ? node.HasClass(*attr_value) : *value == *attr_value;
      if (!ok) return false;
    }
  }
  if (ancestor && node.FindAncestor(*ancestor) == nullptr) return false;
  return true;
}

IndexerRule ParseIndexerRule(std::string_view json_text) {
  try {
    return RuleFromJson(Json::parse(json_text));
  } catch (const Json::exception &e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

std::vector<IndexerRule> ParseIndexerRules(std::string_view text) {
  std::vector<IndexerRule> rules;
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '[') {
    try {
      for (const Json &j : Json::parse(text)) rules.push_back(RuleFromJson(j));
    } catch (const Json::exception &e) {
      throw Error(ErrorCode::kParseError, e.what());
    }
    return rules;
  }
  std::istringstream in{std::string(text)};
  std::string line;
  size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      rules.push_back(ParseIndexerRule(line));
    } catch (const Error &e) {
      throw Error(ErrorCode::kParseError,
                  "rule line " + std::to_string(line_number) + ": " + e.what());
    }
  }
  return rules;
}

std::vector<IndexerRule> LoadIndexerRules(const std::string &path) {
  return ParseIndexerRules(ReadFile(path));
}

std::string SerializeIndexerRule(const IndexerRule &rule) {
  Json j{{"source", rule.source},
         {"term", SelectorToJson(rule.term)},
         {"msc", rule.msc ? SelectorToJson(*rule.msc) : Json(nullptr)},
         {"url", rule.url == UrlRule::kDocument ? "document" : "anchor-href"},
         {"inverted_title", rule.inverted_title}};
  return j.dump();
}

IndexerRule PlanetMathRule() {
  IndexerRule rule;
  rule.source = "planetmath";
  rule.term = {"*", "data-defines", std::nullopt, std::nullopt};
  rule.msc = ElementSelector{"meta", "property", "msc", std::nullopt};
  rule.url = UrlRule::kDocument;
  return rule;
}

IndexerRule DlmfRule() {
  IndexerRule rule;
  rule.source = "dlmf";
  rule.term = {"b", std::nullopt, std::nullopt, "a"};
  rule.url = UrlRule::kAnchorHref;
  return rule;
}

void IndexerRegistry::Register(IndexerRule rule) {
  if (rules_.count(rule.source) > 0) {
    throw Error(ErrorCode::kDuplicateSource,
                "an indexer for '" + rule.source + "' is already registered");
  }
  std::string source = rule.source;
  rules_.emplace(std::move(source), std::move(rule));
}

const IndexerRule *IndexerRegistry::Find(std::string_view source) const {
  auto it = rules_.find(source);
  return it == rules_.end() ? nullptr : &it->second;
}

std::vector<std::string> IndexerRegistry::sources() const {
  std::vector<std::string> out;
  for (const auto &[source, rule] : rules_) out.push_back(source);
  return out;
}

std::vector<ExtractedConcept> ExtractConcepts(const IndexerRule &rule,
                                              std::string_view html,
                                              std::string_view document_url,
                                              std::vector<std::string> *warnings) {
  html::Document doc = html::Document::Parse(html);
  auto warn = [&](std::string message) {
    if (warnings != nullptr) warnings->push_back(std::move(message));
  };

  std::vector<MscCode> codes;
  if (rule.msc) {
    doc.Visit([&](const html::Node &node) {
      if (!rule.msc->Matches(node)) return;
      ScanMscCodes(node.TextContent(), &codes);
      if (const std::string *content = node.attribute("content")) {
        ScanMscCodes(*content, &codes);
      }
    });
  }

  std::vector<ExtractedConcept> out;
  doc.Visit([&](const html::Node &node) {
    if (!rule.term.Matches(node)) return;
    ExtractedConcept record;
    record.label = html::CollapseWhitespace(node.TextContent());
    if (record.label.empty() && rule.term.attr && !rule.term.attr_value) {
      record.label = html::CollapseWhitespace(*node.attribute(*rule.term.attr));
    }
    if (record.label.empty()) {
      warn("term node at byte " + std::to_string(node.start) + " has no text");
      return;
    }
    if (rule.inverted_title) {
      size_t comma = record.label.find(", ");
      if (comma != std::string::npos) {
        record.synonyms.push_back(record.label.substr(comma + 2) + " " +
                                  record.label.substr(0, comma));
      }
    }
    record.msc = codes;
    if (rule.url == UrlRule::kDocument) {
      record.url = std::string(document_url);
    } else {
      const html::Node *anchor =
          node.name == "a" ? &node : node.FindAncestor("a");
      if (anchor == nullptr || !anchor->has_attribute("href")) {
        anchor = FindDescendant(node, "a");
      }
      const std::string *href = anchor ? anchor->attribute("href") : nullptr;
      if (href == nullptr || href->empty()) {
        warn("term '" + record.label + "' has no anchor href");
        return;
      }
      record.url = ResolveUrl(document_url, *href);
    }
    out.push_back(std::move(record));
  });
  return out;
}

HarvestReport HarvestDocument(const IndexerRegistry &registry,
                              std::string_view source, std::string_view html,
                              std::string_view document_url,
                              ConceptStore *store) {
  const IndexerRule *rule = registry.Find(source);
  if (rule == nullptr) {
    throw Error(ErrorCode::kUnknownSource,
                "no indexer registered for '" + std::string(source) + "'");
  }
  HarvestReport report;
  for (ExtractedConcept &record :
       ExtractConcepts(*rule, html, document_url, &report.warnings)) {
    try {
      report.concept_ids.push_back(store->AddConcept(
          record.label, std::move(record.synonyms), std::move(record.msc),
          rule->source, record.url));
      ++report.added;
    } catch (const Error &e) {
      if (e.code() == ErrorCode::kDuplicateConcept) {
        ++report.skipped;
      } else {
        report.warnings.push_back(e.what());
      }
    }
  }
  return report;
}

HarvestReport HarvestFile(const IndexerRegistry &registry,
                          std::string_view source, const std::string &path,
                          std::string_view document_url, ConceptStore *store) {
  if (registry.Find(source) == nullptr) {
    throw Error(ErrorCode::kUnknownSource,
                "no indexer registered for '" + std::string(source) + "'");
  }
  return HarvestDocument(registry, source, ReadFile(path), document_url, store);
}

}  // namespace nnexus
