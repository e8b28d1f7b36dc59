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

// Line-oriented JSON corpus files.

#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include <nlohmann/json.hpp>

#include "nnexus/concept_store.h"
#include "nnexus/error.h"

namespace nnexus {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char *kKnownFields[] = {"label", "synonyms", "msc", "source",
                                        "url"};

bool IsKnownField(const std::string &key) {
  for (const char *k : kKnownFields) {
    if (key == k) return true;
  }
  return false;
}

std::vector<std::string> StringList(const Json &record, const char *field) {
  std::vector<std::string> out;
  auto it = record.find(field);
  if (it == record.end() || it->is_null()) return out;
  if (!it->is_array()) {
    throw Error(ErrorCode::kParseError,
                std::string("field '") + field + "' must be an array of strings");
  }
  for (const Json &v : *it) {
    if (!v.is_string()) {
      throw Error(ErrorCode::kParseError,
                  std::string("field '") + field + "' must contain only strings");
    }
    out.push_back(v.get<std::string>());
  }
  return out;
}

std::string RequiredString(const Json &record, const char *field) {
  auto it = record.find(field);
  if (it == record.end() || !it->is_string()) {
    throw Error(ErrorCode::kParseError,
                std::string("missing string field '") + field + "'");
  }
  return it->get<std::string>();
}

Concept ParseRecord(std::string_view line) {
  Json record = Json::parse(line.begin(), line.end());
  if (!record.is_object()) {
    throw Error(ErrorCode::kParseError, "record is not a JSON object");
  }
  Concept c;
  c.label = RequiredString(record, "label");
  c.source = RequiredString(record, "source");
  c.url = RequiredString(record, "url");
  c.synonyms = StringList(record, "synonyms");
  for (const std::string &code : StringList(record, "msc")) {
    c.msc.push_back(MscCode::Parse(code));
  }
  for (auto it = record.begin(); it != record.end(); ++it) {
    if (!IsKnownField(it.key())) c.extra_fields.emplace_back(it.key(), it->dump());
  }
  return c;
}

}  // namespace

std::string SerializeConceptRecord(const Concept &record) {
  Json j;
  j["label"] = record.label;
  j["synonyms"] = record.synonyms;
  Json msc = Json::array();
  for (const MscCode &code : record.msc) msc.push_back(code.str());
  j["msc"] = std::move(msc);
  j["source"] = record.source;
  j["url"] = record.url;
  for (const auto &[key, text] : record.extra_fields) {
    j[key] = Json::parse(text);
  }
  return j.dump(-1, ' ', false, Json::error_handler_t::replace);
}

std::vector<CorpusWarning> LoadCorpus(std::istream &in, ConceptStore *store) {
  std::vector<CorpusWarning> warnings;
  std::string line;
  size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line_number == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      store->AddConcept(ParseRecord(line));
    } catch (const Error &e) {
      warnings.push_back({line_number, e.what()});
    } catch (const Json::exception &e) {
      warnings.push_back({line_number, std::string("ParseError: ") + e.what()});
    }
  }
  if (in.bad()) throw Error(ErrorCode::kIoError, "read error in corpus stream");
  return warnings;
}

std::vector<CorpusWarning> LoadCorpus(const std::string &path,
                                      ConceptStore *store) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open corpus " + path);
  return LoadCorpus(in, store);
}

size_t SaveCorpus(const ConceptStore &store, std::ostream &out) {
  size_t count = 0;
  for (const Concept &c : store.Snapshot()) {
    out << SerializeConceptRecord(c) << '\n';
    ++count;
  }
  if (!out) throw Error(ErrorCode::kIoError, "write error in corpus stream");
  return count;
}

size_t SaveCorpus(const ConceptStore &store, const std::string &path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write corpus " + path);
  size_t count = SaveCorpus(store, out);
  out.flush();
  if (!out) throw Error(ErrorCode::kIoError, "write error on " + path);
  return count;
}

}  // namespace nnexus
