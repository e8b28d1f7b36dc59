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

#include "nnexus/annotator.h"

#include <algorithm>
#include <set>

#include <nlohmann/json.hpp>

#include "nnexus/error.h"

namespace nnexus {

namespace {

using Json = nlohmann::ordered_json;

void CheckSpan(std::string_view html, const Mention &m) {
  if (m.start >= m.end || m.end > html.size() ||
      html.substr(m.start, m.end - m.start) != m.surface) {
    throw Error(ErrorCode::kSpanMismatch,
                "span [" + std::to_string(m.start) + ", " + std::to_string(m.end) +
                    ") does not slice to '" + m.surface + "'");
  }
}

// Resolutions ordered by start, with spans validated.
std::vector<const Resolution *> SortedChecked(
    std::string_view html, const std::vector<Resolution> &resolutions) {
  std::vector<const Resolution *> sorted;
  sorted.reserve(resolutions.size());
  for (const Resolution &r : resolutions) {
    CheckSpan(html, r.mention);
    sorted.push_back(&r);
  }
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Resolution *a, const Resolution *b) {
                     return a->mention.start < b->mention.start;
                   });
  for (size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i]->mention.start < sorted[i - 1]->mention.end) {
      throw Error(ErrorCode::kSpanMismatch,
                  "overlapping spans at byte " +
                      std::to_string(sorted[i]->mention.start));
    }
  }
  return sorted;
}

}  // namespace

std::string LinkOpenTag(const Concept &target) {
  std::string tag = "<a class=\"nnexus_concept\" href=\"";
  tag += html::EscapeAttribute(target.url);
  tag += "\" data-concept=\"";
  tag += html::EscapeAttribute(target.id);
  tag += "\" data-source=\"";
  tag += html::EscapeAttribute(target.source);
  tag += "\">";
  return tag;
}

std::string EmbedLinks(std::string_view html,
                       const std::vector<Resolution> &resolutions,
                       LinkPolicy policy) {
  std::vector<const Resolution *> sorted = SortedChecked(html, resolutions);
  std::set<std::string> linked;
  if (policy == LinkPolicy::kFirstOccurrence && !sorted.empty()) {
    linked = ExistingLinkedConcepts(html);
  }
  std::string out;
  out.reserve(html.size() + sorted.size() * 96);
  size_t copied = 0;
  for (const Resolution *r : sorted) {
    if (policy == LinkPolicy::kFirstOccurrence &&
        !linked.insert(r->chosen.id).second) {
      continue;
    }
    const Mention &m = r->mention;
    out.append(html.substr(copied, m.start - copied));
    out += LinkOpenTag(r->chosen);
    out.append(html.substr(m.start, m.end - m.start));
    out += kLinkCloseTag;
    copied = m.end;
  }
  out.append(html.substr(copied));
  return out;
}

std::vector<Annotation> Standoff(std::string_view html,
                                 const std::vector<Resolution> &resolutions) {
  std::vector<Annotation> out;
  for (const Resolution *r : SortedChecked(html, resolutions)) {
    Annotation a;
    a.start = r->mention.start;
    a.end = r->mention.end;
    a.surface = r->mention.surface;
    a.concept_id = r->chosen.id;
    a.href = r->chosen.url;
    a.source = r->chosen.source;
    for (const MscCode &code : r->chosen.msc) a.msc.push_back(code.str());
    out.push_back(std::move(a));
  }
  return out;
}

std::string AnnotationsToJson(const std::vector<Annotation> &annotations) {
  Json list = Json::array();
  for (const Annotation &a : annotations) {
    Json j = Json::object();
    j["start"] = a.start;
    j["end"] = a.end;
    j["surface"] = a.surface;
    j["concept"] = a.concept_id;
    j["href"] = a.href;
    j["source"] = a.source;
    j["msc"] = a.msc;
    list.push_back(std::move(j));
  }
  return list.dump(-1, ' ', false, Json::error_handler_t::replace);
}

std::vector<Annotation> AnnotationsFromJson(std::string_view json_text) {
  std::vector<Annotation> out;
  try {
    Json list = Json::parse(json_text);
    if (!list.is_array()) throw Error(ErrorCode::kParseError, "expected a JSON array");
    for (const Json &j : list) {
      Annotation a;
      a.start = j.at("start").get<size_t>();
      a.end = j.at("end").get<size_t>();
      a.surface = j.at("surface").get<std::string>();
      a.concept_id = j.at("concept").get<std::string>();
      a.href = j.at("href").get<std::string>();
      a.source = j.at("source").get<std::string>();
      a.msc = j.at("msc").get<std::vector<std::string>>();
      out.push_back(std::move(a));
    }
  } catch (const Json::exception &e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  return out;
}

}  // namespace nnexus
