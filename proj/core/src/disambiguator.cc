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

#include "nnexus/disambiguator.h"

#include <algorithm>
#include <limits>

namespace nnexus {

namespace {

struct Candidates {
  Mention mention;
  std::vector<Concept> concepts;  // sorted by id
};

class TieBreak {
 public:
  explicit TieBreak(const std::vector<std::string> &priority) {
    for (size_t i = 0; i < priority.size(); ++i) rank_.emplace(priority[i], i);
    unlisted_ = priority.size();
  }

  // True if `a` should win a tie against `b`.
  bool Before(const Concept &a, const Concept &b) const {
    size_t ra = Rank(a.source);
    size_t rb = Rank(b.source);
    if (ra != rb) return ra < rb;
    return a.id < b.id;
  }

 private:
  size_t Rank(const std::string &source) const {
    auto it = rank_.find(source);
    return it == rank_.end() ? unlisted_ : it->second;
  }

  std::map<std::string, size_t> rank_;
  size_t unlisted_;
};

}  // namespace

const char *ResolutionMethodName(ResolutionMethod method) {
  switch (method) {
    case ResolutionMethod::kUnique: return "unique";
    case ResolutionMethod::kCluster: return "cluster";
    case ResolutionMethod::kFallback: return "fallback";
  }
  return "unknown";
}

int ConceptDistance(const Concept &a, const Concept &b) {
  if (a.msc.empty() || b.msc.empty()) return kMaxMscDistance;
  int best = kMaxMscDistance;
  for (const MscCode &x : a.msc) {
    for (const MscCode &y : b.msc) best = std::min(best, MscDistance(x, y));
  }
  return best;
}

const std::vector<std::string> &DefaultSourcePriority() {
  static const std::vector<std::string> kPriority = {
      "planetmath", "dlmf", "encyclopediaofmath", "mathworld",
      "wikipedia",  "nlab", "mathhub"};
  return kPriority;
}

std::vector<Resolution> Resolve(const std::vector<Mention> &mentions,
                                const ConceptLookup &lookup,
                                const ResolveOptions &options) {
  std::vector<Candidates> pending;
  pending.reserve(mentions.size());
  for (const Mention &m : mentions) {
    Candidates c;
    c.mention = m;
    c.mention.candidates.clear();
    for (const std::string &id : m.candidates) {
      std::optional<Concept> found = lookup(id);
      if (!found) continue;
      if (options.allowed_sources &&
          options.allowed_sources->count(found->source) == 0) {
        continue;
      }
      c.concepts.push_back(std::move(*found));
    }
    if (c.concepts.size() > 1 && !options.linked_concepts.empty()) {
      std::vector<Concept> linked;
      for (const Concept &x : c.concepts) {
        if (options.linked_concepts.count(x.id) > 0) linked.push_back(x);
      }
      if (!linked.empty()) c.concepts = std::move(linked);
    }
    if (c.concepts.empty()) continue;
    for (const Concept &x : c.concepts) c.mention.candidates.insert(x.id);
    pending.push_back(std::move(c));
  }

  std::vector<Concept> anchors;
  std::set<std::string> anchor_ids;
  for (const Candidates &c : pending) {
    if (c.concepts.size() == 1 && anchor_ids.insert(c.concepts[0].id).second) {
      anchors.push_back(c.concepts[0]);
    }
  }

  TieBreak tie_break(options.source_priority);
  std::vector<Resolution> out;
  out.reserve(pending.size());
  for (Candidates &c : pending) {
    Resolution r;
    if (c.concepts.size() == 1) {
      r.chosen = c.concepts[0];
      r.method = ResolutionMethod::kUnique;
    } else {
      r.method = anchors.empty() ? ResolutionMethod::kFallback
                                 : ResolutionMethod::kCluster;
      const Concept *best = nullptr;
      int best_score = std::numeric_limits<int>::max();
      for (const Concept &candidate : c.concepts) {
        int score = 0;
        for (const Concept &anchor : anchors) {
          score += ConceptDistance(candidate, anchor);
        }
        if (r.method == ResolutionMethod::kCluster) {
          r.candidate_scores[candidate.id] = score;
        }
        if (best == nullptr || score < best_score ||
            (score == best_score && tie_break.Before(candidate, *best))) {
          best = &candidate;
          best_score = score;
        }
      }
      r.chosen = *best;
      r.score = best_score;
    }
    r.mention = std::move(c.mention);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<Resolution> Resolve(const std::vector<Mention> &mentions,
                                const ConceptStore &store,
                                const ResolveOptions &options) {
  return Resolve(
      mentions, [&](const std::string &id) { return store.Find(id); }, options);
}

}  // namespace nnexus
