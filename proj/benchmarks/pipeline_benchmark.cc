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

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "nnexus/concept_index.h"
#include "nnexus/concept_store.h"
#include "nnexus/discovery.h"
#include "nnexus/engine.h"

namespace nnexus {
namespace {

std::string DataPath(const std::string &name) {
  return std::string(NNEXUS_BENCH_DATA_DIR) + "/" + name;
}

std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::fprintf(stderr, "cannot read %s\n", path.c_str());
    std::abort();
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

const std::vector<std::string> &Documents() {
  static const auto *docs = [] {
    auto *v = new std::vector<std::string>;
    for (int i = 0; i < 50; ++i) {
      char name[32];
      std::snprintf(name, sizeof(name), "docs/doc_%02d.html", i);
      v->push_back(ReadFile(DataPath(name)));
    }
    return v;
  }();
  return *docs;
}

size_t TotalBytes(const std::vector<std::string> &docs) {
  size_t n = 0;
  for (const auto &d : docs) n += d.size();
  return n;
}

void BM_IndexBuild(benchmark::State &state) {
  ConceptStore store;
  LoadCorpus(DataPath("docs_corpus.jsonl"), &store);
  for (auto _ : state) {
    ConceptIndex index = ConceptIndex::Build(store);
    benchmark::DoNotOptimize(index.size());
  }
  state.SetItemsProcessed(state.iterations() * store.size());
}
BENCHMARK(BM_IndexBuild);

void BM_Discover(benchmark::State &state) {
  ConceptStore store;
  LoadCorpus(DataPath("docs_corpus.jsonl"), &store);
  ConceptIndex index = ConceptIndex::Build(store);
  const auto &docs = Documents();
  for (auto _ : state) {
    for (const auto &doc : docs) {
      benchmark::DoNotOptimize(Discover(index, doc));
    }
  }
  state.SetBytesProcessed(state.iterations() * TotalBytes(docs));
}
BENCHMARK(BM_Discover);

void BM_AnnotateFresh(benchmark::State &state) {
  Engine engine;
  engine.LoadCorpus(DataPath("docs_corpus.jsonl"));
  const auto &docs = Documents();
  for (auto _ : state) {
    for (const auto &doc : docs) {
      benchmark::DoNotOptimize(engine.AnnotateFresh(doc));
    }
  }
  state.SetBytesProcessed(state.iterations() * TotalBytes(docs));
}
BENCHMARK(BM_AnnotateFresh);

void BM_AnnotateCached(benchmark::State &state) {
  Engine engine;
  engine.LoadCorpus(DataPath("docs_corpus.jsonl"));
  const auto &docs = Documents();
  for (const auto &doc : docs) engine.Annotate(doc);
  for (auto _ : state) {
    for (const auto &doc : docs) {
      benchmark::DoNotOptimize(engine.Annotate(doc));
    }
  }
  state.SetBytesProcessed(state.iterations() * TotalBytes(docs));
}
BENCHMARK(BM_AnnotateCached);

}  // namespace
}  // namespace nnexus

BENCHMARK_MAIN();
