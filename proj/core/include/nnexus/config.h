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

#ifndef NNEXUS_CONFIG_H_
#define NNEXUS_CONFIG_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nnexus/disambiguator.h"
#include "nnexus/link_cache.h"

namespace nnexus {

inline constexpr size_t kDefaultRequestSizeLimit = 2 * 1024 * 1024;

// Service/CLI configuration, read from a JSON object with the optional keys
// "host", "port", "corpus", "source_priority", "cache_capacity",
// "size_limit" and "stopwords".
struct ServiceConfig {
  std::string host = "127.0.0.1";
  int port = 3001;
  std::string corpus_path;
  std::vector<std::string> source_priority = DefaultSourcePriority();
  size_t cache_capacity = LinkCache::kDefaultCapacity;
  size_t size_limit = kDefaultRequestSizeLimit;
  std::string stopwords_path;  // empty: shipped list
};

// Throws Error(kParseError) on malformed JSON or ill-typed values.
ServiceConfig ParseServiceConfig(std::string_view json_text);
// Throws Error(kIoError) / Error(kParseError).
ServiceConfig LoadServiceConfig(const std::string &path);

// The explicit path if given, else $NNEXUS_CONFIG if set, else nullopt.
std::optional<std::string> ConfigPath(const std::string &explicit_path);

}  // namespace nnexus

#endif  // NNEXUS_CONFIG_H_
