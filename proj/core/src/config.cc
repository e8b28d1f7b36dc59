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

#include "nnexus/config.h"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "nnexus/error.h"

namespace nnexus {

ServiceConfig ParseServiceConfig(std::string_view json_text) {
  ServiceConfig config;
  try {
    nlohmann::json j = nlohmann::json::parse(json_text);
    if (!j.is_object()) throw Error(ErrorCode::kParseError, "config must be a JSON object");
    if (j.contains("host")) config.host = j.at("host").get<std::string>();
    if (j.contains("port")) {
      config.port = j.at("port").get<int>();
      if (config.port < 0 || config.port > 65535) {
        throw Error(ErrorCode::kParseError, "port out of range");
      }
    }
    if (j.contains("corpus")) config.corpus_path = j.at("corpus").get<std::string>();
    if (j.contains("source_priority")) {
      config.source_priority =
          j.at("source_priority").get<std::vector<std::string>>();
    }
    if (j.contains("cache_capacity")) {
      config.cache_capacity = j.at("cache_capacity").get<size_t>();
    }
    if (j.contains("size_limit")) config.size_limit = j.at("size_limit").get<size_t>();
    if (j.contains("stopwords")) {
      config.stopwords_path = j.at("stopwords").get<std::string>();
    }
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::kParseError, std::string("config: ") + e.what());
  }
  return config;
}

ServiceConfig LoadServiceConfig(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open config " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseServiceConfig(buf.str());
}

std::optional<std::string> ConfigPath(const std::string &explicit_path) {
  if (!explicit_path.empty()) return explicit_path;
  const char *env = std::getenv("NNEXUS_CONFIG");
  if (env != nullptr && *env != '\0') return std::string(env);
  return std::nullopt;
}

}  // namespace nnexus
