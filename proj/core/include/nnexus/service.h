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

#ifndef NNEXUS_SERVICE_H_
#define NNEXUS_SERVICE_H_

#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "nnexus/config.h"
#include "nnexus/engine.h"

namespace nnexus {

struct HttpReply {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

using QueryParams = std::map<std::string, std::string>;

// POST /annotate. Query parameters: format (embed|standoff, default embed),
// policy (first|all, default first), sources (comma-separated allow-list),
// doc (optional cache key). Replies with the JSON wrapper
// {"status": "OK", "payload": ...} or {"status": "error", "message": ...}.
HttpReply HandleAnnotate(Engine &engine, std::string_view body,
                         const QueryParams &params, size_t size_limit);

// GET /status: {"concepts", "sources", "cache": {...}}.
HttpReply HandleStatus(const Engine &engine);

// JSON error wrapper used for every non-2xx reply.
std::string ErrorBody(std::string_view message);

// HTTP front end for an Engine. The engine must outlive the service.
class AnnotationService {
 public:
  AnnotationService(Engine &engine, ServiceConfig config);
  ~AnnotationService();

  AnnotationService(const AnnotationService &) = delete;
  AnnotationService &operator=(const AnnotationService &) = delete;

  // Binds to config.host:config.port; port 0 picks a free port. Returns the
  // bound port, or -1 on failure.
  int Bind();
  // Serves on the calling thread until Stop(). Requires Bind().
  bool Serve();
  // Bind() and serve on a background thread. Returns the port or -1.
  int Start();
  void Stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace nnexus

#endif  // NNEXUS_SERVICE_H_
