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

#include "nnexus/service.h"

#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "nnexus/error.h"

namespace nnexus {

namespace {

using Json = nlohmann::ordered_json;

std::set<std::string> SplitSources(std::string_view text) {
  std::set<std::string> out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(pos, comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) out.emplace(item);
    pos = comma + 1;
  }
  return out;
}

HttpReply Fail(int status, std::string_view message) {
  return HttpReply{status, ErrorBody(message)};
}

}  // namespace

std::string ErrorBody(std::string_view message) {
  Json j;
  j["status"] = "error";
  j["message"] = std::string(message);
  return j.dump(-1, ' ', false, Json::error_handler_t::replace);
}

HttpReply HandleAnnotate(Engine &engine, std::string_view body,
                         const QueryParams &params, size_t size_limit) {
  if (body.size() > size_limit) {
    return Fail(413, "request body exceeds " + std::to_string(size_limit) + " bytes");
  }
  OutputFormat format = OutputFormat::kEmbed;
  AnnotateOptions options;
  if (auto it = params.find("format"); it != params.end()) {
    auto parsed = ParseOutputFormat(it->second);
    if (!parsed) return Fail(400, "invalid format '" + it->second + "'");
    format = *parsed;
  }
  if (auto it = params.find("policy"); it != params.end()) {
    auto parsed = ParseLinkPolicy(it->second);
    if (!parsed) return Fail(400, "invalid policy '" + it->second + "'");
    options.policy = *parsed;
  }
  if (auto it = params.find("sources"); it != params.end()) {
    std::set<std::string> sources = SplitSources(it->second);
    if (!sources.empty()) options.sources = std::move(sources);
  }
  if (auto it = params.find("doc"); it != params.end()) options.doc_id = it->second;

  try {
    CachedResult result = engine.Annotate(body, options);
    Json j;
    j["status"] = "OK";
    if (format == OutputFormat::kEmbed) {
      j["payload"] = std::move(result.html);
    } else {
      j["payload"] = Json::parse(AnnotationsToJson(result.annotations));
    }
    return HttpReply{200, j.dump(-1, ' ', false, Json::error_handler_t::replace)};
  } catch (const std::exception &e) {
    return Fail(500, e.what());
  }
}

HttpReply HandleStatus(const Engine &engine) {
  EngineStatus status = engine.Status();
  Json j;
  j["concepts"] = status.concepts;
  j["sources"] = status.sources;
  j["cache"] = Json{{"entries", status.cache.entries},
                    {"hits", status.cache.hits},
                    {"misses", status.cache.misses},
                    {"expirations", status.cache.expirations},
                    {"evictions", status.cache.evictions}};
  return HttpReply{200, j.dump()};
}

struct AnnotationService::Impl {
  Impl(Engine &e, ServiceConfig c) : engine(e), config(std::move(c)) {}

  Engine &engine;
  ServiceConfig config;
  httplib::Server server;
  std::thread thread;
  int port = -1;
};

AnnotationService::AnnotationService(Engine &engine, ServiceConfig config)
    : impl_(std::make_unique<Impl>(engine, std::move(config))) {
  httplib::Server &server = impl_->server;
  Impl *impl = impl_.get();
  // Let oversized bodies reach the handler's own 413 check; anything much
  // larger is refused by httplib (also 413).
  server.set_payload_max_length(impl->config.size_limit + 1);

  server.Post("/annotate", [impl](const httplib::Request &req,
                                  httplib::Response &res) {
    QueryParams params;
    for (const auto &[key, value] : req.params) params.emplace(key, value);
    HttpReply reply =
        HandleAnnotate(impl->engine, req.body, params, impl->config.size_limit);
    res.status = reply.status;
    res.set_content(reply.body, reply.content_type);
  });
  server.Get("/status", [impl](const httplib::Request &, httplib::Response &res) {
    HttpReply reply = HandleStatus(impl->engine);
    res.status = reply.status;
    res.set_content(reply.body, reply.content_type);
  });
  server.set_error_handler([](const httplib::Request &, httplib::Response &res) {
    if (!res.body.empty()) return;
    res.set_content(ErrorBody(httplib::status_message(res.status)),
                    "application/json");
  });
  server.set_exception_handler([](const httplib::Request &, httplib::Response &res,
                                  std::exception_ptr ep) {
    std::string message = "internal error";
    try {
      if (ep) std::rethrow_exception(ep);
    } catch (const std::exception &e) {
      message = e.what();
    } catch (...) {
    }
    res.status = 500;
    res.set_content(ErrorBody(message), "application/json");
  });
}

AnnotationService::~AnnotationService() {
  Stop();
  if (impl_->thread.joinable()) impl_->thread.join();
}

int AnnotationService::Bind() {
  httplib::Server &server = impl_->server;
  if (impl_->config.port == 0) {
    impl_->port = server.bind_to_any_port(impl_->config.host);
  } else {
    impl_->port = server.bind_to_port(impl_->config.host, impl_->config.port)
                      ? impl_->config.port
                      : -1;
  }
  return impl_->port;
}

bool AnnotationService::Serve() {
  if (impl_->port < 0) return false;
  return impl_->server.listen_after_bind();
}

int AnnotationService::Start() {
  if (Bind() < 0) return -1;
  impl_->thread = std::thread([this] { Serve(); });
  impl_->server.wait_until_ready();
  return impl_->port;
}

void AnnotationService::Stop() { impl_->server.stop(); }

}  // namespace nnexus
