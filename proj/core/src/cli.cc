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

#include "nnexus/cli.h"

#include <atomic>
#include <chrono>
#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "nnexus/annotator.h"
#include "nnexus/concept_store.h"
#include "nnexus/config.h"
#include "nnexus/engine.h"
#include "nnexus/error.h"
#include "nnexus/harvester.h"
#include "nnexus/normalizer.h"
#include "nnexus/service.h"
#include "nnexus/url.h"

namespace nnexus {
namespace {

namespace fs = std::filesystem;

// Raised for problems with the input data rather than the command line.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

std::string FileUrl(const std::string &path) {
  std::error_code ec;
  fs::path abs = fs::absolute(path, ec);
  return "file://" + (ec ? path : abs.lexically_normal().string());
}

std::set<std::string> SplitList(const std::string &text) {
  std::set<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.insert(item);
  }
  return out;
}

// Settings shared by the commands that read a corpus.
struct CommonFlags {
  std::string corpus;
  std::string config;
};

ServiceConfig ResolveConfig(const CommonFlags &flags) {
  ServiceConfig config;
  if (auto path = ConfigPath(flags.config)) {
    if (!fs::exists(*path)) throw UsageError("config file not found: " + *path);
    try {
      config = LoadServiceConfig(*path);
    } catch (const Error &e) {
      throw DataError(e.what());
    }
  }
  if (!flags.corpus.empty()) config.corpus_path = flags.corpus;
  return config;
}

std::shared_ptr<const Normalizer> MakeNormalizer(const ServiceConfig &config) {
  if (config.stopwords_path.empty()) return DefaultNormalizer();
  try {
    return std::make_shared<const Normalizer>(
        Normalizer::FromStopwordFile(config.stopwords_path));
  } catch (const Error &e) {
    throw DataError(e.what());
  }
}

void RequireCorpus(const ServiceConfig &config) {
  if (config.corpus_path.empty()) throw UsageError("--corpus is required");
  if (!fs::is_regular_file(config.corpus_path)) {
    throw UsageError("corpus not found: " + config.corpus_path);
  }
}

void ReportCorpusWarnings(const std::vector<CorpusWarning> &warnings,
                          const std::string &path, std::ostream &err) {
  for (const CorpusWarning &w : warnings) {
    err << path << ":" << w.line << ": " << w.message << "\n";
  }
}

std::unique_ptr<Engine> LoadEngine(const ServiceConfig &config, std::ostream &err) {
  EngineOptions options;
  options.source_priority = config.source_priority;
  options.cache_capacity = config.cache_capacity;
  auto engine = std::make_unique<Engine>(MakeNormalizer(config), options);
  try {
    ReportCorpusWarnings(engine->LoadCorpus(config.corpus_path),
                         config.corpus_path, err);
  } catch (const Error &e) {
    throw DataError(e.what());
  }
  return engine;
}

// index --------------------------------------------------------------------

struct IndexFlags {
  std::string rules;
  std::string source;
  std::string corpus;
  std::string base_url;
  std::string document_url;
  std::vector<std::string> files;
};

IndexerRegistry MakeRegistry(const std::string &rules_path) {
  IndexerRegistry registry;
  std::set<std::string> seen;
  if (!rules_path.empty()) {
    if (!fs::is_regular_file(rules_path)) {
      throw UsageError("rules file not found: " + rules_path);
    }
    try {
      for (IndexerRule &rule : LoadIndexerRules(rules_path)) {
        seen.insert(rule.source);
        registry.Register(std::move(rule));
      }
    } catch (const Error &e) {
      throw DataError(e.what());
    }
  }
  for (IndexerRule rule : {PlanetMathRule(), DlmfRule()}) {
    if (!seen.count(rule.source)) registry.Register(std::move(rule));
  }
  return registry;
}

int RunIndex(const IndexFlags &flags, std::ostream &out, std::ostream &err) {
  IndexerRegistry registry = MakeRegistry(flags.rules);
  if (registry.Find(flags.source) == nullptr) {
    throw UsageError("no indexer rule for source '" + flags.source + "'");
  }
  if (flags.files.size() > 1 && !flags.document_url.empty()) {
    throw UsageError("--document-url needs exactly one input file");
  }
  ConceptStore store;
  if (fs::exists(flags.corpus)) {
    try {
      ReportCorpusWarnings(LoadCorpus(flags.corpus, &store), flags.corpus, err);
    } catch (const Error &e) {
      throw DataError(e.what());
    }
  }
  size_t added = 0, skipped = 0;
  for (const std::string &file : flags.files) {
    std::string url = flags.document_url;
    if (url.empty()) {
      url = flags.base_url.empty()
                ? FileUrl(file)
                : ResolveUrl(flags.base_url, fs::path(file).filename().string());
    }
    HarvestReport report;
    try {
      report = HarvestDocument(registry, flags.source, ReadFile(file), url, &store);
    } catch (const Error &e) {
      throw DataError(file + ": " + e.what());
    }
    for (const std::string &w : report.warnings) err << file << ": " << w << "\n";
    out << file << "\tadded " << report.added << "\tskipped " << report.skipped
        << "\n";
    added += report.added;
    skipped += report.skipped;
  }
  try {
    SaveCorpus(store, flags.corpus);
  } catch (const Error &e) {
    throw DataError(e.what());
  }
  out << "total\tadded " << added << "\tskipped " << skipped << "\n";
  return kExitOk;
}

// annotate -----------------------------------------------------------------

struct AnnotateFlags {
  CommonFlags common;
  std::string format = "embed";
  std::string policy = "first";
  std::string sources;
  std::string output_dir;
  std::vector<std::string> files;
};

int RunAnnotate(const AnnotateFlags &flags, std::istream &in, std::ostream &out,
                std::ostream &err) {
  std::optional<OutputFormat> format = ParseOutputFormat(flags.format);
  if (!format) throw UsageError("invalid --format: " + flags.format);
  std::optional<LinkPolicy> policy = ParseLinkPolicy(flags.policy);
  if (!policy) throw UsageError("invalid --policy: " + flags.policy);
  ServiceConfig config = ResolveConfig(flags.common);
  RequireCorpus(config);
  if (!flags.output_dir.empty() && flags.files.empty()) {
    throw UsageError("--output-dir needs input files");
  }
  std::unique_ptr<Engine> engine = LoadEngine(config, err);

  AnnotateOptions options;
  options.policy = *policy;
  if (!flags.sources.empty()) options.sources = SplitList(flags.sources);

  auto render = [&](std::string_view html) {
    CachedResult result = engine->AnnotateFresh(html, options);
    return *format == OutputFormat::kEmbed
               ? result.html
               : AnnotationsToJson(result.annotations) + "\n";
  };

  if (flags.files.empty()) {
    std::string html(std::istreambuf_iterator<char>(in), {});
    out << render(html);
    return kExitOk;
  }
  if (!flags.output_dir.empty()) {
    std::error_code ec;
    fs::create_directories(flags.output_dir, ec);
    if (ec) throw DataError("cannot create " + flags.output_dir);
  }
  for (const std::string &file : flags.files) {
    std::string rendered = render(ReadFile(file));
    if (flags.output_dir.empty()) {
      out << rendered;
      continue;
    }
    fs::path target = fs::path(flags.output_dir) / fs::path(file).filename();
    if (*format == OutputFormat::kStandoff) target += ".json";
    std::ofstream file_out(target, std::ios::binary);
    file_out << rendered;
    if (!file_out) throw DataError("cannot write " + target.string());
  }
  return kExitOk;
}

// serve --------------------------------------------------------------------

struct ServeFlags {
  CommonFlags common;
  std::optional<int> port;
  std::string host;
};

std::atomic<bool> g_stop_requested{false};

extern "C" void HandleStopSignal(int) { g_stop_requested = true; }

int RunServe(const ServeFlags &flags, std::ostream &out, std::ostream &err) {
  ServiceConfig config = ResolveConfig(flags.common);
  if (flags.port) config.port = *flags.port;
  if (!flags.host.empty()) config.host = flags.host;
  RequireCorpus(config);
  std::unique_ptr<Engine> engine = LoadEngine(config, err);

  AnnotationService service(*engine, config);
  int port = service.Bind();
  if (port < 0) {
    err << "cannot bind " << config.host << ":" << config.port << "\n";
    return kExitData;
  }
  out << "listening on " << config.host << ":" << port << std::endl;

  g_stop_requested = false;
  auto previous_int = std::signal(SIGINT, HandleStopSignal);
  auto previous_term = std::signal(SIGTERM, HandleStopSignal);
  std::atomic<bool> done{false};
  std::thread watcher([&] {
    while (!done) {
      if (g_stop_requested) {
        service.Stop();
        return;
      }
      std::this_thread::sleep_for(std::chrono::milliseconds(100));
    }
  });
  service.Serve();
  done = true;
  watcher.join();
  std::signal(SIGINT, previous_int);
  std::signal(SIGTERM, previous_term);
  return kExitOk;
}

// stats --------------------------------------------------------------------

struct StatsFlags {
  CommonFlags common;
  bool validate = false;
};

int RunStats(const StatsFlags &flags, std::ostream &out, std::ostream &err) {
  ServiceConfig config = ResolveConfig(flags.common);
  RequireCorpus(config);
  ConceptStore store(MakeNormalizer(config));
  try {
    ReportCorpusWarnings(LoadCorpus(config.corpus_path, &store),
                         config.corpus_path, err);
  } catch (const Error &e) {
    throw DataError(e.what());
  }
  for (const auto &[source, count] : store.CountBySource()) {
    out << source << "\t" << count << "\n";
  }
  out << "total\t" << store.size() << "\n";
  if (flags.validate) {
    for (const ValidationWarning &w : ValidateCorpus(store)) {
      err << "warning: " << w.message << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string> &args, std::istream &in,
           std::ostream &out, std::ostream &err) {
  CLI::App app{"Concept indexing, discovery and link annotation", "nnexus"};
  app.require_subcommand(1);

  IndexFlags index_flags;
  CLI::App *index = app.add_subcommand("index", "Harvest concepts from pages");
  index->add_option("--rules", index_flags.rules, "Indexer rule file");
  index->add_option("--source", index_flags.source, "Source id")->required();
  index->add_option("--corpus", index_flags.corpus, "Corpus file (JSON lines)")
      ->required();
  index->add_option("--base-url", index_flags.base_url,
                    "URL that file names are resolved against");
  index->add_option("--document-url", index_flags.document_url,
                    "URL of the single input page");
  index->add_option("files", index_flags.files, "HTML pages")->required();

  AnnotateFlags annotate_flags;
  CLI::App *annotate = app.add_subcommand("annotate", "Link concepts in HTML");
  annotate->add_option("--corpus", annotate_flags.common.corpus, "Corpus file");
  annotate->add_option("--config", annotate_flags.common.config, "Config file");
  annotate->add_option("--format", annotate_flags.format, "embed or standoff");
  annotate->add_option("--policy", annotate_flags.policy, "first or all");
  annotate->add_option("--sources", annotate_flags.sources,
                       "Comma-separated source allow-list");
  annotate->add_option("--output-dir", annotate_flags.output_dir,
                       "Write one result per input file here");
  annotate->add_option("files", annotate_flags.files, "HTML files (stdin if none)");

  ServeFlags serve_flags;
  CLI::App *serve = app.add_subcommand("serve", "Run the HTTP service");
  serve->add_option("--corpus", serve_flags.common.corpus, "Corpus file");
  serve->add_option("--config", serve_flags.common.config, "Config file");
  serve->add_option("--port", serve_flags.port, "TCP port (0 picks one)");
  serve->add_option("--host", serve_flags.host, "Bind address");

  StatsFlags stats_flags;
  CLI::App *stats = app.add_subcommand("stats", "Count concepts per source");
  stats->add_option("--corpus", stats_flags.common.corpus, "Corpus file");
  stats->add_option("--config", stats_flags.common.config, "Config file");
  stats->add_flag("--validate", stats_flags.validate,
                  "Report duplicate labels and synonym collisions");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "nnexus: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (index->parsed()) return RunIndex(index_flags, out, err);
    if (annotate->parsed()) return RunAnnotate(annotate_flags, in, out, err);
    if (serve->parsed()) return RunServe(serve_flags, out, err);
    if (stats->parsed()) return RunStats(stats_flags, out, err);
  } catch (const UsageError &e) {
    err << "nnexus: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DataError &e) {
    err << "nnexus: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception &e) {
    err << "nnexus: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace nnexus
