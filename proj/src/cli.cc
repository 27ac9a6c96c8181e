// Copyright 2026 The Simile Miner Authors.
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

#include "simile/cli.h"

#include <csignal>
#include <iostream>
#include <optional>
#include <thread>

#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "simile/errors.h"
#include "simile/evaluation.h"
#include "simile/ingest.h"
#include "simile/io.h"
#include "simile/pipeline.h"
#include "simile/service.h"
#include "simile/store.h"
#include "simile/tagger.h"
#include "simile/text.h"

namespace simile {
namespace {

namespace fs = std::filesystem;

CurationServer *g_server = nullptr;

void HandleSignal(int) {
  if (g_server) g_server->Stop();
}

std::vector<Document> LoadInput(const fs::path &input, const std::string &user_agent) {
  if (fs::is_regular_file(input) && input.extension() == ".json") {
    std::vector<Document> docs;
    HttpFetcher fetcher(user_agent);
    CrawlOptions opts;
    opts.user_agent = user_agent;
    for (const SourceConfig &site : LoadSourceConfigs(input)) {
      auto result = Crawl(site, fetcher, opts);
      for (auto &d : result.documents) docs.push_back(std::move(d));
    }
    return docs;
  }
  if (!fs::is_directory(input)) throw IoError("input is neither a directory nor a .json source config: " + input.string());
  if (IsDocumentCache(input)) return ReadDocumentCache(input);
  return ReadLocal(input);
}

std::vector<std::string> NonEmptyLines(const fs::path &path) {
  std::vector<std::string> out;
  for (std::string &line : SplitLines(ReadFile(path))) {
    if (!Trim(line).empty()) out.push_back(std::move(line));
  }
  return out;
}

void RequireFile(const fs::path &path, const char *what) {
  if (!fs::is_regular_file(path)) throw IoError(std::string(what) + " not found: " + path.string());
}

std::unique_ptr<CorpusStore> OpenStore(const fs::path &path, double threshold) {
  StoreOptions opts;
  opts.duplicate_threshold = threshold;
  return CorpusStore::Open(path, opts);
}

std::string FormatStats(const CorpusStats &s) {
  std::string out = "status     mined  manual  seed   total\n";
  const auto cell = [](std::int64_t n, std::size_t width) {
    std::string v = std::to_string(n);
    return v + std::string(v.size() < width ? width - v.size() : 1, ' ');
  };
  for (Status st : kAllStatuses) {
    std::string row(StatusName(st));
    row.resize(11, ' ');
    for (Origin o : kAllOrigins) row += cell(s.Count(st, o), o == Origin::kManual ? 8 : 7);
    out += row + std::to_string(s.ByStatus(st)) + "\n";
  }
  std::string row = "total";
  row.resize(11, ' ');
  for (Origin o : kAllOrigins) row += cell(s.ByOrigin(o), o == Origin::kManual ? 8 : 7);
  out += row + std::to_string(s.total) + "\n";
  out += "seed/mined overlap: " + std::to_string(s.seed_mined_overlap) + "\n";
  return out;
}

}  // namespace

int RunCli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Mine, classify and curate Serbian similes."};
  app.require_subcommand(1);
  app.set_version_flag("--version", "simile 0.1.0");
  bool verbose = false;
  bool quiet = false;
  app.add_flag("-v,--verbose", verbose, "Debug logging");
  app.add_flag("-q,--quiet", quiet, "Only log errors");

  // crawl
  auto *crawl = app.add_subcommand("crawl", "Fetch documents from configured sites into a document cache");
  fs::path crawl_config, crawl_out;
  std::string crawl_site, user_agent = "simile-miner/0.1";
  crawl->add_option("--config", crawl_config, "Source config JSON")->required();
  crawl->add_option("--out", crawl_out, "Cache directory to write")->required();
  crawl->add_option("--site", crawl_site, "Only crawl the site with this name");
  crawl->add_option("--user-agent", user_agent, "User-Agent header and robots.txt agent")->capture_default_str();

  // extract
  auto *extract = app.add_subcommand("extract", "Tag documents and write simile candidates");
  fs::path extract_input, extract_tagger, extract_out;
  int jobs = 1;
  std::size_t max_adjectives = 3;
  bool no_reflexive = false, no_transliterate = false;
  extract->add_option("--input", extract_input, "Directory of text files, document cache, or .json source config")->required();
  extract->add_option("--tagger", extract_tagger, "Tagger model file")->required();
  extract->add_option("--out", extract_out, "Candidate file to write")->required();
  extract->add_option("--jobs", jobs, "Worker threads (0 = one per core)")->capture_default_str()->check(CLI::Range(0, 64));
  extract->add_option("--max-adjectives", max_adjectives, "Adjectives allowed before the noun")->capture_default_str();
  extract->add_flag("--no-reflexive", no_reflexive, "Do not skip 'se' between verb and connector");
  extract->add_flag("--no-transliterate", no_transliterate, "Do not map Cyrillic to Latin before matching");
  extract->add_option("--user-agent", user_agent, "User-Agent when crawling a source config");

  // classify
  auto *classify = app.add_subcommand("classify", "Classify candidates and load them into the store");
  fs::path cls_candidates, cls_model, store_path;
  double threshold = kDefaultDuplicateThreshold;
  classify->add_option("--candidates", cls_candidates, "Candidate file")->required();
  classify->add_option("--model", cls_model, "Classifier model file")->required();
  classify->add_option("--store", store_path, "Store file (created if absent)")->required();
  classify->add_option("--dedup-threshold", threshold, "Similarity for duplicate warnings")->capture_default_str()->check(CLI::Range(0.0, 1.0));

  // eval
  auto *eval = app.add_subcommand("eval", "Cross-validate learners and print a metrics table");
  fs::path eval_data;
  std::vector<std::string> learners = {"nb", "linear"};
  int folds = 10;
  std::uint64_t seed = 1;
  std::string features = "all";
  double alpha = 1.0;
  LinearHyperparams hyper;
  eval->add_option("--data", eval_data, "Labeled file (label<TAB>phrase)")->required();
  eval->add_option("--learner", learners, "nb, linear or always-positive; repeatable")->capture_default_str();
  eval->add_option("--folds", folds, "Number of folds")->capture_default_str();
  eval->add_option("--seed", seed, "Fold assignment seed")->capture_default_str();
  eval->add_option("--features", features, "Feature namespaces, comma separated, or 'all'")->capture_default_str();
  eval->add_option("--alpha", alpha, "Naive Bayes smoothing")->capture_default_str();
  eval->add_option("--epochs", hyper.epochs, "Linear learner epochs")->capture_default_str();

  // train-tagger
  auto *train_tagger = app.add_subcommand("train-tagger", "Train the tagger on a tagged corpus");
  fs::path tt_corpus, tt_out, tt_coarse;
  train_tagger->add_option("--corpus", tt_corpus, "Tagged corpus (word<TAB>tag, blank line between sentences)")->required();
  train_tagger->add_option("--out", tt_out, "Model file to write")->required();
  train_tagger->add_option("--coarse-map", tt_coarse, "Fine-to-coarse tag overrides");

  // train-classifier
  auto *train_cls = app.add_subcommand("train-classifier", "Train a classifier on labeled phrases");
  fs::path tc_data, tc_out;
  std::string tc_learner = "nb";
  train_cls->add_option("--data", tc_data, "Labeled file")->required();
  train_cls->add_option("--out", tc_out, "Model file to write")->required();
  train_cls->add_option("--learner", tc_learner, "nb, linear or always-positive")->capture_default_str();
  train_cls->add_option("--features", features, "Feature namespaces")->capture_default_str();
  train_cls->add_option("--alpha", alpha, "Naive Bayes smoothing")->capture_default_str();
  train_cls->add_option("--epochs", hyper.epochs, "Linear learner epochs")->capture_default_str();
  train_cls->add_option("--seed", hyper.seed, "Linear learner seed")->capture_default_str();

  // import-seed
  auto *import_seed = app.add_subcommand("import-seed", "Import and approve a list of known similes");
  fs::path seed_file;
  std::string seed_source;
  import_seed->add_option("--file", seed_file, "One simile per line")->required();
  import_seed->add_option("--store", store_path, "Store file")->required();
  import_seed->add_option("--source", seed_source, "Provenance label (default: file name)");

  // stats
  auto *stats = app.add_subcommand("stats", "Print store counts");
  bool stats_json = false;
  fs::path stats_documents;
  stats->add_option("--store", store_path, "Store file")->required();
  stats->add_flag("--json", stats_json, "Machine-readable output");
  stats->add_option("--documents", stats_documents, "Also count documents per site under this directory");

  // export
  auto *export_cmd = app.add_subcommand("export", "Export approved entries");
  std::string format = "text";
  fs::path export_out;
  export_cmd->add_option("--store", store_path, "Store file")->required();
  export_cmd->add_option("--format", format, "text or jsonl")->check(CLI::IsMember({"text", "jsonl"}))->capture_default_str();
  export_cmd->add_option("--out", export_out, "Output file (default: stdout)");

  // serve
  auto *serve = app.add_subcommand("serve", "Run the curation HTTP service");
  std::optional<fs::path> serve_config;
  std::optional<std::string> serve_bind, serve_credential;
  std::optional<int> serve_port;
  serve->add_option("--config", serve_config, "Service config JSON");
  serve->add_option("--store", store_path, "Store file (overrides config and environment)");
  serve->add_option("--bind", serve_bind, "Bind address");
  serve->add_option("--port", serve_port, "Port (0 picks a free one)");
  serve->add_option("--credential", serve_credential, "Curator credential");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion &) {
    out << "simile 0.1.0\n";
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "simile: " << e.what() << "\n";
    if (!app.get_subcommands().empty()) err << "run with --help for usage\n";
    return kExitUsage;
  }

  auto logger = spdlog::get("simile");
  if (!logger) logger = spdlog::stderr_logger_mt("simile");
  spdlog::set_default_logger(logger);
  spdlog::set_level(verbose ? spdlog::level::debug : quiet ? spdlog::level::err : spdlog::level::info);

  try {
    if (*crawl) {
      auto sites = LoadSourceConfigs(crawl_config);
      if (!crawl_site.empty()) {
        std::erase_if(sites, [&](const SourceConfig &s) { return s.site_name != crawl_site; });
        if (sites.empty()) throw InvalidArgument("no site named '" + crawl_site + "'");
      }
      HttpFetcher fetcher(user_agent);
      CrawlOptions opts;
      opts.user_agent = user_agent;
      std::vector<Document> docs;
      for (const auto &site : sites) {
        auto r = Crawl(site, fetcher, opts);
        out << site.site_name << ": " << r.documents.size() << " documents, " << r.requested.size()
            << " requests, " << r.skipped_off_domain.size() << " off-domain, "
            << r.skipped_robots.size() << " disallowed, " << r.failed.size() << " failed\n";
        for (auto &d : r.documents) docs.push_back(std::move(d));
      }
      WriteDocumentCache(crawl_out, docs);
    } else if (*extract) {
      RequireFile(extract_tagger, "tagger model");
      const TaggerModel tagger = TaggerModel::Load(extract_tagger);
      ExtractOptions opts;
      opts.jobs = jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : jobs;
      opts.matcher.max_adjectives = max_adjectives;
      opts.matcher.allow_reflexive_se = !no_reflexive;
      opts.matcher.transliterate = !no_transliterate;
      PipelineRun run;
      const auto docs = LoadInput(extract_input, user_agent);
      const auto candidates = ExtractFromDocuments(docs, tagger, opts, &run);
      WriteFileAtomic(extract_out, FormatCandidates(candidates));
      out << "extracted " << run.candidates << " candidates from " << run.sentences
          << " sentences in " << run.documents << " documents\n";
    } else if (*classify) {
      RequireFile(cls_candidates, "candidate file");
      RequireFile(cls_model, "classifier model");
      const auto candidates = ParseCandidates(ReadFile(cls_candidates));
      const auto model = LoadClassifier(cls_model);
      auto store = OpenStore(store_path, threshold);
      const PipelineRun run = ClassifyIntoStore(candidates, *model, *store);
      out << run.Summary();
    } else if (*eval) {
      RequireFile(eval_data, "labeled data");
      const auto data = ParseLabeledData(ReadFile(eval_data));
      const auto examples = FeaturizeLabeled(data, FeatureMask::Parse(features));
      std::size_t positives = 0;
      for (const auto &e : examples) positives += e.label == Label::kSimile;
      if (positives == 0 || positives == examples.size()) {
        throw InvalidArgument("labeled data must contain both classes");
      }
      std::vector<Label> labels;
      for (const auto &e : examples) labels.push_back(e.label);
      const auto fold_ids = StratifiedFolds(labels, folds, seed);
      std::vector<std::pair<std::string, EvalMetrics>> rows;
      for (const std::string &name : learners) {
        const auto learner = MakeLearner(name, alpha, hyper);
        rows.emplace_back(learner->name(), CrossValidate(examples, *learner, fold_ids));
      }
      out << FormatMetricsTable(rows);
    } else if (*train_tagger) {
      RequireFile(tt_corpus, "tagged corpus");
      CoarseMap coarse = tt_coarse.empty() ? CoarseMap() : CoarseMap::Load(tt_coarse);
      const auto corpus = ParseTaggedCorpus(ReadFile(tt_corpus));
      TaggerModel::Train(corpus, coarse).Save(tt_out);
      out << "trained tagger on " << corpus.size() << " sentences\n";
    } else if (*train_cls) {
      RequireFile(tc_data, "labeled data");
      const auto data = ParseLabeledData(ReadFile(tc_data));
      const auto examples = FeaturizeLabeled(data, FeatureMask::Parse(features));
      const auto model = MakeLearner(tc_learner, alpha, hyper)->Train(examples);
      model->Save(tc_out);
      out << "trained " << model->name() << " on " << examples.size() << " examples\n";
    } else if (*import_seed) {
      RequireFile(seed_file, "seed file");
      auto store = OpenStore(store_path, threshold);
      const auto report = store->ImportSeed(NonEmptyLines(seed_file),
                                            seed_source.empty() ? seed_file.filename().string() : seed_source);
      out << "added " << report.added << ", skipped " << report.skipped << ", overlap with mined "
          << report.overlap << "\n";
    } else if (*stats) {
      RequireFile(store_path, "store");
      auto store = OpenStore(store_path, threshold);
      const CorpusStats s = store->Stats();
      if (stats_json) {
        nlohmann::json j = {{"total", s.total}, {"seed_mined_overlap", s.seed_mined_overlap}};
        for (Status st : kAllStatuses) {
          for (Origin o : kAllOrigins) {
            j["counts"][std::string(StatusName(st))][std::string(OriginName(o))] = s.Count(st, o);
          }
        }
        out << j.dump(2) << "\n";
      } else {
        out << FormatStats(s);
      }
      if (!stats_documents.empty()) {
        out << "\n" << FormatDocumentCounts(CountBySubdirectory(ReadLocal(stats_documents)));
      }
    } else if (*export_cmd) {
      RequireFile(store_path, "store");
      auto store = OpenStore(store_path, threshold);
      const std::string text = format == "jsonl" ? store->ExportJsonl() : store->ExportText();
      if (export_out.empty()) out << text;
      else WriteFileAtomic(export_out, text);
    } else if (*serve) {
      ServiceConfig config = LoadServiceConfig(serve_config);
      if (!store_path.empty()) config.store_path = store_path.string();
      if (serve_bind) config.bind = *serve_bind;
      if (serve_port) config.port = *serve_port;
      if (serve_credential) config.curator_credential = *serve_credential;
      config.Validate();
      if (config.curator_credential.empty()) spdlog::warn("no curator credential set; login is disabled");
      auto store = OpenStore(config.store_path, config.dedup_threshold);
      CurationServer server(*store, config);
      const int port = server.Bind();
      out << "listening on http://" << config.bind << ":" << port << std::endl;
      g_server = &server;
      std::signal(SIGINT, HandleSignal);
      std::signal(SIGTERM, HandleSignal);
      server.Listen();
      g_server = nullptr;
    }
  } catch (const ParseError &e) {
    err << "simile: " << e.what() << "\n";
    return kExitInput;
  } catch (const IoError &e) {
    err << "simile: " << e.what() << "\n";
    return kExitInput;
  } catch (const InvalidArgument &e) {
    err << "simile: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception &e) {
    err << "simile: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitOk;
}

}  // namespace simile
