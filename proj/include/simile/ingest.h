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

#ifndef SIMILE_INGEST_H_
#define SIMILE_INGEST_H_

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace simile {

struct Document {
  std::string doc_id;
  // Path relative to the ingest root ('/' separated), or a URL.
  std::string source_locator;
  std::string text;
  // Milliseconds since the epoch.
  std::int64_t fetched_at = 0;
};

// 16 hex digits of FNV-1a 64 over the locator.
std::string DocIdFor(std::string_view locator);

// Every regular file under root, sorted by relative path. Unreadable files
// are logged and skipped; invalid UTF-8 is replaced and logged. Throws
// IoError if root is not a directory.
std::vector<Document> ReadLocal(const std::filesystem::path &root);

// Documents per first path component ("." for files directly under root),
// in name order.
std::vector<std::pair<std::string, std::int64_t>> CountBySubdirectory(
    const std::vector<Document> &documents);

// Two-column table with a Total row.
std::string FormatDocumentCounts(const std::vector<std::pair<std::string, std::int64_t>> &counts);

// Text of the element whose id attribute equals `element_id`, with markup
// stripped, script and style dropped, entities decoded and whitespace
// collapsed. Empty if the id does not occur. Unclosed tags are tolerated.
std::string ExtractContent(std::string_view html, std::string_view element_id);

// href values of <a> elements, in document order, entity-decoded.
std::vector<std::string> ExtractLinks(std::string_view html);

struct Url {
  std::string scheme;  // lowercase
  std::string host;    // lowercase
  int port = 0;        // explicit or the scheme default
  std::string path = "/";  // path plus query, no fragment

  // Absolute http(s) URLs only.
  static std::optional<Url> Parse(std::string_view text);
  // Resolves `ref` against this URL; nullopt for non-http(s) schemes.
  std::optional<Url> Resolve(std::string_view ref) const;
  std::string ToString() const;
  // scheme://host[:port]
  std::string Origin() const;
  bool operator==(const Url &) const = default;
};

// Host equals the domain or is a subdomain of it.
bool InDomain(const Url &url, std::string_view domain);

// Disallow/Allow rules for our user agent (or "*"); the longest matching
// rule wins and Allow wins ties.
class RobotsRules {
 public:
  static RobotsRules Parse(std::string_view robots_txt, std::string_view agent);
  bool Allowed(std::string_view path) const;

 private:
  std::vector<std::pair<std::string, bool>> rules_;  // prefix, allow
};

struct SourceConfig {
  std::string site_name;
  std::string allowed_domain;
  std::string content_selector;
  std::vector<std::string> start_urls;
  int max_pages = 100;
  int politeness_delay_ms = 1000;

  // Throws InvalidArgument when an invariant is broken.
  void Validate() const;
};

// JSON: one site object, a list of them, or {"sites": [...]}. Throws
// ParseError.
std::vector<SourceConfig> ParseSourceConfigs(std::string_view json_text);
std::vector<SourceConfig> LoadSourceConfigs(const std::filesystem::path &path);

struct FetchResponse {
  int status = 0;
  std::string body;
  std::string content_type;
};

class Fetcher {
 public:
  virtual ~Fetcher() = default;
  // nullopt on connection failure.
  virtual std::optional<FetchResponse> Get(const Url &url) = 0;
};

// Plain HTTP through cpp-httplib. https is reported as a failure.
class HttpFetcher : public Fetcher {
 public:
  explicit HttpFetcher(std::string user_agent = "simile-miner/0.1",
                       std::chrono::milliseconds timeout = std::chrono::seconds(10));
  std::optional<FetchResponse> Get(const Url &url) override;

 private:
  std::string user_agent_;
  std::chrono::milliseconds timeout_;
};

struct CrawlOptions {
  std::string user_agent = "simile-miner";
  // Called with the politeness delay before every request but the first.
  std::function<void(std::chrono::milliseconds)> sleep;
  std::function<std::int64_t()> clock;
};

struct CrawlResult {
  std::vector<Document> documents;
  // Every URL requested, robots.txt included, in order.
  std::vector<std::string> requested;
  std::vector<std::string> skipped_off_domain;
  std::vector<std::string> skipped_robots;
  std::vector<std::string> failed;
};

// Breadth-first crawl from the start URLs, following only in-domain links,
// never revisiting a URL, stopping after max_pages documents.
CrawlResult Crawl(const SourceConfig &config, Fetcher &fetcher, const CrawlOptions &options = {});

// Document cache: <doc_id>.txt per document plus manifest.tsv
// (doc_id, locator, fetched_at).
void WriteDocumentCache(const std::filesystem::path &dir, const std::vector<Document> &documents);
std::vector<Document> ReadDocumentCache(const std::filesystem::path &dir);
bool IsDocumentCache(const std::filesystem::path &dir);

}  // namespace simile

#endif  // SIMILE_INGEST_H_
