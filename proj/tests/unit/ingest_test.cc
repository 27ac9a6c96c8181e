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

#include <filesystem>
#include <fstream>
#include <map>
#include <string>

#include "doctest.h"
#include "simile/errors.h"
#include "simile/ingest.h"
#include "simile/io.h"
#include "simile/text.h"

namespace simile {
namespace {

const std::filesystem::path kFixtures = SIMILE_FIXTURE_DIR;

std::filesystem::path FreshDir(const std::string &name) {
  const auto dir = std::filesystem::temp_directory_path() / ("simile_ingest_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

// Serves a fixed map of URL -> body; everything else is a 404.
class FakeFetcher : public Fetcher {
 public:
  std::map<std::string, std::string> pages;
  std::vector<std::string> hits;

  std::optional<FetchResponse> Get(const Url &url) override {
    hits.push_back(url.ToString());
    const auto it = pages.find(url.ToString());
    if (it == pages.end()) return FetchResponse{404, "", "text/plain"};
    return FetchResponse{200, it->second, "text/html"};
  }
};

std::string Page(const std::string &content, const std::vector<std::string> &links) {
  std::string html = "<html><body><div id=\"nav\">";
  for (const auto &l : links) html += "<a href=\"" + l + "\">x</a> ";
  return html + "</div><div id=\"c\">" + content + "</div></body></html>";
}

}  // namespace

TEST_CASE("read_local counts documents per site") {
  const auto docs = ReadLocal(kFixtures / "corpus");
  std::map<std::string, std::int64_t> expected;
  std::int64_t total = 0;
  for (const std::string &line : SplitLines(ReadFile(kFixtures / "corpus_counts.txt"))) {
    if (line.empty()) continue;
    const auto f = SplitTabs(line);
    if (f[0] == "Total") total = std::stoll(f[1]);
    else expected[f[0]] = std::stoll(f[1]);
  }
  CHECK(static_cast<std::int64_t>(docs.size()) == total);
  const auto counts = CountBySubdirectory(docs);
  CHECK(std::map<std::string, std::int64_t>(counts.begin(), counts.end()) == expected);

  const std::string table = FormatDocumentCounts(counts);
  CHECK(table.find("Total") != std::string::npos);
  CHECK(table.rfind("15\n") == table.size() - 3);

  // Sorted by relative path; ids are stable functions of the locator.
  for (std::size_t i = 1; i < docs.size(); ++i) {
    CHECK(docs[i - 1].source_locator < docs[i].source_locator);
  }
  for (const auto &d : docs) {
    CHECK(d.doc_id == DocIdFor(d.source_locator));
    CHECK(d.doc_id.size() == 16);
    CHECK_FALSE(d.text.empty());
  }
}

TEST_CASE("read_local edge cases") {
  const auto dir = FreshDir("local");
  CHECK(ReadLocal(dir).empty());
  CHECK_THROWS_AS(ReadLocal(dir / "missing"), IoError);

  std::filesystem::create_directories(dir / "a");
  WriteFileAtomic(dir / "a" / "bad.txt", std::string("Radi ko konj\xff\xfe."));
  const auto docs = ReadLocal(dir);
  REQUIRE(docs.size() == 1);
  CHECK(docs[0].source_locator == "a/bad.txt");
  CHECK(IsValidUtf8(docs[0].text));
  CHECK(docs[0].text.rfind("Radi ko konj", 0) == 0);
}

TEST_CASE("extract_content keeps only the article element") {
  const std::string html = ReadFile(kFixtures / "article.html");
  CHECK(ExtractContent(html, "tekst") ==
        "Radi kao konj, a ne zna zašto. On je lep kao cvet & jak kao bik. "
        "Čudno ti je to, reče Mujo.");
  CHECK(ExtractContent(html, "meni") == "Početna | Vicevi");
  CHECK(ExtractContent(html, "nema") == "");

  const auto links = ExtractLinks(html);
  CHECK(links == std::vector<std::string>{"/", "/vicevi/", "mailto:urednik@example.rs"});
}

TEST_CASE("extract_content handles nesting and sloppy markup") {
  CHECK(ExtractContent("<div id=x>a<div>b</div>c</div>d", "x") == "a b c");
  CHECK(ExtractContent("<div id='x'>ra<b>di</b> ko konj</div>", "x") == "radi ko konj");
  CHECK(ExtractContent("<p id=\"x\">1 &lt; 2 &bogus; &#0;</p>", "x") == "1 < 2 &bogus; &#0;");
  CHECK(ExtractContent("<div id=x>unterminated", "x") == "unterminated");
  CHECK(ExtractContent("<div id=x>a < b</div>", "x") == "a < b");
  CHECK(ExtractContent("<img id=x src=a.png>", "x") == "");
}

TEST_CASE("url parsing and resolution") {
  const auto base = Url::Parse("HTTP://Www.Example.rs:80/vicevi/a/index.html?p=2#top");
  REQUIRE(base);
  CHECK(base->host == "www.example.rs");
  CHECK(base->port == 80);
  CHECK(base->path == "/vicevi/a/index.html?p=2");
  CHECK(base->ToString() == "http://www.example.rs/vicevi/a/index.html?p=2");
  CHECK(Url::Parse("http://h:8080")->ToString() == "http://h:8080/");
  CHECK_FALSE(Url::Parse("ftp://h/"));
  CHECK_FALSE(Url::Parse("/relative"));
  CHECK_FALSE(Url::Parse("http://h:99999/"));

  const auto r = [&](const std::string &ref) {
    const auto u = base->Resolve(ref);
    return u ? u->ToString() : std::string("-");
  };
  CHECK(r("b.html") == "http://www.example.rs/vicevi/a/b.html");
  CHECK(r("../b.html#x") == "http://www.example.rs/vicevi/b.html");
  CHECK(r("../../../../b.html") == "http://www.example.rs/b.html");
  CHECK(r("./") == "http://www.example.rs/vicevi/a/");
  CHECK(r("/x/./y/../z") == "http://www.example.rs/x/z");
  CHECK(r("?p=3") == "http://www.example.rs/vicevi/a/index.html?p=3");
  CHECK(r("//cdn.example.rs/s.js") == "http://cdn.example.rs/s.js");
  CHECK(r("https://other.rs/") == "https://other.rs/");
  CHECK(r("mailto:a@b.rs") == "-");
  CHECK(r("javascript:void(0)") == "-");
  CHECK(r("#frag") == base->ToString());
}

TEST_CASE("domain confinement") {
  CHECK(InDomain(*Url::Parse("http://example.rs/"), "example.rs"));
  CHECK(InDomain(*Url::Parse("http://www.example.rs/"), "example.rs"));
  CHECK_FALSE(InDomain(*Url::Parse("http://badexample.rs/"), "example.rs"));
  CHECK_FALSE(InDomain(*Url::Parse("http://example.rs.evil.com/"), "example.rs"));
  CHECK_FALSE(InDomain(*Url::Parse("http://example.rs/"), ""));
}

TEST_CASE("robots rules") {
  const std::string txt =
      "User-agent: *\nDisallow: /privatno/\nAllow: /privatno/javno\n\n"
      "User-agent: simile-miner\nDisallow: /arhiva\nAllow: /arhiva/vicevi\n"
      "Disallow: /x\nAllow: /x\n";
  const auto star = RobotsRules::Parse(txt, "otherbot");
  CHECK_FALSE(star.Allowed("/privatno/a"));
  CHECK(star.Allowed("/privatno/javno/a"));
  CHECK(star.Allowed("/arhiva"));

  const auto mine = RobotsRules::Parse(txt, "simile-miner");
  CHECK(mine.Allowed("/privatno/a"));  // a named group replaces '*'
  CHECK_FALSE(mine.Allowed("/arhiva/2020"));
  CHECK(mine.Allowed("/arhiva/vicevi/1"));
  CHECK(mine.Allowed("/x"));  // allow wins ties

  CHECK(RobotsRules::Parse("User-agent: *\nDisallow:\n", "a").Allowed("/"));
  CHECK(RobotsRules().Allowed("/anything"));
}

TEST_CASE("crawler stays in the domain and respects limits") {
  FakeFetcher f;
  const std::string root = "http://vicevi.example.rs";
  f.pages[root + "/robots.txt"] = "User-agent: *\nDisallow: /zabranjeno\n";
  f.pages[root + "/"] = Page("Radi kao konj.", {"/a", "http://tudji.rs/x", "/zabranjeno/1"});
  f.pages[root + "/a"] = Page("Lep kao cvet.", {"/b", "/", "https://drugi.rs/"});
  f.pages[root + "/b"] = Page("Spava ko top.", {"/a", "/c"});
  f.pages[root + "/c"] = Page("Jak kao bik.", {"mailto:x@y.rs"});
  f.pages["http://tudji.rs/x"] = Page("ne", {});

  SourceConfig cfg;
  cfg.site_name = "vicevi";
  cfg.allowed_domain = "example.rs";
  cfg.content_selector = "c";
  cfg.start_urls = {root + "/"};
  cfg.politeness_delay_ms = 250;

  std::vector<std::chrono::milliseconds> sleeps;
  CrawlOptions opts;
  opts.sleep = [&](std::chrono::milliseconds d) { sleeps.push_back(d); };
  opts.clock = [] { return std::int64_t{42}; };

  const auto result = Crawl(cfg, f, opts);
  REQUIRE(result.documents.size() == 4);
  CHECK(result.documents[0].text == "Radi kao konj.");
  CHECK(result.documents[1].text == "Lep kao cvet.");
  CHECK(result.documents[3].source_locator == root + "/c");
  CHECK(result.documents[3].fetched_at == 42);
  for (const auto &u : f.hits) CHECK(Url::Parse(u)->host == "vicevi.example.rs");
  CHECK(result.skipped_off_domain ==
        std::vector<std::string>{"http://tudji.rs/x", "https://drugi.rs/"});
  CHECK(result.skipped_robots == std::vector<std::string>{root + "/zabranjeno/1"});
  // robots.txt once, then each page once despite the a<->b cycle.
  CHECK(f.hits.size() == 5);
  CHECK(f.hits[0] == root + "/robots.txt");
  CHECK(sleeps.size() == f.hits.size() - 1);
  for (const auto d : sleeps) CHECK(d.count() == 250);

  cfg.max_pages = 2;
  f.hits.clear();
  const auto limited = Crawl(cfg, f, opts);
  CHECK(limited.documents.size() == 2);
  CHECK(f.hits.size() == 3);
}

TEST_CASE("crawler records failures and skips off-domain seeds") {
  FakeFetcher f;
  f.pages["http://a.rs/"] = Page("x", {"/gone"});
  SourceConfig cfg;
  cfg.allowed_domain = "a.rs";
  cfg.content_selector = "c";
  cfg.start_urls = {"http://a.rs/", "http://b.rs/", "not a url"};
  cfg.politeness_delay_ms = 0;
  const auto result = Crawl(cfg, f);
  CHECK(result.documents.size() == 1);
  CHECK(result.skipped_off_domain == std::vector<std::string>{"http://b.rs/"});
  CHECK(result.failed == std::vector<std::string>{"not a url", "http://a.rs/gone"});
}

TEST_CASE("source configs") {
  const auto one = ParseSourceConfigs(
      R"({"name":"burek","allowed_domain":"burek.com","content_selector":"text",)"
      R"("start_urls":["http://burek.com/"],"max_pages":5})");
  REQUIRE(one.size() == 1);
  CHECK(one[0].max_pages == 5);
  CHECK(one[0].politeness_delay_ms == 1000);
  const auto many = ParseSourceConfigs(
      R"({"sites":[{"allowed_domain":"a.rs","start_urls":["http://a.rs/"]},)"
      R"({"allowed_domain":"b.rs","start_urls":["http://b.rs/"]}]})");
  CHECK(many.size() == 2);
  CHECK_THROWS_AS(ParseSourceConfigs("{"), ParseError);
  CHECK_THROWS_AS(ParseSourceConfigs(R"({"start_urls":["http://a.rs/"]})"), ParseError);
  CHECK_THROWS_AS(
      ParseSourceConfigs(R"({"allowed_domain":"a.rs","start_urls":["http://a.rs/"],"max_pages":0})"),
      ParseError);
}

TEST_CASE("document cache round trip") {
  const auto dir = FreshDir("cache");
  CHECK_FALSE(IsDocumentCache(dir));
  std::vector<Document> docs = {{DocIdFor("http://a.rs/1"), "http://a.rs/1", "Radi ko konj.", 7},
                                {DocIdFor("http://a.rs/2\tx"), "http://a.rs/2\tx", "Lep kao cvet.\n", 8}};
  WriteDocumentCache(dir, docs);
  CHECK(IsDocumentCache(dir));
  const auto back = ReadDocumentCache(dir);
  REQUIRE(back.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(back[i].doc_id == docs[i].doc_id);
    CHECK(back[i].source_locator == docs[i].source_locator);
    CHECK(back[i].text == docs[i].text);
    CHECK(back[i].fetched_at == docs[i].fetched_at);
  }
}

}  // namespace simile
