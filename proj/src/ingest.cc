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

#include "simile/ingest.h"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <set>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include <spdlog/spdlog.h>

#include "httplib.h"
#include "json.hpp"
#include "simile/errors.h"
#include "simile/io.h"
#include "simile/text.h"

namespace simile {
namespace {

std::string AsciiLower(std::string_view s) {
  std::string out(s);
  for (char &c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool StartsWithNoCase(std::string_view s, std::size_t pos, std::string_view prefix) {
  if (pos + prefix.size() > s.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(s[pos + i])) !=
        std::tolower(static_cast<unsigned char>(prefix[i]))) {
      return false;
    }
  }
  return true;
}

std::int64_t NowMillis() {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::system_clock::now().time_since_epoch())
      .count();
}

// --- HTML lexing ----------------------------------------------------------

struct HtmlToken {
  enum Kind { kText, kStart, kEnd } kind;
  std::string name;  // lowercase tag name
  std::string text;  // raw text for kText
  std::vector<std::pair<std::string, std::string>> attrs;
  bool self_closing = false;
};

bool IsNameChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == ':';
}

std::vector<HtmlToken> LexHtml(std::string_view html) {
  std::vector<HtmlToken> out;
  std::string text;
  const auto flush = [&] {
    if (!text.empty()) out.push_back({HtmlToken::kText, "", std::move(text), {}, false});
    text.clear();
  };
  const std::size_t n = html.size();
  std::size_t i = 0;
  while (i < n) {
    if (html[i] != '<') {
      text += html[i++];
      continue;
    }
    if (html.substr(i, 4) == "<!--") {
      const std::size_t end = html.find("-->", i + 4);
      i = end == std::string_view::npos ? n : end + 3;
      continue;
    }
    if (i + 1 < n && (html[i + 1] == '!' || html[i + 1] == '?')) {
      const std::size_t end = html.find('>', i);
      i = end == std::string_view::npos ? n : end + 1;
      continue;
    }
    const bool closing = i + 1 < n && html[i + 1] == '/';
    std::size_t j = i + (closing ? 2 : 1);
    if (j >= n || !std::isalpha(static_cast<unsigned char>(html[j]))) {
      text += html[i++];  // a stray '<' is text
      continue;
    }
    flush();
    std::size_t name_end = j;
    while (name_end < n && IsNameChar(html[name_end])) ++name_end;
    HtmlToken tag{closing ? HtmlToken::kEnd : HtmlToken::kStart,
                  AsciiLower(html.substr(j, name_end - j)), "", {}, false};
    j = name_end;
    while (j < n && html[j] != '>') {
      if (std::isspace(static_cast<unsigned char>(html[j]))) {
        ++j;
        continue;
      }
      if (html[j] == '/') {
        tag.self_closing = true;
        ++j;
        continue;
      }
      if (html[j] == '<') break;  // unclosed tag; let the next one start
      std::size_t a = j;
      while (j < n && !std::isspace(static_cast<unsigned char>(html[j])) && html[j] != '=' &&
             html[j] != '>' && html[j] != '/') {
        ++j;
      }
      std::string attr = AsciiLower(html.substr(a, j - a));
      std::string value;
      while (j < n && std::isspace(static_cast<unsigned char>(html[j]))) ++j;
      if (j < n && html[j] == '=') {
        ++j;
        while (j < n && std::isspace(static_cast<unsigned char>(html[j]))) ++j;
        if (j < n && (html[j] == '"' || html[j] == '\'')) {
          const char quote = html[j++];
          const std::size_t end = html.find(quote, j);
          const std::size_t stop = end == std::string_view::npos ? n : end;
          value = std::string(html.substr(j, stop - j));
          j = stop == n ? n : stop + 1;
        } else {
          const std::size_t v = j;
          while (j < n && !std::isspace(static_cast<unsigned char>(html[j])) && html[j] != '>') ++j;
          value = std::string(html.substr(v, j - v));
        }
      } else {
        tag.self_closing = false;
      }
      if (!attr.empty()) tag.attrs.emplace_back(std::move(attr), std::move(value));
    }
    if (j < n && html[j] == '>') ++j;
    i = j;
    const bool raw = !closing && (tag.name == "script" || tag.name == "style");
    const std::string raw_name = tag.name;
    out.push_back(std::move(tag));
    if (raw && !out.back().self_closing) {
      // Skip raw text up to the matching close tag.
      std::size_t k = i;
      while (k < n && !(html[k] == '<' && StartsWithNoCase(html, k, "</" + raw_name))) ++k;
      i = k;
    }
  }
  flush();
  return out;
}

bool IsVoid(std::string_view name) {
  static const std::set<std::string, std::less<>> kVoid = {
      "area", "base", "br", "col", "embed", "hr", "img", "input", "link", "meta", "source",
      "track", "wbr"};
  return kVoid.count(name) > 0;
}

bool IsBlock(std::string_view name) {
  static const std::set<std::string, std::less<>> kBlock = {
      "address", "article", "aside", "blockquote", "br", "dd", "div", "dl", "dt", "footer",
      "h1", "h2", "h3", "h4", "h5", "h6", "header", "hr", "li", "main", "nav", "ol", "p",
      "pre", "section", "table", "td", "th", "tr", "ul"};
  return kBlock.count(name) > 0;
}

std::string DecodeEntities(std::string_view s) {
  static const std::unordered_map<std::string, char32_t> kNamed = {
      {"amp", '&'}, {"lt", '<'}, {"gt", '>'}, {"quot", '"'}, {"apos", '\''},
      {"nbsp", ' '}, {"ndash", 0x2013}, {"mdash", 0x2014}, {"hellip", 0x2026},
      {"laquo", 0xAB}, {"raquo", 0xBB}, {"bdquo", 0x201E}, {"ldquo", 0x201C},
      {"rdquo", 0x201D}, {"lsquo", 0x2018}, {"rsquo", 0x2019}, {"copy", 0xA9},
      {"scaron", 0x161}, {"Scaron", 0x160}, {"zcaron", 0x17E}, {"Zcaron", 0x17D},
      {"ccaron", 0x10D}, {"Ccaron", 0x10C}, {"cacute", 0x107}, {"Cacute", 0x106},
      {"dstrok", 0x111}, {"Dstrok", 0x110}};
  std::string out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '&') {
      out += s[i++];
      continue;
    }
    const std::size_t semi = s.find(';', i + 1);
    if (semi == std::string_view::npos || semi - i > 12) {
      out += s[i++];
      continue;
    }
    const std::string_view body = s.substr(i + 1, semi - i - 1);
    std::optional<char32_t> cp;
    if (body.size() > 1 && body[0] == '#') {
      try {
        const bool hex = body[1] == 'x' || body[1] == 'X';
        const std::string digits(body.substr(hex ? 2 : 1));
        std::size_t used = 0;
        const unsigned long v = std::stoul(digits, &used, hex ? 16 : 10);
        if (used == digits.size() && v > 0 && v <= 0x10FFFF && !(v >= 0xD800 && v <= 0xDFFF)) {
          cp = static_cast<char32_t>(v);
        }
      } catch (const std::exception &) {
      }
    } else {
      const auto it = kNamed.find(std::string(body));
      if (it != kNamed.end()) cp = it->second;
    }
    if (!cp) {
      out += s[i++];
      continue;
    }
    AppendUtf8(*cp, &out);
    i = semi + 1;
  }
  return out;
}

std::string CollapseWhitespace(std::string_view s) { return Join(SplitWhitespace(s), " "); }

}  // namespace

std::string DocIdFor(std::string_view locator) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : locator) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  static const char *kHex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[i] = kHex[h & 0xF];
  return out;
}

std::vector<Document> ReadLocal(const std::filesystem::path &root) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(root, ec)) throw IoError("not a directory: " + root.string());
  std::vector<std::pair<std::string, fs::path>> files;
  for (auto it = fs::recursive_directory_iterator(root, fs::directory_options::skip_permission_denied, ec);
       !ec && it != fs::recursive_directory_iterator(); it.increment(ec)) {
    if (it->is_regular_file(ec)) {
      files.emplace_back(fs::relative(it->path(), root).generic_string(), it->path());
    }
  }
  if (ec) spdlog::warn("directory walk under {} stopped early: {}", root.string(), ec.message());
  std::sort(files.begin(), files.end());
  std::vector<Document> docs;
  for (const auto &[rel, path] : files) {
    std::string contents;
    try {
      contents = ReadFile(path);
    } catch (const IoError &e) {
      spdlog::warn("skipping unreadable file {}: {}", path.string(), e.what());
      continue;
    }
    if (!IsValidUtf8(contents)) {
      spdlog::warn("{} is not valid UTF-8; bad bytes replaced", path.string());
      contents = SanitizeUtf8(contents);
    }
    Document doc;
    doc.source_locator = rel;
    doc.doc_id = DocIdFor(rel);
    doc.text = std::move(contents);
    const auto mtime = fs::last_write_time(path, ec);
    if (!ec) {
      const auto sys = std::chrono::system_clock::now() +
                       (mtime - fs::file_time_type::clock::now());
      doc.fetched_at =
          std::chrono::duration_cast<std::chrono::milliseconds>(sys.time_since_epoch()).count();
    }
    docs.push_back(std::move(doc));
  }
  return docs;
}

std::vector<std::pair<std::string, std::int64_t>> CountBySubdirectory(
    const std::vector<Document> &documents) {
  std::map<std::string, std::int64_t> counts;
  for (const Document &d : documents) {
    const std::size_t slash = d.source_locator.find('/');
    ++counts[slash == std::string::npos ? "." : d.source_locator.substr(0, slash)];
  }
  return {counts.begin(), counts.end()};
}

std::string FormatDocumentCounts(const std::vector<std::pair<std::string, std::int64_t>> &counts) {
  std::size_t width = std::string("Website").size();
  std::int64_t total = 0;
  for (const auto &[name, n] : counts) {
    width = std::max(width, Utf8Length(name));
    total += n;
  }
  const auto row = [&](const std::string &a, const std::string &b) {
    std::string line = a;
    line.append(width + 2 - Utf8Length(a), ' ');
    return line + b + "\n";
  };
  std::string out = row("Website", "Number of documents");
  for (const auto &[name, n] : counts) out += row(name, std::to_string(n));
  out += row("Total", std::to_string(total));
  return out;
}

std::string ExtractContent(std::string_view html, std::string_view element_id) {
  const std::vector<HtmlToken> tokens = LexHtml(html);
  std::size_t start = tokens.size();
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].kind != HtmlToken::kStart) continue;
    for (const auto &[k, v] : tokens[i].attrs) {
      if (k == "id" && v == element_id) {
        start = i;
        break;
      }
    }
    if (start != tokens.size()) break;
  }
  if (start == tokens.size()) return "";
  const HtmlToken &root = tokens[start];
  if (root.self_closing || IsVoid(root.name)) return "";
  std::string text;
  int depth = 1;
  for (std::size_t i = start + 1; i < tokens.size(); ++i) {
    const HtmlToken &t = tokens[i];
    if (t.kind == HtmlToken::kText) {
      text += DecodeEntities(t.text);
      continue;
    }
    if (t.name == root.name) {
      if (t.kind == HtmlToken::kStart && !t.self_closing) ++depth;
      if (t.kind == HtmlToken::kEnd && --depth == 0) break;
    }
    if (IsBlock(t.name)) text += ' ';
  }
  return CollapseWhitespace(text);
}

std::vector<std::string> ExtractLinks(std::string_view html) {
  std::vector<std::string> links;
  for (const HtmlToken &t : LexHtml(html)) {
    if (t.kind != HtmlToken::kStart || t.name != "a") continue;
    for (const auto &[k, v] : t.attrs) {
      if (k == "href" && !Trim(v).empty()) links.push_back(DecodeEntities(Trim(v)));
    }
  }
  return links;
}

// --- URLs -----------------------------------------------------------------

namespace {

std::string RemoveDotSegments(const std::string &path) {
  const std::size_t q = path.find('?');
  const std::string p = path.substr(0, q);
  const std::string query = q == std::string::npos ? "" : path.substr(q);
  std::vector<std::string> parts;
  std::size_t i = 1;
  while (i <= p.size()) {
    std::size_t j = p.find('/', i);
    if (j == std::string::npos) j = p.size();
    const std::string seg = p.substr(i, j - i);
    if (seg == "..") {
      if (!parts.empty()) parts.pop_back();
      if (j == p.size()) parts.push_back("");
    } else if (seg == ".") {
      if (j == p.size()) parts.push_back("");
    } else {
      parts.push_back(seg);
    }
    i = j + 1;
  }
  std::string out;
  for (const auto &s : parts) out += "/" + s;
  if (out.empty()) out = "/";
  return out + query;
}

}  // namespace

std::optional<Url> Url::Parse(std::string_view text) {
  text = Trim(text);
  const std::size_t colon = text.find("://");
  if (colon == std::string_view::npos) return std::nullopt;
  Url url;
  url.scheme = AsciiLower(text.substr(0, colon));
  if (url.scheme != "http" && url.scheme != "https") return std::nullopt;
  std::string_view rest = text.substr(colon + 3);
  const std::size_t hash = rest.find('#');
  if (hash != std::string_view::npos) rest = rest.substr(0, hash);
  const std::size_t path_start = rest.find_first_of("/?");
  std::string_view authority = rest.substr(0, path_start);
  const std::size_t at = authority.rfind('@');
  if (at != std::string_view::npos) authority = authority.substr(at + 1);
  const std::size_t port_colon = authority.rfind(':');
  url.port = url.scheme == "https" ? 443 : 80;
  if (port_colon != std::string_view::npos && authority.find(']') == std::string_view::npos) {
    const std::string digits(authority.substr(port_colon + 1));
    authority = authority.substr(0, port_colon);
    if (!digits.empty()) {
      if (digits.size() > 5 || !std::all_of(digits.begin(), digits.end(), ::isdigit)) {
        return std::nullopt;
      }
      url.port = std::stoi(digits);
      if (url.port < 1 || url.port > 65535) return std::nullopt;
    }
  }
  url.host = AsciiLower(authority);
  if (url.host.empty()) return std::nullopt;
  std::string path = path_start == std::string_view::npos ? "/" : std::string(rest.substr(path_start));
  if (path[0] == '?') path = "/" + path;
  url.path = RemoveDotSegments(path);
  return url;
}

std::optional<Url> Url::Resolve(std::string_view ref) const {
  std::string r(Trim(ref));
  const std::size_t hash = r.find('#');
  if (hash != std::string::npos) r.resize(hash);
  if (r.empty()) return *this;
  const std::size_t colon = r.find(':');
  const std::size_t slash = r.find_first_of("/?");
  if (colon != std::string::npos && (slash == std::string::npos || colon < slash)) {
    return Parse(r);  // has a scheme; non-http ones come back nullopt
  }
  if (r.rfind("//", 0) == 0) return Parse(scheme + ":" + r);
  Url out = *this;
  if (r[0] == '/') {
    out.path = RemoveDotSegments(r);
  } else if (r[0] == '?') {
    out.path = path.substr(0, path.find('?')) + r;
  } else {
    const std::string base = path.substr(0, path.find('?'));
    out.path = RemoveDotSegments(base.substr(0, base.rfind('/') + 1) + r);
  }
  return out;
}

std::string Url::Origin() const {
  const bool default_port = (scheme == "http" && port == 80) || (scheme == "https" && port == 443);
  return scheme + "://" + host + (default_port ? "" : ":" + std::to_string(port));
}

std::string Url::ToString() const { return Origin() + path; }

bool InDomain(const Url &url, std::string_view domain) {
  const std::string d = AsciiLower(Trim(domain));
  if (d.empty()) return false;
  if (url.host == d) return true;
  return url.host.size() > d.size() && url.host.ends_with("." + d);
}

// --- robots.txt -------------------------------------------------------------

RobotsRules RobotsRules::Parse(std::string_view robots_txt, std::string_view agent) {
  const std::string me = AsciiLower(agent);
  // Collect rule groups keyed by whether they name us or "*".
  std::vector<std::pair<std::string, bool>> mine, star;
  std::vector<std::string> group_agents;
  bool in_rules = false;
  for (const std::string &raw : SplitLines(robots_txt)) {
    std::string line = raw.substr(0, raw.find('#'));
    const std::size_t colon = line.find(':');
    if (colon == std::string::npos) continue;
    const std::string key = AsciiLower(Trim(std::string_view(line).substr(0, colon)));
    const std::string value(Trim(std::string_view(line).substr(colon + 1)));
    if (key == "user-agent") {
      if (in_rules) group_agents.clear();
      in_rules = false;
      group_agents.push_back(AsciiLower(value));
    } else if (key == "allow" || key == "disallow") {
      in_rules = true;
      if (value.empty()) continue;  // "Disallow:" allows everything
      for (const std::string &a : group_agents) {
        if (a == "*") star.emplace_back(value, key == "allow");
        else if (!me.empty() && me.find(a) != std::string::npos) mine.emplace_back(value, key == "allow");
      }
    }
  }
  RobotsRules rules;
  rules.rules_ = mine.empty() ? star : mine;
  return rules;
}

bool RobotsRules::Allowed(std::string_view path) const {
  std::size_t best = 0;
  bool allowed = true;
  for (const auto &[prefix, allow] : rules_) {
    if (!path.starts_with(prefix)) continue;
    if (prefix.size() > best || (prefix.size() == best && allow)) {
      best = prefix.size();
      allowed = allow;
    }
  }
  return allowed;
}

// --- configuration --------------------------------------------------------

void SourceConfig::Validate() const {
  if (Trim(allowed_domain).empty()) throw InvalidArgument("site '" + site_name + "': allowed_domain is empty");
  if (max_pages < 1) throw InvalidArgument("site '" + site_name + "': max_pages must be >= 1");
  if (politeness_delay_ms < 0) {
    throw InvalidArgument("site '" + site_name + "': politeness_delay_ms must be >= 0");
  }
  if (start_urls.empty()) throw InvalidArgument("site '" + site_name + "': no start_urls");
}

std::vector<SourceConfig> ParseSourceConfigs(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(std::string("source config is not valid JSON: ") + e.what());
  }
  if (j.is_object() && j.contains("sites")) j = j["sites"];
  if (j.is_object()) j = nlohmann::json::array({j});
  if (!j.is_array()) throw ParseError("source config must be an object or a list of sites");
  std::vector<SourceConfig> out;
  for (const auto &site : j) {
    try {
      SourceConfig c;
      c.site_name = site.value("name", std::string());
      c.allowed_domain = site.at("allowed_domain").get<std::string>();
      c.content_selector = site.value("content_selector", std::string());
      c.start_urls = site.at("start_urls").get<std::vector<std::string>>();
      c.max_pages = site.value("max_pages", 100);
      c.politeness_delay_ms = site.value("politeness_delay_ms", 1000);
      c.Validate();
      out.push_back(std::move(c));
    } catch (const nlohmann::json::exception &e) {
      throw ParseError(std::string("bad site record: ") + e.what());
    } catch (const InvalidArgument &e) {
      throw ParseError(e.what());
    }
  }
  return out;
}

std::vector<SourceConfig> LoadSourceConfigs(const std::filesystem::path &path) {
  return ParseSourceConfigs(ReadFile(path));
}

// --- fetching -----------------------------------------------------------------

HttpFetcher::HttpFetcher(std::string user_agent, std::chrono::milliseconds timeout)
    : user_agent_(std::move(user_agent)), timeout_(timeout) {}

std::optional<FetchResponse> HttpFetcher::Get(const Url &url) {
  if (url.scheme != "http") {
    spdlog::warn("{}: only plain http is supported", url.ToString());
    return std::nullopt;
  }
  httplib::Client client(url.host, url.port);
  const auto secs = std::chrono::duration_cast<std::chrono::seconds>(timeout_);
  const auto usecs = std::chrono::duration_cast<std::chrono::microseconds>(timeout_ - secs);
  client.set_connection_timeout(secs.count(), usecs.count());
  client.set_read_timeout(secs.count(), usecs.count());
  const auto res = client.Get(url.path, {{"User-Agent", user_agent_}});
  if (!res) return std::nullopt;
  return FetchResponse{res->status, res->body, res->get_header_value("Content-Type")};
}

CrawlResult Crawl(const SourceConfig &config, Fetcher &fetcher, const CrawlOptions &options) {
  config.Validate();
  const auto sleep = options.sleep ? options.sleep : [](std::chrono::milliseconds d) {
    std::this_thread::sleep_for(d);
  };
  const auto clock = options.clock ? options.clock : NowMillis;
  CrawlResult result;
  std::deque<Url> queue;
  std::unordered_set<std::string> seen;
  const auto enqueue = [&](const Url &url) {
    const std::string key = url.ToString();
    if (!seen.insert(key).second) return;
    if (!InDomain(url, config.allowed_domain)) {
      result.skipped_off_domain.push_back(key);
      return;
    }
    queue.push_back(url);
  };
  for (const std::string &s : config.start_urls) {
    const auto url = Url::Parse(s);
    if (!url) {
      result.failed.push_back(s);
      continue;
    }
    enqueue(*url);
  }

  bool first = true;
  const auto request = [&](const Url &url) {
    if (!first && config.politeness_delay_ms > 0) {
      sleep(std::chrono::milliseconds(config.politeness_delay_ms));
    }
    first = false;
    result.requested.push_back(url.ToString());
    return fetcher.Get(url);
  };
  std::map<std::string, RobotsRules> robots;

  while (!queue.empty() && static_cast<int>(result.documents.size()) < config.max_pages) {
    const Url url = queue.front();
    queue.pop_front();
    auto rules = robots.find(url.Origin());
    if (rules == robots.end()) {
      Url robots_url = url;
      robots_url.path = "/robots.txt";
      const auto res = request(robots_url);
      rules = robots
                  .emplace(url.Origin(), res && res->status == 200
                                             ? RobotsRules::Parse(res->body, options.user_agent)
                                             : RobotsRules())
                  .first;
    }
    if (!rules->second.Allowed(url.path)) {
      result.skipped_robots.push_back(url.ToString());
      continue;
    }
    const auto res = request(url);
    if (!res || res->status != 200) {
      spdlog::warn("fetch failed: {} ({})", url.ToString(),
                   res ? "HTTP " + std::to_string(res->status) : std::string("no response"));
      result.failed.push_back(url.ToString());
      continue;
    }
    const std::string body = IsValidUtf8(res->body) ? res->body : SanitizeUtf8(res->body);
    Document doc;
    doc.source_locator = url.ToString();
    doc.doc_id = DocIdFor(doc.source_locator);
    doc.text = ExtractContent(body, config.content_selector);
    doc.fetched_at = clock();
    result.documents.push_back(std::move(doc));
    for (const std::string &link : ExtractLinks(body)) {
      if (const auto next = url.Resolve(link)) enqueue(*next);
    }
  }
  return result;
}

// --- document cache -------------------------------------------------------

void WriteDocumentCache(const std::filesystem::path &dir, const std::vector<Document> &documents) {
  std::filesystem::create_directories(dir);
  std::string manifest;
  for (const Document &d : documents) {
    WriteFileAtomic(dir / (d.doc_id + ".txt"), d.text);
    manifest += d.doc_id + "\t" + EscapeField(d.source_locator) + "\t" +
                std::to_string(d.fetched_at) + "\n";
  }
  WriteFileAtomic(dir / "manifest.tsv", manifest);
}

bool IsDocumentCache(const std::filesystem::path &dir) {
  return std::filesystem::is_regular_file(dir / "manifest.tsv");
}

std::vector<Document> ReadDocumentCache(const std::filesystem::path &dir) {
  std::vector<Document> docs;
  int line_no = 0;
  for (const std::string &line : SplitLines(ReadFile(dir / "manifest.tsv"))) {
    ++line_no;
    if (line.empty()) continue;
    const auto f = SplitTabs(line);
    if (f.size() != 3) {
      throw ParseError("manifest line " + std::to_string(line_no) + ": expected 3 fields");
    }
    Document d;
    d.doc_id = f[0];
    d.source_locator = UnescapeField(f[1]);
    try {
      d.fetched_at = std::stoll(f[2]);
    } catch (const std::exception &) {
      throw ParseError("manifest line " + std::to_string(line_no) + ": bad timestamp");
    }
    d.text = ReadFile(dir / (d.doc_id + ".txt"));
    docs.push_back(std::move(d));
  }
  return docs;
}

}  // namespace simile
