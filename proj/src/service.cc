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

#include "simile/service.h"

#include <algorithm>
#include <cstdlib>
#include <random>

#include <spdlog/spdlog.h>

#include "httplib.h"
#include "json.hpp"
#include "simile/errors.h"
#include "simile/io.h"
#include "simile/text.h"

namespace simile {
namespace {

using nlohmann::json;

std::int64_t NowMs() {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::system_clock::now().time_since_epoch())
      .count();
}

ApiResponse Json(int status, const json &body) { return {status, body.dump()}; }

ApiResponse Fail(int status, std::string_view message) {
  return Json(status, {{"error", message}, {"status", status}});
}

json EntryJson(const CorpusEntry &e) {
  json history = json::array();
  for (const HistoryRecord &h : e.history) {
    history.push_back(
        {{"timestamp", h.timestamp}, {"actor", h.actor}, {"action", h.action}, {"from", h.from}, {"to", h.to}});
  }
  return {{"id", e.id},
          {"text", e.text},
          {"stem_key", e.stem_key.ToString()},
          {"status", StatusName(e.status)},
          {"origin", OriginName(e.origin)},
          {"provenance", e.provenance},
          {"classifier_score", e.classifier_score ? json(*e.classifier_score) : json(nullptr)},
          {"created_at", e.created_at},
          {"updated_at", e.updated_at},
          {"history", std::move(history)}};
}

json SimilarJson(const std::vector<SimilarEntry> &similar) {
  json out = json::array();
  for (const SimilarEntry &s : similar) {
    out.push_back({{"id", s.id}, {"text", s.text}, {"status", StatusName(s.status)},
                   {"similarity", s.similarity}});
  }
  return out;
}

std::optional<std::int64_t> ParsePositive(const std::string &s) {
  if (s.empty() || s.size() > 12 || !std::all_of(s.begin(), s.end(), ::isdigit)) return std::nullopt;
  const std::int64_t v = std::stoll(s);
  if (v < 1) return std::nullopt;
  return v;
}

bool ConstantTimeEquals(std::string_view a, std::string_view b) {
  unsigned char diff = a.size() == b.size() ? 0 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) diff |= a[i] ^ b[i % std::max<std::size_t>(b.size(), 1)];
  return diff == 0 && !b.empty();
}

std::string NewToken() {
  static thread_local std::random_device rd;
  static const char *kHex = "0123456789abcdef";
  std::string out;
  for (int i = 0; i < 8; ++i) {
    unsigned v = rd();
    for (int j = 0; j < 4; ++j, v >>= 4) out += kHex[v & 0xF];
  }
  return out;
}

// Body as a JSON object, or nullopt if it is not one.
std::optional<json> ParseObject(const std::string &body) {
  try {
    json j = json::parse(body);
    if (j.is_object()) return j;
  } catch (const json::exception &) {
  }
  return std::nullopt;
}

std::optional<std::string> StringField(const json &j, const char *key) {
  const auto it = j.find(key);
  if (it == j.end() || !it->is_string()) return std::nullopt;
  return it->get<std::string>();
}

}  // namespace

// --- configuration ----------------------------------------------------------

void ServiceConfig::Validate() const {
  if (port < 0 || port > 65535) throw InvalidArgument("port out of range: " + std::to_string(port));
  if (rate_limit < 0) throw InvalidArgument("rate_limit must be >= 0");
  if (!(dedup_threshold > 0.0 && dedup_threshold <= 1.0)) {
    throw InvalidArgument("dedup_threshold must be in (0, 1]");
  }
  if (token_ttl_s < 1) throw InvalidArgument("token_ttl_s must be >= 1");
  if (store_path.empty()) throw InvalidArgument("store path is empty");
}

EnvLookup ProcessEnv() {
  return [](const char *name) -> std::optional<std::string> {
    const char *v = std::getenv(name);
    if (!v) return std::nullopt;
    return std::string(v);
  };
}

void ApplyServiceConfigJson(ServiceConfig &config, std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception &e) {
    throw ParseError(std::string("service config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("service config must be a JSON object");
  try {
    if (j.contains("bind")) config.bind = j["bind"].get<std::string>();
    if (j.contains("port")) config.port = j["port"].get<int>();
    if (j.contains("store")) config.store_path = j["store"].get<std::string>();
    if (j.contains("curator_credential")) config.curator_credential = j["curator_credential"].get<std::string>();
    if (j.contains("rate_limit")) config.rate_limit = j["rate_limit"].get<int>();
    if (j.contains("dedup_threshold")) config.dedup_threshold = j["dedup_threshold"].get<double>();
    if (j.contains("token_ttl_s")) config.token_ttl_s = j["token_ttl_s"].get<int>();
  } catch (const json::exception &e) {
    throw ParseError(std::string("service config: ") + e.what());
  }
}

void ApplyServiceConfigEnv(ServiceConfig &config, const EnvLookup &env) {
  const auto number = [](const char *name, const std::string &v, auto parse) {
    try {
      std::size_t used = 0;
      auto out = parse(v, &used);
      if (used == v.size()) return out;
    } catch (const std::exception &) {
    }
    throw InvalidArgument(std::string(name) + ": not a number: '" + v + "'");
  };
  const auto stoi = [](const std::string &s, std::size_t *u) { return std::stoi(s, u); };
  const auto stod = [](const std::string &s, std::size_t *u) { return std::stod(s, u); };
  if (auto v = env("SIMILE_BIND")) config.bind = *v;
  if (auto v = env("SIMILE_PORT")) config.port = number("SIMILE_PORT", *v, stoi);
  if (auto v = env("SIMILE_STORE")) config.store_path = *v;
  if (auto v = env("SIMILE_CURATOR_CREDENTIAL")) config.curator_credential = *v;
  if (auto v = env("SIMILE_RATE_LIMIT")) config.rate_limit = number("SIMILE_RATE_LIMIT", *v, stoi);
  if (auto v = env("SIMILE_DEDUP_THRESHOLD")) {
    config.dedup_threshold = number("SIMILE_DEDUP_THRESHOLD", *v, stod);
  }
}

ServiceConfig LoadServiceConfig(const std::optional<std::filesystem::path> &file,
                                const EnvLookup &env) {
  ServiceConfig config;
  if (file) ApplyServiceConfigJson(config, ReadFile(*file));
  ApplyServiceConfigEnv(config, env);
  config.Validate();
  return config;
}

// --- API --------------------------------------------------------------------

CurationApi::CurationApi(CorpusStore &store, ServiceConfig config,
                         std::function<std::int64_t()> clock_ms)
    : store_(store), config_(std::move(config)), clock_(clock_ms ? std::move(clock_ms) : NowMs) {}

bool CurationApi::Authorized(const ApiRequest &request) {
  constexpr std::string_view kBearer = "Bearer ";
  if (!request.authorization.starts_with(kBearer)) return false;
  const std::string token(Trim(std::string_view(request.authorization).substr(kBearer.size())));
  std::lock_guard lock(mu_);
  const auto it = sessions_.find(token);
  if (it == sessions_.end()) return false;
  if (it->second.expires_at <= clock_()) {
    sessions_.erase(it);
    return false;
  }
  return true;
}

bool CurationApi::AllowAdd(const std::string &addr) {
  if (config_.rate_limit == 0) return true;
  std::lock_guard lock(mu_);
  const std::int64_t now = clock_();
  auto &window = recent_adds_[addr];
  while (!window.empty() && window.front() <= now - 60000) window.pop_front();
  if (static_cast<int>(window.size()) >= config_.rate_limit) return false;
  window.push_back(now);
  return true;
}

ApiResponse CurationApi::Handle(const ApiRequest &request) {
  try {
    const std::string &path = request.path;
    const std::string &m = request.method;
    if (m == "OPTIONS") return {204, ""};
    if (path == "/login") {
      if (m != "POST") return Fail(405, "method not allowed");
      return Login(request);
    }
    if (path == "/stats") {
      if (m != "GET") return Fail(405, "method not allowed");
      return Stats();
    }
    if (path == "/pending") {
      if (m != "GET") return Fail(405, "method not allowed");
      if (!Authorized(request)) return Fail(401, "curator login required");
      return PendingQueue();
    }
    if (path == "/similes/search") {
      if (m != "GET") return Fail(405, "method not allowed");
      return SearchSimiles(request, Authorized(request));
    }
    if (path == "/similes") {
      if (m == "GET") return ListSimiles(request, Authorized(request));
      if (m == "POST") return AddSimile(request);
      return Fail(405, "method not allowed");
    }
    if (path.starts_with("/similes/")) {
      const std::string rest = path.substr(9);
      const std::size_t slash = rest.find('/');
      const auto id = ParsePositive(rest.substr(0, slash));
      if (!id) return Fail(404, "no such entry");
      if (slash == std::string::npos) {
        if (m == "GET") return GetSimile(*id, Authorized(request));
        if (m == "PUT") {
          if (!Authorized(request)) return Fail(401, "curator login required");
          return EditSimile(*id, request);
        }
        return Fail(405, "method not allowed");
      }
      const std::string action = rest.substr(slash + 1);
      if (action != "approve" && action != "reject" && action != "reopen") {
        return Fail(404, "unknown endpoint");
      }
      if (m != "POST") return Fail(405, "method not allowed");
      if (!Authorized(request)) return Fail(401, "curator login required");
      return Transition(*id, action);
    }
    return Fail(404, "unknown endpoint");
  } catch (const NotFound &e) {
    return Fail(404, e.what());
  } catch (const Conflict &e) {
    return Fail(409, e.what());
  } catch (const InvalidArgument &e) {
    return Fail(400, e.what());
  } catch (const ParseError &e) {
    return Fail(400, e.what());
  } catch (const std::exception &e) {
    spdlog::error("{} {}: {}", request.method, request.path, e.what());
    return Fail(500, "internal error");
  }
}

ApiResponse CurationApi::Login(const ApiRequest &request) {
  const auto body = ParseObject(request.body);
  if (!body) return Fail(400, "expected a JSON object");
  const auto credential = StringField(*body, "credential");
  if (!credential) return Fail(400, "missing credential");
  if (config_.curator_credential.empty() ||
      !ConstantTimeEquals(*credential, config_.curator_credential)) {
    return Fail(401, "invalid credential");
  }
  const std::string token = NewToken();
  const std::int64_t expires_at = clock_() + std::int64_t{config_.token_ttl_s} * 1000;
  {
    std::lock_guard lock(mu_);
    sessions_[token] = {expires_at};
  }
  return Json(200, {{"token", token}, {"expires_at", expires_at}});
}

ApiResponse CurationApi::ListSimiles(const ApiRequest &request, bool curator) {
  ListFilter filter;
  filter.status = Status::kApproved;
  if (const auto it = request.query.find("status"); it != request.query.end() && !it->second.empty()) {
    if (it->second == "all") {
      filter.status.reset();
    } else {
      filter.status = ParseStatus(it->second);
    }
    if (filter.status != Status::kApproved && !curator) {
      return Fail(401, "curator login required for status '" + it->second + "'");
    }
  }
  if (const auto it = request.query.find("origin"); it != request.query.end() && !it->second.empty()) {
    filter.origin = ParseOrigin(it->second);
  }
  if (const auto it = request.query.find("prefix"); it != request.query.end()) filter.prefix = it->second;
  if (const auto it = request.query.find("page"); it != request.query.end()) {
    const auto page = ParsePositive(it->second);
    if (!page) return Fail(400, "page must be a positive integer");
    filter.page = static_cast<std::size_t>(*page);
  }
  if (const auto it = request.query.find("page_size"); it != request.query.end()) {
    const auto size = ParsePositive(it->second);
    if (!size || *size > 500) return Fail(400, "page_size must be between 1 and 500");
    filter.page_size = static_cast<std::size_t>(*size);
  }
  const EntryPage page = store_.List(filter);
  json entries = json::array();
  for (const CorpusEntry &e : page.entries) entries.push_back(EntryJson(e));
  return Json(200, {{"entries", std::move(entries)},
                    {"total", page.total},
                    {"page", page.page},
                    {"page_size", page.page_size},
                    {"pages", page.pages}});
}

ApiResponse CurationApi::SearchSimiles(const ApiRequest &request, bool curator) {
  const auto q = request.query.find("q");
  if (q == request.query.end() || Trim(q->second).empty()) return Fail(400, "q must not be empty");
  std::optional<Status> status = Status::kApproved;
  if (const auto it = request.query.find("status"); it != request.query.end() && !it->second.empty()) {
    if (it->second == "all") {
      status.reset();
    } else {
      status = ParseStatus(it->second);
    }
    if (status != Status::kApproved && !curator) return Fail(401, "curator login required");
  }
  double threshold = store_.duplicate_threshold();
  if (const auto it = request.query.find("threshold"); it != request.query.end()) {
    try {
      std::size_t used = 0;
      threshold = std::stod(it->second, &used);
      if (used != it->second.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception &) {
      return Fail(400, "threshold must be a number");
    }
    if (!(threshold > 0.0 && threshold <= 1.0)) return Fail(400, "threshold must be in (0, 1]");
  }
  std::vector<SimilarEntry> found;
  try {
    found = store_.Search(q->second, threshold, status);
  } catch (const InvalidArgument &) {
    found.clear();  // punctuation-only query: nothing can match
  }
  return Json(200, {{"query", q->second}, {"results", SimilarJson(found)}});
}

ApiResponse CurationApi::AddSimile(const ApiRequest &request) {
  const auto body = ParseObject(request.body);
  if (!body) return Fail(400, "expected a JSON object");
  const auto text = StringField(*body, "text");
  if (!text || Trim(*text).empty()) return Fail(400, "text must not be empty");
  if (!AllowAdd(request.remote_addr)) return Fail(429, "too many submissions; try again later");
  NewEntry e;
  e.text = *text;
  e.origin = Origin::kManual;
  e.provenance = StringField(*body, "note").value_or("");
  e.actor = request.remote_addr.empty() ? "contributor" : "contributor@" + request.remote_addr;
  const AddResult r = store_.Add(e);
  return Json(201, {{"entry_id", r.id}, {"status", "pending"}, {"similar", SimilarJson(r.similar)}});
}

ApiResponse CurationApi::GetSimile(EntryId id, bool curator) {
  const auto e = store_.Get(id);
  if (!e || (!curator && e->status != Status::kApproved)) return Fail(404, "no such entry");
  return Json(200, EntryJson(*e));
}

ApiResponse CurationApi::Transition(EntryId id, std::string_view action) {
  const Status to = action == "approve" ? Status::kApproved
                    : action == "reject" ? Status::kRejected
                                         : Status::kPending;
  return Json(200, EntryJson(store_.SetStatus(id, to, "curator")));
}

ApiResponse CurationApi::EditSimile(EntryId id, const ApiRequest &request) {
  const auto body = ParseObject(request.body);
  if (!body) return Fail(400, "expected a JSON object");
  const auto text = StringField(*body, "text");
  if (!text || Trim(*text).empty()) return Fail(400, "text must not be empty");
  return Json(200, EntryJson(store_.Edit(id, *text, "curator")));
}

ApiResponse CurationApi::PendingQueue() {
  json entries = json::array();
  for (const CorpusEntry &e : store_.Pending()) entries.push_back(EntryJson(e));
  return Json(200, {{"entries", std::move(entries)}});
}

ApiResponse CurationApi::Stats() {
  const CorpusStats s = store_.Stats();
  json by_status = json::object(), by_origin = json::object(), counts = json::object();
  for (Status st : kAllStatuses) {
    by_status[std::string(StatusName(st))] = s.ByStatus(st);
    for (Origin o : kAllOrigins) counts[std::string(StatusName(st))][std::string(OriginName(o))] = s.Count(st, o);
  }
  for (Origin o : kAllOrigins) by_origin[std::string(OriginName(o))] = s.ByOrigin(o);
  return Json(200, {{"total", s.total},
                    {"by_status", by_status},
                    {"by_origin", by_origin},
                    {"counts", counts},
                    {"seed_mined_overlap", s.seed_mined_overlap}});
}

// --- HTTP server -----------------------------------------------------------

struct CurationServer::Impl {
  Impl(CorpusStore &store, ServiceConfig cfg) : config(cfg), api(store, std::move(cfg)) {}
  ServiceConfig config;
  CurationApi api;
  httplib::Server server;
};

CurationServer::CurationServer(CorpusStore &store, ServiceConfig config)
    : impl_(std::make_unique<Impl>(store, std::move(config))) {
  const auto handler = [this](const httplib::Request &req, httplib::Response &res) {
    ApiRequest r;
    r.method = req.method;
    r.path = req.path;
    for (const auto &[k, v] : req.params) r.query.emplace(k, v);  // first value wins
    r.authorization = req.get_header_value("Authorization");
    r.body = req.body;
    r.remote_addr = req.remote_addr;
    const ApiResponse out = impl_->api.Handle(r);
    res.status = out.status;
    if (!out.body.empty()) res.set_content(out.body, "application/json; charset=utf-8");
    spdlog::debug("{} {} -> {}", req.method, req.path, out.status);
  };
  auto &s = impl_->server;
  s.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                         {"Access-Control-Allow-Headers", "Authorization, Content-Type"},
                         {"Access-Control-Allow-Methods", "GET, POST, PUT, OPTIONS"}});
  s.Get(".*", handler);
  s.Post(".*", handler);
  s.Put(".*", handler);
  s.Options(".*", handler);
  s.Delete(".*", handler);
}

CurationServer::~CurationServer() { Stop(); }

int CurationServer::Bind() {
  const auto &c = impl_->config;
  int port = c.port;
  if (port == 0) {
    port = impl_->server.bind_to_any_port(c.bind);
  } else if (!impl_->server.bind_to_port(c.bind, port)) {
    port = -1;
  }
  if (port < 0) throw IoError("cannot bind " + c.bind + ":" + std::to_string(c.port));
  return port;
}

void CurationServer::Listen() { impl_->server.listen_after_bind(); }

void CurationServer::Stop() {
  if (impl_) impl_->server.stop();
}

bool CurationServer::running() const { return impl_->server.is_running(); }

}  // namespace simile
