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

#ifndef SIMILE_SERVICE_H_
#define SIMILE_SERVICE_H_

#include <cstdint>
#include <deque>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>

#include "simile/store.h"

namespace simile {

struct ServiceConfig {
  std::string bind = "127.0.0.1";
  int port = 8080;
  std::string store_path = "simile-store.tsv";
  // Empty disables curator login altogether.
  std::string curator_credential;
  // Public adds per client address per minute; 0 means unlimited.
  int rate_limit = 0;
  double dedup_threshold = 0.6;
  int token_ttl_s = 3600;

  void Validate() const;
};

using EnvLookup = std::function<std::optional<std::string>(const char *name)>;
EnvLookup ProcessEnv();

// Precedence: environment > file > defaults.
ServiceConfig LoadServiceConfig(const std::optional<std::filesystem::path> &file,
                                const EnvLookup &env = ProcessEnv());
// Applies the keys present in a JSON object on top of `config`.
void ApplyServiceConfigJson(ServiceConfig &config, std::string_view json_text);
void ApplyServiceConfigEnv(ServiceConfig &config, const EnvLookup &env);

struct ApiRequest {
  std::string method;
  std::string path;
  std::map<std::string, std::string> query;
  std::string authorization;  // raw Authorization header
  std::string body;
  std::string remote_addr;
};

struct ApiResponse {
  int status = 200;
  std::string body;  // JSON
};

// Transport-independent request handling; the HTTP server and the tests
// both go through Handle().
class CurationApi {
 public:
  CurationApi(CorpusStore &store, ServiceConfig config,
              std::function<std::int64_t()> clock_ms = nullptr);

  ApiResponse Handle(const ApiRequest &request);

 private:
  struct Session {
    std::int64_t expires_at;
  };

  bool Authorized(const ApiRequest &request);
  bool AllowAdd(const std::string &addr);

  ApiResponse Login(const ApiRequest &request);
  ApiResponse ListSimiles(const ApiRequest &request, bool curator);
  ApiResponse SearchSimiles(const ApiRequest &request, bool curator);
  ApiResponse AddSimile(const ApiRequest &request);
  ApiResponse GetSimile(EntryId id, bool curator);
  ApiResponse Transition(EntryId id, std::string_view action);
  ApiResponse EditSimile(EntryId id, const ApiRequest &request);
  ApiResponse PendingQueue();
  ApiResponse Stats();

  CorpusStore &store_;
  ServiceConfig config_;
  std::function<std::int64_t()> clock_;
  std::mutex mu_;
  std::map<std::string, Session> sessions_;
  std::map<std::string, std::deque<std::int64_t>> recent_adds_;
};

// httplib front end. Bind() then Listen() (blocking) from any thread;
// Stop() from another.
class CurationServer {
 public:
  CurationServer(CorpusStore &store, ServiceConfig config);
  ~CurationServer();

  // Returns the bound port (useful with port 0).
  int Bind();
  void Listen();
  void Stop();
  bool running() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace simile

#endif  // SIMILE_SERVICE_H_
