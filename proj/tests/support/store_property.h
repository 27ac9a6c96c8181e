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

#ifndef SIMILE_TESTS_SUPPORT_STORE_PROPERTY_H_
#define SIMILE_TESTS_SUPPORT_STORE_PROPERTY_H_

#include <filesystem>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "simile/errors.h"
#include "simile/store.h"

namespace simile::testing {

struct PropertyReport {
  int operations = 0;
  int rejected_transitions = 0;
  std::vector<std::string> violations;
};

// Drives a file-backed store with random operations and checks it against a
// plain status map after every step, then once more after reopening.
inline PropertyReport RunStoreLifecycle(const std::filesystem::path &path, std::uint64_t seed,
                                        int steps) {
  static const std::vector<std::string> kPhrases = {
      "radi kao konj", "beo kao sneg", "bela kao sneg", "lep kao cvet", "spava kao top",
      "smorio se kao zmaj", "radi kao pravnik", "ćuti kao riba", "hladan kao led",
      "jak kao bik", "crven kao krv", "brz kao munja", "mudar kao sova"};
  PropertyReport report;
  std::mt19937_64 rng(seed);
  std::int64_t now = 1000;
  StoreOptions options;
  options.clock = [&now] { return ++now; };
  std::filesystem::remove(path);
  auto store = CorpusStore::Open(path, options);
  std::map<EntryId, Status> model;
  std::size_t last_size = 0;
  const auto fail = [&](const std::string &what) {
    report.violations.push_back("step " + std::to_string(report.operations) + ": " + what);
  };

  const auto check = [&](const CorpusStore &s) {
    if (s.size() < last_size) fail("entry count decreased");
    last_size = s.size();
    if (s.size() != model.size()) fail("entry count differs from model");
    std::set<EntryId> approved;
    for (const CorpusEntry &e : s.All()) {
      const auto it = model.find(e.id);
      if (it == model.end() || it->second != e.status) fail("status differs for " + std::to_string(e.id));
      if (!(e.stem_key == KeyOf(e.text))) fail("stale stem key for " + std::to_string(e.id));
      std::string last_status;
      for (const auto &h : e.history) {
        if (h.action != "edit") last_status = h.to;
      }
      if (last_status != StatusName(e.status)) fail("history disagrees for " + std::to_string(e.id));
      if (e.status == Status::kApproved) approved.insert(e.id);
    }
    std::set<EntryId> listed;
    ListFilter filter;
    filter.status = Status::kApproved;
    filter.page_size = 3;
    for (std::size_t page = 1;; ++page) {
      filter.page = page;
      const EntryPage p = s.List(filter);
      for (const auto &e : p.entries) {
        if (!listed.insert(e.id).second) fail("entry listed twice");
      }
      if (page >= p.pages) break;
    }
    if (listed != approved) fail("public listing differs from approved set");
  };

  for (int step = 0; step < steps; ++step) {
    ++report.operations;
    const int op = static_cast<int>(rng() % 10);
    if (model.empty() || op < 3) {
      NewEntry e;
      e.text = kPhrases[rng() % kPhrases.size()];
      e.origin = kAllOrigins[rng() % 3];
      e.provenance = "p" + std::to_string(step);
      model[store->Add(e).id] = Status::kPending;
    } else if (op < 9) {
      auto it = model.begin();
      std::advance(it, rng() % model.size());
      const Status to = kAllStatuses[rng() % 3];
      const bool legal = IsLegalTransition(it->second, to);
      try {
        store->SetStatus(it->first, to, "curator");
        if (!legal) fail("illegal transition accepted");
        it->second = to;
      } catch (const Conflict &) {
        ++report.rejected_transitions;
        if (legal) fail("legal transition refused");
      }
    } else {
      auto it = model.begin();
      std::advance(it, rng() % model.size());
      store->Edit(it->first, kPhrases[rng() % kPhrases.size()], "curator");
    }
    check(*store);
  }
  const auto before = store->All();
  store.reset();
  store = CorpusStore::Open(path, options);
  check(*store);
  const auto after = store->All();
  if (before.size() != after.size()) fail("reopen changed entry count");
  for (std::size_t i = 0; i < before.size() && i < after.size(); ++i) {
    if (before[i].text != after[i].text || before[i].status != after[i].status ||
        before[i].history.size() != after[i].history.size() ||
        before[i].updated_at != after[i].updated_at) {
      fail("reopen changed entry " + std::to_string(before[i].id));
    }
  }
  std::filesystem::remove(path);
  return report;
}

}  // namespace simile::testing

#endif  // SIMILE_TESTS_SUPPORT_STORE_PROPERTY_H_
