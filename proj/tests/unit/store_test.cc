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
#include <string>
#include <thread>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "simile/errors.h"
#include "simile/io.h"
#include "simile/store.h"
#include "support/store_property.h"

namespace simile {
namespace {

struct FakeClock {
  std::int64_t now = 100;
  StoreOptions Options() {
    StoreOptions o;
    o.clock = [this] { return now += 10; };
    return o;
  }
};

std::filesystem::path TempPath(const std::string &name) {
  return std::filesystem::temp_directory_path() / ("simile_store_test_" + name);
}

EntryId AddText(CorpusStore &store, const std::string &text, Origin origin = Origin::kManual) {
  NewEntry e;
  e.text = text;
  e.origin = origin;
  return store.Add(e).id;
}

std::vector<std::string> Texts(const std::vector<CorpusEntry> &entries) {
  std::vector<std::string> out;
  for (const auto &e : entries) out.push_back(e.text);
  return out;
}

TEST_CASE("adding entries and duplicate warnings") {
  FakeClock clock;
  auto store = CorpusStore::InMemory(clock.Options());
  NewEntry e;
  e.text = "  beo   kao sneg ";
  const AddResult first = store->Add(e);
  CHECK(first.similar.empty());
  const auto entry = store->Get(first.id);
  REQUIRE(entry.has_value());
  CHECK(entry->text == "beo kao sneg");
  CHECK(entry->status == Status::kPending);
  CHECK(entry->stem_key == KeyOf("beo kao sneg"));
  CHECK(entry->created_at == 110);
  store->SetStatus(first.id, Status::kApproved, "curator");

  e.text = "bela kao sneg";
  const AddResult second = store->Add(e);
  REQUIRE(second.similar.size() == 1);
  CHECK(second.similar[0].id == first.id);
  CHECK(second.similar[0].similarity == 1.0);
  CHECK(second.similar[0].status == Status::kApproved);
  CHECK(store->size() == 2);

  const AddResult third = store->Add(e);
  REQUIRE(third.similar.size() == 2);
  CHECK(third.similar[0].similarity == 1.0);

  e.text = "   ";
  CHECK_THROWS_AS(store->Add(e), InvalidArgument);
  e.text = "!!!";
  CHECK_THROWS_AS(store->Add(e), InvalidArgument);
}

TEST_CASE("status transitions") {
  auto store = CorpusStore::InMemory();
  const EntryId a = AddText(*store, "radi kao konj");
  const EntryId b = AddText(*store, "radi kao pravnik");
  store->SetStatus(a, Status::kApproved, "curator");
  store->SetStatus(b, Status::kRejected, "curator");
  ListFilter pub;
  pub.status = Status::kApproved;
  CHECK(Texts(store->List(pub).entries) == std::vector<std::string>{"radi kao konj"});
  CHECK(store->Get(b)->status == Status::kRejected);

  try {
    store->SetStatus(a, Status::kRejected, "curator");
    FAIL("expected Conflict");
  } catch (const Conflict &err) {
    CHECK(std::string(err.what()).find("approved -> rejected") != std::string::npos);
  }
  CHECK_THROWS_AS(store->SetStatus(a, Status::kApproved, "curator"), Conflict);
  CHECK_THROWS_AS(store->SetStatus(99, Status::kApproved, "curator"), NotFound);

  store->SetStatus(a, Status::kPending, "curator");
  store->SetStatus(a, Status::kRejected, "curator");
  store->SetStatus(b, Status::kPending, "curator");
  const auto history = store->Get(a)->history;
  REQUIRE(history.size() == 4);
  CHECK(history[0].action == "create");
  CHECK(history[3].from == "pending");
  CHECK(history[3].to == "rejected");
  CHECK(history[3].actor == "curator");
}

TEST_CASE("edits recompute the stem key and keep the old text") {
  auto store = CorpusStore::InMemory();
  const EntryId id = AddText(*store, "radi kao konj");
  const CorpusEntry edited = store->Edit(id, "spava kao top", "curator");
  CHECK(edited.text == "spava kao top");
  CHECK(edited.stem_key == KeyOf("spava kao top"));
  CHECK(edited.history.back().action == "edit");
  CHECK(edited.history.back().from == "radi kao konj");
  CHECK(store->FindExact("radi kao konj").empty());
  CHECK(store->FindExact("Spava ko top") == std::vector<EntryId>{id});
  CHECK_THROWS_AS(store->Edit(id, " ", "curator"), InvalidArgument);
  CHECK_THROWS_AS(store->Edit(42, "x kao y", "curator"), NotFound);
}

TEST_CASE("listing is alphabetical, filtered and paged") {
  auto store = CorpusStore::InMemory();
  for (const char *t : {"čvrst kao stena", "crven kao krv", "ćuti kao riba", "beo kao sneg",
                        "brz kao munja"}) {
    store->SetStatus(AddText(*store, t), Status::kApproved, "c");
  }
  AddText(*store, "bled kao krpa");
  ListFilter f;
  f.status = Status::kApproved;
  CHECK(Texts(store->List(f).entries) ==
        std::vector<std::string>{"beo kao sneg", "brz kao munja", "crven kao krv",
                                 "čvrst kao stena", "ćuti kao riba"});
  f.prefix = "B";
  CHECK(Texts(store->List(f).entries) ==
        std::vector<std::string>{"beo kao sneg", "brz kao munja"});
  f.prefix.clear();
  f.status.reset();
  f.page_size = 2;
  std::vector<std::string> all;
  std::size_t pages = 0;
  for (std::size_t p = 1; p <= 4; ++p) {
    f.page = p;
    const EntryPage page = store->List(f);
    pages = page.pages;
    CHECK(page.total == 6);
    for (const auto &e : page.entries) all.push_back(e.text);
  }
  CHECK(pages == 3);
  CHECK(all.size() == 6);
  f.page = 0;
  CHECK_THROWS_AS(store->List(f), InvalidArgument);
  f.page = 1;
  f.origin = Origin::kSeed;
  CHECK(store->List(f).entries.empty());
}

TEST_CASE("pending queue is oldest first") {
  FakeClock clock;
  auto store = CorpusStore::InMemory(clock.Options());
  CHECK(store->Pending().empty());
  const EntryId a = AddText(*store, "radi kao konj");
  const EntryId b = AddText(*store, "spava kao top");
  const EntryId c = AddText(*store, "lep kao cvet");
  store->SetStatus(a, Status::kApproved, "c");
  store->SetStatus(a, Status::kPending, "c");
  auto queue = store->Pending();
  REQUIRE(queue.size() == 3);
  CHECK(queue[0].id == a);
  CHECK(queue[1].id == b);
  CHECK(queue[2].id == c);
  store->SetStatus(queue[0].id, Status::kApproved, "c");
  CHECK(store->Pending().size() == 2);
}

TEST_CASE("search ignores inflection and connector variants") {
  auto store = CorpusStore::InMemory();
  const EntryId a = AddText(*store, "beo kao sneg");
  const EntryId b = AddText(*store, "radi kao konj");
  store->SetStatus(a, Status::kApproved, "c");
  auto hits = store->Search("bela kao sneg", 0.6, Status::kApproved);
  REQUIRE(hits.size() == 1);
  CHECK(hits[0].id == a);
  CHECK(store->Search("radi k'o konj", 0.6, Status::kApproved).empty());
  hits = store->Search("radi k'o konj", 0.6);
  REQUIRE(hits.size() == 1);
  CHECK(hits[0].id == b);
  CHECK(store->Search("zeleno kao trava", 0.6).empty());
  CHECK_THROWS_AS(store->Search("", 0.6), InvalidArgument);
}

TEST_CASE("seed import reports overlap with mined entries") {
  auto store = CorpusStore::InMemory();
  AddText(*store, "radi kao konj", Origin::kMined);
  AddText(*store, "go kao pištolj", Origin::kManual);
  const auto lines = SplitLines(ReadFile(SIMILE_FIXTURE_DIR "/seed.txt"));
  REQUIRE(lines.size() == 10);
  const ImportReport report = store->ImportSeed(lines, "seed.txt");
  CHECK(report.added == 10);
  CHECK(report.overlap == 1);
  const CorpusStats stats = store->Stats();
  CHECK(stats.Count(Status::kApproved, Origin::kSeed) == 10);
  CHECK(stats.seed_mined_overlap == 1);
  CHECK(stats.total == 12);
}

TEST_CASE("stats partition the table") {
  auto store = CorpusStore::InMemory();
  CorpusStats empty = store->Stats();
  CHECK(empty.total == 0);
  CHECK(empty.ByStatus(Status::kApproved) == 0);
  store->SetStatus(AddText(*store, "radi kao konj", Origin::kMined), Status::kApproved, "c");
  store->SetStatus(AddText(*store, "lep kao cvet", Origin::kManual), Status::kApproved, "c");
  store->SetStatus(AddText(*store, "radi kao pravnik", Origin::kMined), Status::kRejected, "c");
  AddText(*store, "spava kao top", Origin::kMined);
  store->ImportSeed({"beo kao sneg"}, "s");
  const CorpusStats s = store->Stats();
  CHECK(s.ByStatus(Status::kApproved) == s.Count(Status::kApproved, Origin::kMined) +
                                             s.Count(Status::kApproved, Origin::kManual) +
                                             s.Count(Status::kApproved, Origin::kSeed));
  CHECK(s.ByStatus(Status::kApproved) == 3);
  CHECK(s.ByStatus(Status::kPending) == 1);
  CHECK(s.ByStatus(Status::kRejected) == 1);
  CHECK(s.ByOrigin(Origin::kMined) == 3);
  CHECK(s.total == 5);
}

TEST_CASE("export approved entries") {
  auto store = CorpusStore::InMemory();
  NewEntry e;
  e.text = "radi kao konj";
  e.origin = Origin::kMined;
  e.provenance = "doc1:42";
  e.classifier_score = 1.5;
  store->SetStatus(store->Add(e).id, Status::kApproved, "c");
  store->SetStatus(AddText(*store, "beo kao sneg"), Status::kApproved, "c");
  AddText(*store, "lep kao cvet");
  CHECK(store->ExportText() == "beo kao sneg\nradi kao konj\n");
  const auto lines = SplitLines(store->ExportJsonl());
  REQUIRE(lines.size() == 2);
  const auto j = nlohmann::json::parse(lines[1]);
  CHECK(j["text"] == "radi kao konj");
  CHECK(j["provenance"] == "doc1:42");
  CHECK(j["origin"] == "mined");
  CHECK(j["classifier_score"] == 1.5);
  CHECK(j["stem_key"] == "ka konj rad");
  CHECK(nlohmann::json::parse(lines[0])["classifier_score"].is_null());
}

TEST_CASE("file store persists and replays") {
  const auto path = TempPath("persist.log");
  std::filesystem::remove(path);
  FakeClock clock;
  EntryId id;
  {
    auto store = CorpusStore::Open(path, clock.Options());
    NewEntry e;
    e.text = "radi kao\tkonj";
    e.provenance = "line\nbreak";
    e.classifier_score = -0.25;
    id = store->Add(e).id;
    store->SetStatus(id, Status::kApproved, "curator");
    store->Edit(id, "radi ko konj", "curator");
  }
  {
    auto store = CorpusStore::Open(path, clock.Options());
    const auto e = store->Get(id);
    REQUIRE(e.has_value());
    CHECK(e->text == "radi ko konj");
    CHECK(e->provenance == "line\nbreak");
    CHECK(e->classifier_score == -0.25);
    CHECK(e->status == Status::kApproved);
    CHECK(e->history.size() == 3);
    CHECK(AddText(*store, "lep kao cvet") == id + 1);
  }
  // A torn last record is dropped on open.
  {
    std::ofstream out(path, std::ios::app);
    out << "status\t1\t999\tcur";
  }
  CHECK(CorpusStore::Open(path)->size() == 2);
  std::filesystem::remove(path);
}

TEST_CASE("corrupt store files are rejected") {
  const auto path = TempPath("corrupt.log");
  WriteFileAtomic(path, "NOT-A-STORE\n");
  CHECK_THROWS_AS(CorpusStore::Open(path), ParseError);
  WriteFileAtomic(path, "SIMILE-STORE\t1\nadd\t1\t5\ta\tmined\t-\tp\tradi kao konj\n"
                        "status\t1\t6\ta\tpending\tbogus\n");
  try {
    CorpusStore::Open(path);
    FAIL("expected ParseError");
  } catch (const ParseError &e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  WriteFileAtomic(path, "SIMILE-STORE\t1\nadd\t1\t5\ta\tmined\t-\tp\tradi kao konj\n"
                        "status\t1\t6\ta\tpending\tapproved\nstatus\t1\t7\ta\tapproved\trejected\n");
  CHECK_THROWS_AS(CorpusStore::Open(path), ParseError);
  std::filesystem::remove(path);
}

TEST_CASE("lifecycle property over random operations") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto report = testing::RunStoreLifecycle(TempPath("property.log"), seed, 150);
    CHECK(report.violations.empty());
    for (const auto &v : report.violations) MESSAGE(v);
    CHECK(report.rejected_transitions > 0);
  }
}

TEST_CASE("concurrent readers and one writer") {
  auto store = CorpusStore::InMemory();
  std::atomic<bool> done{false};
  std::vector<std::thread> readers;
  std::atomic<int> reads{0};
  for (int r = 0; r < 3; ++r) {
    readers.emplace_back([&] {
      while (!done) {
        const auto stats = store->Stats();
        if (stats.total != static_cast<std::int64_t>(stats.ByStatus(Status::kPending) +
                                                     stats.ByStatus(Status::kApproved) +
                                                     stats.ByStatus(Status::kRejected))) {
          std::abort();
        }
        store->List({});
        ++reads;
      }
    });
  }
  for (int i = 0; i < 200; ++i) {
    const EntryId id = AddText(*store, "radi kao konj " + std::to_string(i));
    if (i % 2) store->SetStatus(id, Status::kApproved, "c");
  }
  done = true;
  for (auto &t : readers) t.join();
  CHECK(store->size() == 200);
  CHECK(reads > 0);
}

}  // namespace
}  // namespace simile
