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

#ifndef SIMILE_STORE_H_
#define SIMILE_STORE_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "simile/dedup.h"

namespace simile {

enum class Status { kPending, kApproved, kRejected };
enum class Origin { kMined, kManual, kSeed };

inline constexpr std::array<Status, 3> kAllStatuses = {Status::kPending, Status::kApproved,
                                                       Status::kRejected};
inline constexpr std::array<Origin, 3> kAllOrigins = {Origin::kMined, Origin::kManual,
                                                      Origin::kSeed};

std::string_view StatusName(Status status);
std::string_view OriginName(Origin origin);
// Throw InvalidArgument on unknown names.
Status ParseStatus(std::string_view name);
Origin ParseOrigin(std::string_view name);

// pending->approved, pending->rejected, rejected->pending, approved->pending.
bool IsLegalTransition(Status from, Status to);

using EntryId = DedupIndex::EntryId;

struct HistoryRecord {
  std::int64_t timestamp = 0;
  std::string actor;
  // "create", "status" or "edit". For "status", from/to are status names;
  // for "edit", the old and new text; for "create", to is the status.
  std::string action;
  std::string from;
  std::string to;
};

struct CorpusEntry {
  EntryId id = 0;
  std::string text;
  StemKey stem_key;
  Status status = Status::kPending;
  Origin origin = Origin::kManual;
  std::string provenance;
  std::optional<double> classifier_score;
  std::int64_t created_at = 0;
  std::int64_t updated_at = 0;
  std::vector<HistoryRecord> history;
};

struct SimilarEntry {
  EntryId id;
  std::string text;
  Status status;
  double similarity;
};

struct NewEntry {
  std::string text;
  Origin origin = Origin::kManual;
  std::string provenance;
  std::optional<double> classifier_score;
  std::string actor = "anonymous";
};

struct AddResult {
  EntryId id;
  // Existing entries at or above the duplicate threshold, best first.
  std::vector<SimilarEntry> similar;
};

struct ListFilter {
  std::optional<Status> status;
  std::optional<Origin> origin;
  // Matched against the normalized text.
  std::string prefix;
  // 1-based.
  std::size_t page = 1;
  std::size_t page_size = 50;
};

struct EntryPage {
  std::vector<CorpusEntry> entries;
  std::size_t total = 0;
  std::size_t page = 1;
  std::size_t page_size = 50;
  std::size_t pages = 0;
};

struct CorpusStats {
  // [status][origin]
  std::array<std::array<std::int64_t, 3>, 3> counts{};
  std::int64_t total = 0;
  // Seed entries whose stem key equals the key of some mined entry.
  std::int64_t seed_mined_overlap = 0;

  std::int64_t Count(Status s, Origin o) const {
    return counts[static_cast<int>(s)][static_cast<int>(o)];
  }
  std::int64_t ByStatus(Status s) const;
  std::int64_t ByOrigin(Origin o) const;
};

struct ImportReport {
  std::int64_t added = 0;
  // Imported phrases whose stem key matched an existing mined entry.
  std::int64_t overlap = 0;
  // Blank or comment lines.
  std::int64_t skipped = 0;
};

struct StoreOptions {
  double duplicate_threshold = kDefaultDuplicateThreshold;
  // Milliseconds since the epoch; replaceable for tests.
  std::function<std::int64_t()> clock;
};

// System of record for simile entries. The backing file is an append-only
// event log, replayed on open:
//
//   SIMILE-STORE<TAB>1
//   add<TAB>id<TAB>ts<TAB>actor<TAB>origin<TAB>score|-<TAB>provenance<TAB>text
//   status<TAB>id<TAB>ts<TAB>actor<TAB>from<TAB>to
//   edit<TAB>id<TAB>ts<TAB>actor<TAB>new text
//
// Fields are escaped with EscapeField. Entries are never deleted. All
// methods are thread-safe; mutations are serialized through one writer.
class CorpusStore {
 public:
  // Opens or creates the store file. Throws ParseError on a corrupt log.
  static std::unique_ptr<CorpusStore> Open(const std::filesystem::path &path,
                                           StoreOptions options = {});
  // Nothing is persisted.
  static std::unique_ptr<CorpusStore> InMemory(StoreOptions options = {});

  ~CorpusStore();

  // New entries start pending. Throws InvalidArgument on empty text.
  AddResult Add(const NewEntry &entry);
  // Throws NotFound, or Conflict naming the illegal transition.
  CorpusEntry SetStatus(EntryId id, Status status, std::string_view actor);
  // Replaces the text and recomputes the stem key.
  CorpusEntry Edit(EntryId id, std::string_view text, std::string_view actor);

  std::optional<CorpusEntry> Get(EntryId id) const;
  EntryPage List(const ListFilter &filter) const;
  // Pending entries, oldest first.
  std::vector<CorpusEntry> Pending() const;
  // Entries similar to `query`, optionally restricted to one status.
  std::vector<SimilarEntry> Search(std::string_view query, double threshold,
                                   std::optional<Status> status = std::nullopt) const;
  // Ids of entries whose stem key equals that of `text`.
  std::vector<EntryId> FindExact(std::string_view text) const;

  // Adds each non-blank line as an approved seed entry.
  ImportReport ImportSeed(const std::vector<std::string> &lines, std::string_view source_name,
                          std::string_view actor = "import");

  CorpusStats Stats() const;
  std::size_t size() const;
  std::vector<CorpusEntry> All() const;

  // Approved entries: one text per line, and JSON lines with provenance.
  std::string ExportText() const;
  std::string ExportJsonl() const;

  double duplicate_threshold() const { return options_.duplicate_threshold; }

 private:
  explicit CorpusStore(StoreOptions options);

  void Replay(std::string_view contents);
  void Append(const std::string &record);
  std::int64_t Now() const;

  // Unlocked helpers.
  EntryId ApplyAdd(EntryId id, std::int64_t ts, const std::string &actor, Origin origin,
                   std::optional<double> score, std::string provenance, std::string text);
  void ApplyStatus(CorpusEntry &entry, std::int64_t ts, const std::string &actor, Status to);
  void ApplyEdit(CorpusEntry &entry, std::int64_t ts, const std::string &actor, std::string text);
  CorpusEntry &Lookup(EntryId id);
  std::vector<SimilarEntry> SimilarLocked(const StemKey &key, double threshold,
                                          std::optional<Status> status) const;

  // Readers pass through the turnstile before taking the shared lock, so a
  // waiting writer is not starved by a stream of readers.
  std::shared_lock<std::shared_mutex> ReadLock() const;
  std::unique_lock<std::shared_mutex> WriteLock();

  StoreOptions options_;
  mutable std::mutex turnstile_;
  mutable std::shared_mutex mu_;
  std::map<EntryId, CorpusEntry> entries_;
  DedupIndex index_;
  EntryId next_id_ = 1;
  std::filesystem::path path_;
  std::ofstream log_;
};

std::string CanonicalText(std::string_view text);

}  // namespace simile

#endif  // SIMILE_STORE_H_
