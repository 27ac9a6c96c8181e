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

#include "simile/store.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <mutex>
#include <sstream>

#include "json.hpp"
#include "simile/errors.h"
#include "simile/io.h"
#include "simile/text.h"

namespace simile {
namespace {

constexpr std::string_view kStoreMagic = "SIMILE-STORE";
constexpr std::string_view kStoreVersion = "1";

std::int64_t SystemMillis() {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::system_clock::now().time_since_epoch())
      .count();
}

std::string FormatScore(const std::optional<double> &score) {
  if (!score) return "-";
  std::ostringstream out;
  out.precision(17);
  out << *score;
  return out.str();
}

std::int64_t ParseInt(const std::string &s, int line_no) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception &) {
  }
  throw ParseError("store line " + std::to_string(line_no) + ": bad integer '" + s + "'");
}

std::optional<double> ParseScore(const std::string &s, int line_no) {
  if (s == "-") return std::nullopt;
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size() && std::isfinite(v)) return v;
  } catch (const std::exception &) {
  }
  throw ParseError("store line " + std::to_string(line_no) + ": bad score '" + s + "'");
}

}  // namespace

std::string_view StatusName(Status status) {
  switch (status) {
    case Status::kPending: return "pending";
    case Status::kApproved: return "approved";
    case Status::kRejected: return "rejected";
  }
  return "pending";
}

std::string_view OriginName(Origin origin) {
  switch (origin) {
    case Origin::kMined: return "mined";
    case Origin::kManual: return "manual";
    case Origin::kSeed: return "seed";
  }
  return "manual";
}

Status ParseStatus(std::string_view name) {
  for (Status s : kAllStatuses) {
    if (StatusName(s) == name) return s;
  }
  throw InvalidArgument("unknown status '" + std::string(name) + "'");
}

Origin ParseOrigin(std::string_view name) {
  for (Origin o : kAllOrigins) {
    if (OriginName(o) == name) return o;
  }
  throw InvalidArgument("unknown origin '" + std::string(name) + "'");
}

bool IsLegalTransition(Status from, Status to) {
  if (from == Status::kPending) return to == Status::kApproved || to == Status::kRejected;
  return to == Status::kPending;
}

std::string CanonicalText(std::string_view text) {
  return Join(SplitWhitespace(SanitizeUtf8(text)), " ");
}

std::int64_t CorpusStats::ByStatus(Status s) const {
  std::int64_t n = 0;
  for (Origin o : kAllOrigins) n += Count(s, o);
  return n;
}

std::int64_t CorpusStats::ByOrigin(Origin o) const {
  std::int64_t n = 0;
  for (Status s : kAllStatuses) n += Count(s, o);
  return n;
}

CorpusStore::CorpusStore(StoreOptions options) : options_(std::move(options)) {
  if (!(options_.duplicate_threshold > 0 && options_.duplicate_threshold <= 1)) {
    throw InvalidArgument("duplicate threshold must be in (0, 1]");
  }
  if (!options_.clock) options_.clock = SystemMillis;
}

CorpusStore::~CorpusStore() = default;

std::unique_ptr<CorpusStore> CorpusStore::InMemory(StoreOptions options) {
  return std::unique_ptr<CorpusStore>(new CorpusStore(std::move(options)));
}

std::unique_ptr<CorpusStore> CorpusStore::Open(const std::filesystem::path &path,
                                               StoreOptions options) {
  std::unique_ptr<CorpusStore> store(new CorpusStore(std::move(options)));
  store->path_ = path;
  const std::string header = std::string(kStoreMagic) + "\t" + std::string(kStoreVersion) + "\n";
  if (std::filesystem::exists(path)) {
    std::string contents = ReadFile(path);
    // A torn final record (crash mid-write) is dropped.
    const std::size_t last = contents.rfind('\n');
    const std::size_t keep = last == std::string::npos ? 0 : last + 1;
    if (keep != contents.size()) {
      contents.resize(keep);
      std::filesystem::resize_file(path, keep);
    }
    if (contents.empty()) {
      WriteFileAtomic(path, header);
    } else {
      store->Replay(contents);
    }
  } else {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    WriteFileAtomic(path, header);
  }
  store->log_.open(path, std::ios::app | std::ios::binary);
  if (!store->log_) throw IoError("cannot open store for append: " + path.string());
  return store;
}

void CorpusStore::Replay(std::string_view contents) {
  const std::vector<std::string> lines = SplitLines(contents);
  if (lines.empty() || lines[0] != std::string(kStoreMagic) + "\t" + std::string(kStoreVersion)) {
    throw ParseError("not a simile store (bad header): " + path_.string());
  }
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const int line_no = static_cast<int>(i + 1);
    const std::vector<std::string> f = SplitTabs(lines[i]);
    const auto need = [&](std::size_t n) {
      if (f.size() != n) {
        throw ParseError("store line " + std::to_string(line_no) + ": expected " +
                         std::to_string(n) + " fields for '" + f[0] + "'");
      }
    };
    try {
      if (f[0] == "add") {
        need(8);
        const EntryId id = ParseInt(f[1], line_no);
        if (entries_.count(id)) throw ParseError("duplicate id");
        ApplyAdd(id, ParseInt(f[2], line_no), UnescapeField(f[3]), ParseOrigin(f[4]),
                 ParseScore(f[5], line_no), UnescapeField(f[6]), UnescapeField(f[7]));
      } else if (f[0] == "status") {
        need(6);
        CorpusEntry &e = Lookup(ParseInt(f[1], line_no));
        if (ParseStatus(f[4]) != e.status) throw ParseError("status mismatch");
        ApplyStatus(e, ParseInt(f[2], line_no), UnescapeField(f[3]), ParseStatus(f[5]));
      } else if (f[0] == "edit") {
        need(5);
        CorpusEntry &e = Lookup(ParseInt(f[1], line_no));
        ApplyEdit(e, ParseInt(f[2], line_no), UnescapeField(f[3]), UnescapeField(f[4]));
      } else {
        throw ParseError("unknown record '" + f[0] + "'");
      }
    } catch (const ParseError &e) {
      const std::string what = e.what();
      if (what.rfind("store line", 0) == 0) throw;
      throw ParseError("store line " + std::to_string(line_no) + ": " + what);
    } catch (const Error &e) {
      throw ParseError("store line " + std::to_string(line_no) + ": " + e.what());
    }
  }
}

void CorpusStore::Append(const std::string &record) {
  if (!log_.is_open()) return;
  log_ << record << '\n';
  log_.flush();
  if (!log_) throw IoError("write to store failed: " + path_.string());
}

std::shared_lock<std::shared_mutex> CorpusStore::ReadLock() const {
  std::lock_guard turn(turnstile_);
  return std::shared_lock(mu_);
}

std::unique_lock<std::shared_mutex> CorpusStore::WriteLock() {
  std::lock_guard turn(turnstile_);
  return std::unique_lock(mu_);
}

std::int64_t CorpusStore::Now() const { return options_.clock(); }

CorpusEntry &CorpusStore::Lookup(EntryId id) {
  const auto it = entries_.find(id);
  if (it == entries_.end()) throw NotFound("no entry with id " + std::to_string(id));
  return it->second;
}

EntryId CorpusStore::ApplyAdd(EntryId id, std::int64_t ts, const std::string &actor,
                              Origin origin, std::optional<double> score,
                              std::string provenance, std::string text) {
  CorpusEntry e;
  e.id = id;
  e.stem_key = KeyOf(text);
  e.text = std::move(text);
  e.origin = origin;
  e.provenance = std::move(provenance);
  e.classifier_score = score;
  e.created_at = e.updated_at = ts;
  e.history.push_back({ts, actor, "create", "", std::string(StatusName(Status::kPending))});
  index_.Add(id, e.stem_key);
  entries_.emplace(id, std::move(e));
  next_id_ = std::max(next_id_, id + 1);
  return id;
}

void CorpusStore::ApplyStatus(CorpusEntry &entry, std::int64_t ts, const std::string &actor,
                              Status to) {
  if (!IsLegalTransition(entry.status, to)) {
    throw Conflict("illegal transition " + std::string(StatusName(entry.status)) + " -> " +
                   std::string(StatusName(to)) + " for entry " + std::to_string(entry.id));
  }
  entry.history.push_back({ts, actor, "status", std::string(StatusName(entry.status)),
                           std::string(StatusName(to))});
  entry.status = to;
  entry.updated_at = ts;
}

void CorpusStore::ApplyEdit(CorpusEntry &entry, std::int64_t ts, const std::string &actor,
                            std::string text) {
  StemKey key = KeyOf(text);
  entry.history.push_back({ts, actor, "edit", entry.text, text});
  entry.text = std::move(text);
  entry.stem_key = std::move(key);
  entry.updated_at = ts;
  index_.Add(entry.id, entry.stem_key);
}

std::vector<SimilarEntry> CorpusStore::SimilarLocked(const StemKey &key, double threshold,
                                                     std::optional<Status> status) const {
  std::vector<SimilarEntry> out;
  for (const DedupIndex::Match &m : index_.FindSimilar(key, threshold)) {
    const CorpusEntry &e = entries_.at(m.id);
    if (status && e.status != *status) continue;
    out.push_back({e.id, e.text, e.status, m.similarity});
  }
  return out;
}

AddResult CorpusStore::Add(const NewEntry &entry) {
  std::string text = CanonicalText(entry.text);
  if (text.empty()) throw InvalidArgument("simile text is empty");
  const StemKey key = KeyOf(text);  // throws on text without words
  auto lock = WriteLock();
  AddResult result;
  result.similar = SimilarLocked(key, options_.duplicate_threshold, std::nullopt);
  const std::int64_t ts = Now();
  const EntryId id = next_id_;
  Append("add\t" + std::to_string(id) + "\t" + std::to_string(ts) + "\t" +
         EscapeField(entry.actor) + "\t" + std::string(OriginName(entry.origin)) + "\t" +
         FormatScore(entry.classifier_score) + "\t" + EscapeField(entry.provenance) + "\t" +
         EscapeField(text));
  result.id = ApplyAdd(id, ts, entry.actor, entry.origin, entry.classifier_score,
                       entry.provenance, std::move(text));
  return result;
}

CorpusEntry CorpusStore::SetStatus(EntryId id, Status status, std::string_view actor) {
  auto lock = WriteLock();
  CorpusEntry &e = Lookup(id);
  if (!IsLegalTransition(e.status, status)) {
    throw Conflict("illegal transition " + std::string(StatusName(e.status)) + " -> " +
                   std::string(StatusName(status)) + " for entry " + std::to_string(id));
  }
  const std::int64_t ts = Now();
  Append("status\t" + std::to_string(id) + "\t" + std::to_string(ts) + "\t" +
         EscapeField(actor) + "\t" + std::string(StatusName(e.status)) + "\t" +
         std::string(StatusName(status)));
  ApplyStatus(e, ts, std::string(actor), status);
  return e;
}

CorpusEntry CorpusStore::Edit(EntryId id, std::string_view text, std::string_view actor) {
  std::string canonical = CanonicalText(text);
  if (canonical.empty()) throw InvalidArgument("simile text is empty");
  KeyOf(canonical);
  auto lock = WriteLock();
  CorpusEntry &e = Lookup(id);
  const std::int64_t ts = Now();
  Append("edit\t" + std::to_string(id) + "\t" + std::to_string(ts) + "\t" + EscapeField(actor) +
         "\t" + EscapeField(canonical));
  ApplyEdit(e, ts, std::string(actor), std::move(canonical));
  return e;
}

std::optional<CorpusEntry> CorpusStore::Get(EntryId id) const {
  auto lock = ReadLock();
  const auto it = entries_.find(id);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

EntryPage CorpusStore::List(const ListFilter &filter) const {
  if (filter.page < 1) throw InvalidArgument("page numbers start at 1");
  if (filter.page_size < 1) throw InvalidArgument("page size must be positive");
  const std::string prefix = NormalizeForm(Trim(filter.prefix));
  auto lock = ReadLock();
  std::vector<const CorpusEntry *> matched;
  for (const auto &[id, e] : entries_) {
    if (filter.status && e.status != *filter.status) continue;
    if (filter.origin && e.origin != *filter.origin) continue;
    if (!prefix.empty() && NormalizeForm(e.text).rfind(prefix, 0) != 0) continue;
    matched.push_back(&e);
  }
  std::stable_sort(matched.begin(), matched.end(), [](const CorpusEntry *a, const CorpusEntry *b) {
    const int c = CollateSerbian(a->text, b->text);
    return c != 0 ? c < 0 : a->id < b->id;
  });
  EntryPage page;
  page.total = matched.size();
  page.page = filter.page;
  page.page_size = filter.page_size;
  page.pages = (matched.size() + filter.page_size - 1) / filter.page_size;
  const std::size_t begin = (filter.page - 1) * filter.page_size;
  for (std::size_t i = begin; i < matched.size() && i < begin + filter.page_size; ++i) {
    page.entries.push_back(*matched[i]);
  }
  return page;
}

std::vector<CorpusEntry> CorpusStore::Pending() const {
  auto lock = ReadLock();
  std::vector<CorpusEntry> out;
  for (const auto &[id, e] : entries_) {
    if (e.status == Status::kPending) out.push_back(e);
  }
  // Oldest first by creation time.
  std::stable_sort(out.begin(), out.end(), [](const CorpusEntry &a, const CorpusEntry &b) {
    return a.created_at != b.created_at ? a.created_at < b.created_at : a.id < b.id;
  });
  return out;
}

std::vector<SimilarEntry> CorpusStore::Search(std::string_view query, double threshold,
                                              std::optional<Status> status) const {
  const StemKey key = KeyOf(query);
  auto lock = ReadLock();
  return SimilarLocked(key, threshold, status);
}

std::vector<EntryId> CorpusStore::FindExact(std::string_view text) const {
  const StemKey key = KeyOf(text);
  auto lock = ReadLock();
  return index_.FindExact(key);
}

ImportReport CorpusStore::ImportSeed(const std::vector<std::string> &lines,
                                     std::string_view source_name, std::string_view actor) {
  ImportReport report;
  for (const std::string &raw : lines) {
    const std::string_view line = Trim(raw);
    if (line.empty() || line.front() == '#') {
      ++report.skipped;
      continue;
    }
    bool overlap = false;
    for (EntryId id : FindExact(line)) {
      const auto e = Get(id);
      if (e && e->origin == Origin::kMined) overlap = true;
    }
    NewEntry entry;
    entry.text = std::string(line);
    entry.origin = Origin::kSeed;
    entry.provenance = std::string(source_name);
    entry.actor = std::string(actor);
    const AddResult added = Add(entry);
    SetStatus(added.id, Status::kApproved, actor);
    ++report.added;
    if (overlap) ++report.overlap;
  }
  return report;
}

CorpusStats CorpusStore::Stats() const {
  auto lock = ReadLock();
  CorpusStats stats;
  for (const auto &[id, e] : entries_) {
    ++stats.counts[static_cast<int>(e.status)][static_cast<int>(e.origin)];
    ++stats.total;
    if (e.origin != Origin::kSeed) continue;
    for (EntryId other : index_.FindExact(e.stem_key)) {
      if (entries_.at(other).origin == Origin::kMined) {
        ++stats.seed_mined_overlap;
        break;
      }
    }
  }
  return stats;
}

std::size_t CorpusStore::size() const {
  auto lock = ReadLock();
  return entries_.size();
}

std::vector<CorpusEntry> CorpusStore::All() const {
  auto lock = ReadLock();
  std::vector<CorpusEntry> out;
  for (const auto &[id, e] : entries_) out.push_back(e);
  return out;
}

namespace {

std::vector<CorpusEntry> ApprovedSorted(const CorpusStore &store) {
  ListFilter filter;
  filter.status = Status::kApproved;
  filter.page_size = std::max<std::size_t>(1, store.size());
  return store.List(filter).entries;
}

}  // namespace

std::string CorpusStore::ExportText() const {
  std::string out;
  for (const CorpusEntry &e : ApprovedSorted(*this)) out += e.text + "\n";
  return out;
}

std::string CorpusStore::ExportJsonl() const {
  std::string out;
  for (const CorpusEntry &e : ApprovedSorted(*this)) {
    nlohmann::json j = {{"id", e.id},
                        {"text", e.text},
                        {"stem_key", e.stem_key.ToString()},
                        {"origin", OriginName(e.origin)},
                        {"provenance", e.provenance},
                        {"created_at", e.created_at},
                        {"updated_at", e.updated_at}};
    j["classifier_score"] = e.classifier_score ? nlohmann::json(*e.classifier_score) : nullptr;
    out += j.dump() + "\n";
  }
  return out;
}

}  // namespace simile
