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

#ifndef SIMILE_DEDUP_H_
#define SIMILE_DEDUP_H_

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "simile/matcher.h"
#include "simile/stemmer.h"

namespace simile {

// Sorted, duplicate-free stems of a phrase's words. Two phrases with equal
// keys use the same set of words up to inflection.
struct StemKey {
  std::vector<std::string> stems;

  // Stems joined by single spaces.
  std::string ToString() const;
  static StemKey FromString(std::string_view key);

  bool operator==(const StemKey &) const = default;
};

// Connector variants become "kao" before stemming. Throws InvalidArgument
// if the phrase has no word tokens.
StemKey KeyOf(std::string_view phrase, const Stemmer &stemmer = Stemmer::Default(),
              const MatcherConfig &config = {});

// |a ∩ b| / |a ∪ b| over two sorted stem sets; 1.0 for two empty sets.
double Jaccard(const StemKey &a, const StemKey &b);

inline constexpr double kDefaultDuplicateThreshold = 0.6;

// Stem-set index for inflection-insensitive lookup. Not internally
// synchronized: concurrent readers are fine, writers need exclusive access.
class DedupIndex {
 public:
  using EntryId = std::int64_t;

  struct Match {
    EntryId id;
    double similarity;
  };

  void Add(EntryId id, const StemKey &key);
  void Remove(EntryId id);
  bool Contains(EntryId id) const { return keys_.count(id) > 0; }
  std::size_t size() const { return keys_.size(); }

  // Entries with Jaccard similarity >= threshold, best first, ties by id.
  std::vector<Match> FindSimilar(const StemKey &query, double threshold) const;

  // Ids whose key equals `key`, ascending.
  std::vector<EntryId> FindExact(const StemKey &key) const;

 private:
  std::map<EntryId, StemKey> keys_;
  std::unordered_map<std::string, std::set<EntryId>> postings_;
};

}  // namespace simile

#endif  // SIMILE_DEDUP_H_
