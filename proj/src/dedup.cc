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

#include "simile/dedup.h"

#include <algorithm>

#include "simile/errors.h"
#include "simile/text.h"
#include "simile/tokenizer.h"

namespace simile {

std::string StemKey::ToString() const { return Join(stems, " "); }

StemKey StemKey::FromString(std::string_view key) {
  StemKey out{SplitWhitespace(key)};
  std::sort(out.stems.begin(), out.stems.end());
  out.stems.erase(std::unique(out.stems.begin(), out.stems.end()), out.stems.end());
  return out;
}

StemKey KeyOf(std::string_view phrase, const Stemmer &stemmer, const MatcherConfig &config) {
  StemKey key;
  for (const Token &token : Tokenize(phrase)) {
    if (token.kind == TokenKind::kPunctuation) continue;
    const std::string_view word =
        IsConnector(token.text, config) ? kCanonicalConnector : std::string_view(token.text);
    key.stems.push_back(stemmer.Stem(word));
  }
  if (key.stems.empty()) {
    throw InvalidArgument("phrase has no words: '" + std::string(phrase) + "'");
  }
  std::sort(key.stems.begin(), key.stems.end());
  key.stems.erase(std::unique(key.stems.begin(), key.stems.end()), key.stems.end());
  return key;
}

double Jaccard(const StemKey &a, const StemKey &b) {
  if (a.stems.empty() && b.stems.empty()) return 1.0;
  std::size_t common = 0;
  auto i = a.stems.begin();
  auto j = b.stems.begin();
  while (i != a.stems.end() && j != b.stems.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++common;
      ++i;
      ++j;
    }
  }
  const std::size_t united = a.stems.size() + b.stems.size() - common;
  return static_cast<double>(common) / static_cast<double>(united);
}

void DedupIndex::Add(EntryId id, const StemKey &key) {
  Remove(id);
  keys_.emplace(id, key);
  for (const std::string &stem : key.stems) postings_[stem].insert(id);
}

void DedupIndex::Remove(EntryId id) {
  const auto it = keys_.find(id);
  if (it == keys_.end()) return;
  for (const std::string &stem : it->second.stems) {
    const auto posting = postings_.find(stem);
    posting->second.erase(id);
    if (posting->second.empty()) postings_.erase(posting);
  }
  keys_.erase(it);
}

std::vector<DedupIndex::Match> DedupIndex::FindSimilar(const StemKey &query,
                                                       double threshold) const {
  if (!(threshold > 0.0 && threshold <= 1.0)) {
    throw InvalidArgument("similarity threshold must be in (0, 1]");
  }
  // Only entries sharing a stem can reach a positive threshold.
  std::set<EntryId> candidates;
  for (const std::string &stem : query.stems) {
    const auto posting = postings_.find(stem);
    if (posting != postings_.end()) candidates.insert(posting->second.begin(), posting->second.end());
  }
  std::vector<Match> matches;
  for (EntryId id : candidates) {
    const double similarity = Jaccard(query, keys_.at(id));
    if (similarity >= threshold) matches.push_back({id, similarity});
  }
  std::sort(matches.begin(), matches.end(), [](const Match &a, const Match &b) {
    if (a.similarity != b.similarity) return a.similarity > b.similarity;
    return a.id < b.id;
  });
  return matches;
}

std::vector<DedupIndex::EntryId> DedupIndex::FindExact(const StemKey &key) const {
  std::vector<EntryId> ids;
  for (const Match &m : FindSimilar(key, 1.0)) ids.push_back(m.id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace simile
