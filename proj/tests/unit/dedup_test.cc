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

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "simile/dedup.h"
#include "simile/errors.h"
#include "simile/io.h"

namespace simile {
namespace {

TEST_CASE("stem keys") {
  CHECK(KeyOf("radi kao konj").ToString() == "ka konj rad");
  CHECK(KeyOf("radi k'o konj") == KeyOf("radi kao konj"));
  CHECK(KeyOf("Radi ko konj!") == KeyOf("radi kao konj"));
  CHECK(KeyOf("ради као коњ") == KeyOf("radi kao konj"));
  CHECK(KeyOf("beo kao sneg") == KeyOf("bela kao sneg"));
  CHECK(KeyOf("belo kao sneg") == KeyOf("bela kao sneg"));
  CHECK(KeyOf("konj kao radi konj") == KeyOf("radi kao konj"));
  CHECK_THROWS_AS(KeyOf(""), InvalidArgument);
  CHECK_THROWS_AS(KeyOf(" , . !"), InvalidArgument);
}

TEST_CASE("stem key strings round trip") {
  const StemKey key = KeyOf("smorio se kao zmaj");
  CHECK(StemKey::FromString(key.ToString()) == key);
  CHECK(std::is_sorted(key.stems.begin(), key.stems.end()));
  CHECK(std::adjacent_find(key.stems.begin(), key.stems.end()) == key.stems.end());
}

TEST_CASE("key is invariant under reordering and repetition") {
  std::mt19937_64 rng(5);
  const auto lexicon = SplitLines(ReadFile(SIMILE_FIXTURE_DIR "/lexicon.txt"));
  for (int round = 0; round < 200; ++round) {
    std::vector<std::string> words;
    for (int i = 0; i < 1 + static_cast<int>(rng() % 5); ++i) {
      words.push_back(lexicon[rng() % lexicon.size()]);
    }
    std::string phrase;
    for (const auto &w : words) phrase += w + " ";
    auto shuffled = words;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    shuffled.push_back(words[0]);
    std::string other;
    for (const auto &w : shuffled) other += w + " ";
    CHECK(KeyOf(phrase) == KeyOf(other));
  }
}

TEST_CASE("jaccard") {
  const StemKey a = KeyOf("lep kao cvet");
  const StemKey b = KeyOf("radi kao konj");
  // Shared stem "ka" only: 1 / 5.
  CHECK(Jaccard(a, b) == doctest::Approx(0.2));
  CHECK(Jaccard(b, a) == Jaccard(a, b));
  CHECK(Jaccard(a, a) == 1.0);
  CHECK(Jaccard(StemKey{}, StemKey{}) == 1.0);
}

TEST_CASE("index lookup") {
  DedupIndex index;
  index.Add(1, KeyOf("beo kao sneg"));
  index.Add(2, KeyOf("radi kao konj"));
  index.Add(3, KeyOf("radi kao konj u polju"));
  index.Add(4, KeyOf("beo kao sneg"));
  CHECK(index.size() == 4);

  auto hits = index.FindSimilar(KeyOf("bela kao sneg"), kDefaultDuplicateThreshold);
  REQUIRE(hits.size() == 2);
  CHECK(hits[0].id == 1);
  CHECK(hits[0].similarity == 1.0);
  CHECK(hits[1].id == 4);

  hits = index.FindSimilar(KeyOf("radi kao konj"), kDefaultDuplicateThreshold);
  REQUIRE(hits.size() == 2);
  CHECK(hits[0].id == 2);
  CHECK(hits[0].similarity == 1.0);
  CHECK(hits[1].id == 3);
  CHECK(hits[1].similarity == doctest::Approx(0.6));

  CHECK(index.FindSimilar(KeyOf("lep kao cvet"), kDefaultDuplicateThreshold).empty());
  CHECK(index.FindSimilar(KeyOf("lep kao cvet"), 0.2).size() == 3);
  CHECK(index.FindExact(KeyOf("belo kao sneg")) == std::vector<DedupIndex::EntryId>{1, 4});
  CHECK_THROWS_AS(index.FindSimilar(KeyOf("x kao y"), 0.0), InvalidArgument);
  CHECK_THROWS_AS(index.FindSimilar(KeyOf("x kao y"), 1.5), InvalidArgument);
}

TEST_CASE("add then remove restores results") {
  std::mt19937_64 rng(11);
  const auto lexicon = SplitLines(ReadFile(SIMILE_FIXTURE_DIR "/lexicon.txt"));
  const auto random_key = [&] {
    std::string phrase;
    for (int i = 0; i < 1 + static_cast<int>(rng() % 4); ++i) {
      phrase += lexicon[rng() % lexicon.size()] + " kao ";
    }
    phrase += lexicon[rng() % lexicon.size()];
    return KeyOf(phrase);
  };
  DedupIndex index;
  for (int i = 0; i < 60; ++i) index.Add(i, random_key());
  std::vector<StemKey> queries;
  for (int i = 0; i < 20; ++i) queries.push_back(random_key());
  const auto snapshot = [&] {
    std::vector<std::vector<std::pair<DedupIndex::EntryId, double>>> out;
    for (const auto &q : queries) {
      std::vector<std::pair<DedupIndex::EntryId, double>> row;
      for (const auto &m : index.FindSimilar(q, 0.1)) row.emplace_back(m.id, m.similarity);
      out.push_back(row);
    }
    return out;
  };
  const auto before = snapshot();
  for (int i = 100; i < 110; ++i) index.Add(i, queries[i - 100]);
  for (int i = 100; i < 110; ++i) index.Remove(i);
  CHECK(snapshot() == before);
  CHECK(index.size() == 60);
  CHECK_FALSE(index.Contains(100));
  index.Remove(12345);  // unknown ids are ignored
}

TEST_CASE("re-adding an id replaces its key") {
  DedupIndex index;
  index.Add(1, KeyOf("beo kao sneg"));
  index.Add(1, KeyOf("radi kao konj"));
  CHECK(index.size() == 1);
  CHECK(index.FindExact(KeyOf("beo kao sneg")).empty());
  CHECK(index.FindExact(KeyOf("radi kao konj")) == std::vector<DedupIndex::EntryId>{1});
}

}  // namespace
}  // namespace simile
