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

#ifndef SIMILE_MATCHER_H_
#define SIMILE_MATCHER_H_

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "simile/tagger.h"

namespace simile {

inline constexpr std::string_view kCanonicalConnector = "kao";

struct MatcherConfig {
  // Connector surface forms, compared after NormalizeForm.
  std::set<std::string> connectors = {"kao", "ko", "k'o"};
  bool allow_reflexive_se = true;
  // Longest adjective run before the noun; nullopt means unbounded.
  std::optional<std::size_t> max_adjectives = 3;
  bool transliterate = true;
};

// Where a candidate came from.
struct SourceRef {
  std::string doc_id;
  std::size_t sentence_offset = 0;

  bool operator==(const SourceRef &) const = default;
  auto operator<=>(const SourceRef &) const = default;
};

// One comparison of the form (V | A | V se) connector A* N.
struct SimileCandidate {
  std::string left;        // normalized; "smorio se" when reflexive
  std::string connector = std::string(kCanonicalConnector);
  std::string right;       // normalized adjectives and the noun
  std::string full_text;   // left + " kao " + right
  // Token range [begin, end) in the sentence.
  std::size_t span_begin = 0;
  std::size_t span_end = 0;
  // Connector exactly as written.
  std::string connector_surface;
  // Original surface of the matched tokens, space-joined.
  std::string surface;
  SourceRef source;
};

bool IsConnector(std::string_view word, const MatcherConfig &config);

// Finds every connector occurrence that fits the pattern. The right side
// ends at the first noun; punctuation anywhere inside the pattern aborts
// the match. Output follows sentence order.
std::vector<SimileCandidate> ExtractCandidates(const std::vector<TaggedToken> &sentence,
                                               const MatcherConfig &config = {},
                                               const SourceRef &source = {});

// Splits a free-text phrase at its first connector token. Used for labeled
// data and manual entries, which arrive without tags. Returns nullopt when
// there is no connector with words on both sides.
std::optional<SimileCandidate> CandidateFromPhrase(std::string_view phrase,
                                                   const MatcherConfig &config = {});

}  // namespace simile

#endif  // SIMILE_MATCHER_H_
