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

#include "simile/matcher.h"

#include "simile/text.h"

namespace simile {
namespace {

bool IsReflexive(const Token &token, bool transliterate) {
  return token.kind == TokenKind::kWord && NormalizeForm(token.text, transliterate) == "se";
}

bool Is(const TaggedToken &t, CoarseTag coarse) {
  return t.token.kind != TokenKind::kPunctuation && t.coarse == coarse;
}

std::string JoinNormalized(const std::vector<TaggedToken> &sentence, std::size_t begin,
                           std::size_t end, bool transliterate) {
  std::vector<std::string> words;
  for (std::size_t i = begin; i < end; ++i) {
    words.push_back(NormalizeForm(sentence[i].token.text, transliterate));
  }
  return Join(words, " ");
}

}  // namespace

bool IsConnector(std::string_view word, const MatcherConfig &config) {
  const std::string form = NormalizeForm(word, config.transliterate);
  for (const std::string &c : config.connectors) {
    if (NormalizeForm(c, config.transliterate) == form) return true;
  }
  return false;
}

std::vector<SimileCandidate> ExtractCandidates(const std::vector<TaggedToken> &sentence,
                                               const MatcherConfig &config,
                                               const SourceRef &source) {
  std::vector<SimileCandidate> out;
  const std::size_t n = sentence.size();
  for (std::size_t k = 1; k + 1 < n; ++k) {
    const Token &connector = sentence[k].token;
    if (connector.kind != TokenKind::kWord || !IsConnector(connector.text, config)) continue;

    // Left side: V or A right before the connector, or V followed by "se".
    std::size_t left_begin;
    if (config.allow_reflexive_se && IsReflexive(sentence[k - 1].token, config.transliterate) &&
        k >= 2 && Is(sentence[k - 2], CoarseTag::kVerb)) {
      left_begin = k - 2;
    } else if (Is(sentence[k - 1], CoarseTag::kVerb) || Is(sentence[k - 1], CoarseTag::kAdjective)) {
      left_begin = k - 1;
    } else {
      continue;
    }

    // Right side: adjectives, then the first noun.
    std::size_t j = k + 1;
    std::size_t adjectives = 0;
    while (j < n && Is(sentence[j], CoarseTag::kAdjective)) {
      ++adjectives;
      ++j;
    }
    if (config.max_adjectives && adjectives > *config.max_adjectives) continue;
    if (j >= n || !Is(sentence[j], CoarseTag::kNoun)) continue;
    const std::size_t span_end = j + 1;

    SimileCandidate c;
    c.left = JoinNormalized(sentence, left_begin, k, config.transliterate);
    c.right = JoinNormalized(sentence, k + 1, span_end, config.transliterate);
    c.full_text = c.left + " " + c.connector + " " + c.right;
    c.span_begin = left_begin;
    c.span_end = span_end;
    c.connector_surface = connector.text;
    std::vector<std::string> surface;
    for (std::size_t i = left_begin; i < span_end; ++i) surface.push_back(sentence[i].token.text);
    c.surface = Join(surface, " ");
    c.source = source;
    out.push_back(std::move(c));
  }
  return out;
}

std::optional<SimileCandidate> CandidateFromPhrase(std::string_view phrase,
                                                   const MatcherConfig &config) {
  std::vector<std::string> words;
  std::vector<std::string> surface;
  for (const Token &token : Tokenize(phrase)) {
    if (token.kind == TokenKind::kPunctuation) continue;
    words.push_back(NormalizeForm(token.text, config.transliterate));
    surface.push_back(token.text);
  }
  for (std::size_t k = 1; k + 1 < words.size(); ++k) {
    if (!IsConnector(words[k], config)) continue;
    SimileCandidate c;
    c.left = Join({words.begin(), words.begin() + k}, " ");
    c.right = Join({words.begin() + k + 1, words.end()}, " ");
    c.full_text = c.left + " " + c.connector + " " + c.right;
    c.span_begin = 0;
    c.span_end = words.size();
    c.connector_surface = surface[k];
    c.surface = Join(surface, " ");
    return c;
  }
  return std::nullopt;
}

}  // namespace simile
