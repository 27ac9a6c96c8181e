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

#ifndef SIMILE_TAGGER_H_
#define SIMILE_TAGGER_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "simile/tokenizer.h"

namespace simile {

// Word classes the simile pattern cares about.
enum class CoarseTag { kVerb, kAdjective, kNoun, kOther };

// 'V', 'A', 'N' or 'O'.
char CoarseSymbol(CoarseTag tag);
std::optional<CoarseTag> ParseCoarseSymbol(std::string_view symbol);

// Default mapping for MULTEXT-East style positional tags: the first
// character decides (V, A, N), anything else is kOther.
CoarseTag CoarseOf(std::string_view fine_tag);

// Fine-to-coarse mapping with per-tag overrides on top of CoarseOf.
// Override file: one `fine_tag<TAB>V|A|N|O` per line.
class CoarseMap {
 public:
  static CoarseMap Parse(std::string_view contents);
  static CoarseMap Load(const std::filesystem::path &path);

  void Override(std::string fine_tag, CoarseTag coarse);
  CoarseTag Map(std::string_view fine_tag) const;
  const std::map<std::string, CoarseTag, std::less<>> &overrides() const {
    return overrides_;
  }

 private:
  std::map<std::string, CoarseTag, std::less<>> overrides_;
};

struct TaggedWord {
  std::string word;
  std::string tag;
};

using TaggedSentence = std::vector<TaggedWord>;

// Training corpus format: one `word<TAB>fine_tag` per line, a blank line
// ends a sentence. Throws ParseError naming the offending line.
std::vector<TaggedSentence> ParseTaggedCorpus(std::string_view contents);

struct TaggedToken {
  Token token;
  std::string fine_tag;
  CoarseTag coarse = CoarseTag::kOther;
};

struct TaggerOptions {
  // Longest suffix consulted for unknown words.
  int max_suffix_length = 4;
  // Words seen at most this often feed the suffix tables.
  std::int64_t rare_word_threshold = 10;
  // Emission lookups go through NormalizeForm with this flag.
  bool transliterate = true;
};

// Weights for unigram, bigram and trigram tag probabilities.
struct InterpolationWeights {
  double unigram = 1.0 / 3;
  double bigram = 1.0 / 3;
  double trigram = 1.0 / 3;
};

inline constexpr std::string_view kBoundaryStart = "<s>";
inline constexpr std::string_view kBoundaryEnd = "</s>";

// Raw counts a model is built from. Tag names in the trigram keys may be
// kBoundaryStart (first two positions) or kBoundaryEnd (last position).
struct TaggerCounts {
  std::map<std::tuple<std::string, std::string, std::string>, std::int64_t> trigrams;
  // (tag, normalized word) -> count.
  std::map<std::pair<std::string, std::string>, std::int64_t> emissions;
};

// Trigram HMM tagger with deleted-interpolation smoothing, suffix-based
// handling of unknown words and log-space Viterbi decoding. Immutable after
// construction; all const methods are safe to call concurrently.
class TaggerModel {
 public:
  // Builds a model from raw counts. Without explicit weights, they are
  // estimated by deleted interpolation over the trigram counts.
  static TaggerModel FromCounts(const TaggerCounts &counts, CoarseMap coarse_map = {},
                                TaggerOptions options = {},
                                std::optional<InterpolationWeights> weights = std::nullopt);

  // Counts tag trigrams (padded with two start symbols and one end symbol)
  // and word emissions. Throws InvalidArgument on an empty corpus.
  static TaggerModel Train(const std::vector<TaggedSentence> &corpus,
                           CoarseMap coarse_map = {}, TaggerOptions options = {});

  static TaggerModel Load(const std::filesystem::path &path);
  static TaggerModel Deserialize(std::string_view contents);
  void Save(const std::filesystem::path &path) const;
  std::string Serialize() const;

  std::vector<TaggedToken> Tag(const std::vector<Token> &sentence) const;

  // Viterbi decoding over tag indices.
  std::vector<int> Decode(const std::vector<std::string> &words) const;

  // Sorted fine tags; a tag's index is its position here.
  const std::vector<std::string> &tagset() const { return tagset_; }
  int num_tags() const { return static_cast<int>(tagset_.size()); }
  // Context index of the start symbol and outcome index of the end symbol.
  int start_index() const { return num_tags(); }
  int end_index() const { return num_tags(); }

  std::optional<int> TagIndex(std::string_view tag) const;
  CoarseTag Coarse(int tag) const { return coarse_[tag]; }

  // log P(c | a, b). a and b range over tags plus start_index(); c over tags
  // plus end_index().
  double LogTransition(int a, int b, int c) const;
  double Transition(int a, int b, int c) const;

  // Log emission score of `word` under `tag`: log P(word | tag) for known
  // words, log P(tag | suffix) / P(tag) for unknown ones. -inf when the
  // word was seen but never with this tag.
  double LogEmission(std::string_view word, int tag) const;

  bool IsKnown(std::string_view word) const;

  // Tags worth considering for `word` in decoding, ascending.
  std::vector<int> CandidateTags(std::string_view word) const;

  // Successively abstracted P(tag | suffixes of word) for unknown words.
  std::vector<double> SuffixDistribution(std::string_view word) const;

  const InterpolationWeights &weights() const { return weights_; }
  const TaggerOptions &options() const { return options_; }
  const TaggerCounts &counts() const { return counts_; }

  std::int64_t TrigramCount(std::string_view a, std::string_view b, std::string_view c) const;
  std::int64_t EmissionCount(std::string_view tag, std::string_view word) const;

 private:
  TaggerModel() = default;

  std::string NormalizeWord(std::string_view word) const;
  static std::uint64_t Key(int a, int b) {
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
  }
  void EstimateWeights();

  TaggerCounts counts_;
  TaggerOptions options_;
  InterpolationWeights weights_;
  CoarseMap coarse_map_;

  std::vector<std::string> tagset_;
  std::unordered_map<std::string, int> tag_index_;
  std::vector<CoarseTag> coarse_;

  // Transition statistics. Outcomes are indexed 0..T (T = end symbol),
  // contexts 0..T (T = start symbol).
  std::vector<std::int64_t> unigram_;          // [outcome]
  std::int64_t unigram_total_ = 0;
  std::vector<std::int64_t> bigram_;           // [context * (T+1) + outcome]
  std::vector<std::int64_t> bigram_context_;   // [context]
  std::unordered_map<std::uint64_t, std::unordered_map<int, std::int64_t>> trigram_;
  std::unordered_map<std::uint64_t, std::int64_t> trigram_context_;

  // Emission statistics.
  std::unordered_map<std::string, std::vector<std::pair<int, std::int64_t>>> lexicon_;
  std::vector<std::int64_t> tag_total_;
  std::int64_t token_total_ = 0;
  std::vector<double> tag_prior_;

  // Suffix tables over rare words.
  std::unordered_map<std::string, std::vector<std::int64_t>> suffix_counts_;
  std::unordered_map<std::string, std::int64_t> suffix_total_;
  double theta_ = 0.0;
};

}  // namespace simile

#endif  // SIMILE_TAGGER_H_
