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

#include "simile/tagger.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

#include "simile/errors.h"
#include "simile/io.h"
#include "simile/text.h"

namespace simile {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr std::string_view kModelMagic = "SIMILE-TAGGER";
constexpr int kModelVersion = 1;

}  // namespace

char CoarseSymbol(CoarseTag tag) {
  switch (tag) {
    case CoarseTag::kVerb: return 'V';
    case CoarseTag::kAdjective: return 'A';
    case CoarseTag::kNoun: return 'N';
    case CoarseTag::kOther: return 'O';
  }
  return 'O';
}

std::optional<CoarseTag> ParseCoarseSymbol(std::string_view symbol) {
  if (symbol == "V") return CoarseTag::kVerb;
  if (symbol == "A") return CoarseTag::kAdjective;
  if (symbol == "N") return CoarseTag::kNoun;
  if (symbol == "O") return CoarseTag::kOther;
  return std::nullopt;
}

CoarseTag CoarseOf(std::string_view fine_tag) {
  if (fine_tag.empty()) return CoarseTag::kOther;
  switch (fine_tag.front()) {
    case 'V': return CoarseTag::kVerb;
    case 'A': return CoarseTag::kAdjective;
    case 'N': return CoarseTag::kNoun;
    default: return CoarseTag::kOther;
  }
}

CoarseMap CoarseMap::Parse(std::string_view contents) {
  CoarseMap map;
  int line_no = 0;
  for (const std::string &raw : SplitLines(contents)) {
    ++line_no;
    const std::string_view line = Trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const std::vector<std::string> fields = SplitTabs(line);
    std::optional<CoarseTag> coarse;
    if (fields.size() == 2) coarse = ParseCoarseSymbol(fields[1]);
    if (!coarse || fields[0].empty()) {
      throw ParseError("coarse map line " + std::to_string(line_no) +
                       ": expected fine_tag<TAB>V|A|N|O");
    }
    map.Override(fields[0], *coarse);
  }
  return map;
}

CoarseMap CoarseMap::Load(const std::filesystem::path &path) {
  return Parse(ReadFile(path));
}

void CoarseMap::Override(std::string fine_tag, CoarseTag coarse) {
  overrides_[std::move(fine_tag)] = coarse;
}

CoarseTag CoarseMap::Map(std::string_view fine_tag) const {
  const auto it = overrides_.find(fine_tag);
  return it != overrides_.end() ? it->second : CoarseOf(fine_tag);
}

std::vector<TaggedSentence> ParseTaggedCorpus(std::string_view contents) {
  std::vector<TaggedSentence> corpus;
  TaggedSentence current;
  int line_no = 0;
  for (const std::string &line : SplitLines(contents)) {
    ++line_no;
    if (Trim(line).empty()) {
      if (!current.empty()) corpus.push_back(std::move(current));
      current.clear();
      continue;
    }
    const std::vector<std::string> fields = SplitTabs(line);
    if (fields.size() != 2 || Trim(fields[0]).empty() || Trim(fields[1]).empty() ||
        fields[0].find(' ') != std::string::npos || fields[1].find(' ') != std::string::npos) {
      throw ParseError("tagged corpus line " + std::to_string(line_no) +
                       ": expected word<TAB>tag");
    }
    if (fields[1] == kBoundaryStart || fields[1] == kBoundaryEnd) {
      throw ParseError("tagged corpus line " + std::to_string(line_no) +
                       ": reserved tag " + fields[1]);
    }
    current.push_back({fields[0], fields[1]});
  }
  if (!current.empty()) corpus.push_back(std::move(current));
  return corpus;
}

std::string TaggerModel::NormalizeWord(std::string_view word) const {
  return NormalizeForm(word, options_.transliterate);
}

TaggerModel TaggerModel::Train(const std::vector<TaggedSentence> &corpus,
                               CoarseMap coarse_map, TaggerOptions options) {
  if (corpus.empty()) throw InvalidArgument("cannot train a tagger on an empty corpus");
  TaggerCounts counts;
  const std::string start(kBoundaryStart);
  const std::string end(kBoundaryEnd);
  for (const TaggedSentence &sentence : corpus) {
    if (sentence.empty()) continue;
    std::string a = start;
    std::string b = start;
    for (const TaggedWord &tw : sentence) {
      if (tw.tag == kBoundaryStart || tw.tag == kBoundaryEnd) {
        throw InvalidArgument("reserved tag in training corpus: " + tw.tag);
      }
      ++counts.trigrams[{a, b, tw.tag}];
      ++counts.emissions[{tw.tag, NormalizeForm(tw.word, options.transliterate)}];
      a = std::move(b);
      b = tw.tag;
    }
    ++counts.trigrams[{a, b, end}];
  }
  if (counts.emissions.empty()) throw InvalidArgument("cannot train a tagger on an empty corpus");
  return FromCounts(counts, std::move(coarse_map), options);
}

TaggerModel TaggerModel::FromCounts(const TaggerCounts &counts, CoarseMap coarse_map,
                                    TaggerOptions options,
                                    std::optional<InterpolationWeights> weights) {
  if (options.max_suffix_length < 0) throw InvalidArgument("max_suffix_length must be >= 0");
  TaggerModel model;
  model.counts_ = counts;
  model.options_ = options;
  model.coarse_map_ = std::move(coarse_map);

  std::set<std::string> tags;
  for (const auto &[key, count] : counts.trigrams) {
    const auto &[a, b, c] = key;
    if (count < 0) throw InvalidArgument("negative trigram count");
    for (const std::string *t : {&a, &b, &c}) {
      if (*t != kBoundaryStart && *t != kBoundaryEnd) tags.insert(*t);
    }
    if (a == kBoundaryEnd || b == kBoundaryEnd || c == kBoundaryStart) {
      throw InvalidArgument("boundary symbol in wrong trigram position");
    }
  }
  for (const auto &[key, count] : counts.emissions) {
    if (count < 0) throw InvalidArgument("negative emission count");
    if (key.first == kBoundaryStart || key.first == kBoundaryEnd) {
      throw InvalidArgument("boundary symbol used as emission tag");
    }
    tags.insert(key.first);
  }
  if (tags.empty()) throw InvalidArgument("tagger model has no tags");

  model.tagset_.assign(tags.begin(), tags.end());
  const int num_tags = model.num_tags();
  for (int i = 0; i < num_tags; ++i) {
    model.tag_index_[model.tagset_[i]] = i;
    model.coarse_.push_back(model.coarse_map_.Map(model.tagset_[i]));
  }
  const auto context_index = [&](const std::string &t) {
    return t == kBoundaryStart ? num_tags : model.tag_index_.at(t);
  };
  const auto outcome_index = [&](const std::string &t) {
    return t == kBoundaryEnd ? num_tags : model.tag_index_.at(t);
  };

  const int width = num_tags + 1;
  model.unigram_.assign(width, 0);
  model.bigram_.assign(static_cast<std::size_t>(width) * width, 0);
  model.bigram_context_.assign(width, 0);
  for (const auto &[key, count] : counts.trigrams) {
    if (count == 0) continue;
    const auto &[a, b, c] = key;
    const int ia = context_index(a);
    const int ib = context_index(b);
    const int ic = outcome_index(c);
    model.unigram_[ic] += count;
    model.unigram_total_ += count;
    model.bigram_[static_cast<std::size_t>(ib) * width + ic] += count;
    model.bigram_context_[ib] += count;
    model.trigram_[Key(ia, ib)][ic] += count;
    model.trigram_context_[Key(ia, ib)] += count;
  }
  if (model.unigram_total_ == 0) throw InvalidArgument("tagger model has no transitions");

  model.tag_total_.assign(num_tags, 0);
  std::unordered_map<std::string, std::int64_t> word_total;
  for (const auto &[key, count] : counts.emissions) {
    if (count == 0) continue;
    const int t = model.tag_index_.at(key.first);
    model.lexicon_[key.second].emplace_back(t, count);
    model.tag_total_[t] += count;
    model.token_total_ += count;
    word_total[key.second] += count;
  }
  for (auto &[word, entries] : model.lexicon_) std::sort(entries.begin(), entries.end());

  model.tag_prior_.assign(num_tags, 0.0);
  if (model.token_total_ > 0) {
    for (int t = 0; t < num_tags; ++t) {
      model.tag_prior_[t] = static_cast<double>(model.tag_total_[t]) / model.token_total_;
    }
  }
  // Standard deviation of the tag prior; weights successive abstraction.
  if (num_tags > 1) {
    const double mean = 1.0 / num_tags;
    double sum_sq = 0.0;
    for (double p : model.tag_prior_) sum_sq += (p - mean) * (p - mean);
    model.theta_ = std::sqrt(sum_sq / (num_tags - 1));
  }

  for (const auto &[word, entries] : model.lexicon_) {
    if (word_total[word] > options.rare_word_threshold) continue;
    const std::u32string w = ToU32(word);
    const int longest = std::min<int>(options.max_suffix_length, static_cast<int>(w.size()));
    for (int len = 1; len <= longest; ++len) {
      const std::string suffix = ToUtf8(std::u32string_view(w).substr(w.size() - len));
      std::vector<std::int64_t> &dist = model.suffix_counts_[suffix];
      dist.resize(num_tags, 0);
      for (const auto &[t, count] : entries) {
        dist[t] += count;
        model.suffix_total_[suffix] += count;
      }
    }
  }

  if (weights) {
    const double sum = weights->unigram + weights->bigram + weights->trigram;
    if (weights->unigram < 0 || weights->bigram < 0 || weights->trigram < 0 ||
        std::abs(sum - 1.0) > 1e-9) {
      throw InvalidArgument("interpolation weights must be non-negative and sum to 1");
    }
    model.weights_ = *weights;
  } else {
    model.EstimateWeights();
  }
  return model;
}

// Deleted interpolation: every trigram votes, with its count, for the order
// whose held-out estimate is largest. Ties go to the lower order.
void TaggerModel::EstimateWeights() {
  const int width = num_tags() + 1;
  double votes[3] = {0.0, 0.0, 0.0};
  for (const auto &[context, outcomes] : trigram_) {
    const int b = static_cast<int>(context & 0xFFFFFFFFu);
    const std::int64_t context_count = trigram_context_.at(context);
    for (const auto &[c, count] : outcomes) {
      const auto ratio = [](double num, double den) { return den > 0 ? num / den : 0.0; };
      const double tri = ratio(count - 1.0, context_count - 1.0);
      const double bi = ratio(bigram_[static_cast<std::size_t>(b) * width + c] - 1.0,
                              bigram_context_[b] - 1.0);
      const double uni = ratio(unigram_[c] - 1.0, unigram_total_ - 1.0);
      if (uni >= bi && uni >= tri) {
        votes[0] += count;
      } else if (bi >= tri) {
        votes[1] += count;
      } else {
        votes[2] += count;
      }
    }
  }
  const double total = votes[0] + votes[1] + votes[2];
  if (total <= 0) {
    weights_ = InterpolationWeights{};
    return;
  }
  weights_.unigram = votes[0] / total;
  weights_.bigram = votes[1] / total;
  weights_.trigram = std::max(0.0, 1.0 - weights_.unigram - weights_.bigram);
}

std::optional<int> TaggerModel::TagIndex(std::string_view tag) const {
  const auto it = tag_index_.find(std::string(tag));
  if (it == tag_index_.end()) return std::nullopt;
  return it->second;
}

double TaggerModel::Transition(int a, int b, int c) const {
  const int width = num_tags() + 1;
  const double uni = static_cast<double>(unigram_[c]) / unigram_total_;
  // An unseen context borrows the next lower order's estimate, so every
  // context still yields a proper distribution over outcomes.
  double bi = uni;
  if (bigram_context_[b] > 0) {
    bi = static_cast<double>(bigram_[static_cast<std::size_t>(b) * width + c]) /
         bigram_context_[b];
  }
  double tri = bi;
  const auto ctx = trigram_context_.find(Key(a, b));
  if (ctx != trigram_context_.end() && ctx->second > 0) {
    const auto &outcomes = trigram_.at(Key(a, b));
    const auto it = outcomes.find(c);
    tri = it == outcomes.end() ? 0.0 : static_cast<double>(it->second) / ctx->second;
  }
  return weights_.unigram * uni + weights_.bigram * bi + weights_.trigram * tri;
}

double TaggerModel::LogTransition(int a, int b, int c) const {
  const double p = Transition(a, b, c);
  return p > 0 ? std::log(p) : kNegInf;
}

bool TaggerModel::IsKnown(std::string_view word) const {
  return lexicon_.count(NormalizeWord(word)) > 0;
}

std::vector<double> TaggerModel::SuffixDistribution(std::string_view word) const {
  std::vector<double> dist = tag_prior_;
  const std::u32string w = ToU32(NormalizeWord(word));
  const int longest = std::min<int>(options_.max_suffix_length, static_cast<int>(w.size()));
  for (int len = 1; len <= longest; ++len) {
    const std::string suffix = ToUtf8(std::u32string_view(w).substr(w.size() - len));
    const auto it = suffix_counts_.find(suffix);
    if (it == suffix_counts_.end()) break;
    const double total = static_cast<double>(suffix_total_.at(suffix));
    for (int t = 0; t < num_tags(); ++t) {
      const double ml = static_cast<double>(it->second[t]) / total;
      dist[t] = (ml + theta_ * dist[t]) / (1.0 + theta_);
    }
  }
  return dist;
}

double TaggerModel::LogEmission(std::string_view word, int tag) const {
  const std::string w = NormalizeWord(word);
  const auto it = lexicon_.find(w);
  if (it != lexicon_.end()) {
    for (const auto &[t, count] : it->second) {
      if (t == tag) return std::log(static_cast<double>(count) / tag_total_[t]);
    }
    return kNegInf;
  }
  if (tag_prior_[tag] <= 0) return kNegInf;
  const double p = SuffixDistribution(word)[tag];
  return p > 0 ? std::log(p / tag_prior_[tag]) : kNegInf;
}

std::vector<int> TaggerModel::CandidateTags(std::string_view word) const {
  std::vector<int> tags;
  const auto it = lexicon_.find(NormalizeWord(word));
  if (it != lexicon_.end()) {
    for (const auto &entry : it->second) tags.push_back(entry.first);
    return tags;
  }
  for (int t = 0; t < num_tags(); ++t) tags.push_back(t);
  return tags;
}

std::vector<int> TaggerModel::Decode(const std::vector<std::string> &words) const {
  const std::size_t n = words.size();
  if (n == 0) return {};
  const int start = start_index();

  // Emission scores per position, restricted to candidate tags.
  std::vector<std::vector<int>> cands(n);
  std::vector<std::vector<double>> emit(n);
  for (std::size_t i = 0; i < n; ++i) {
    cands[i] = CandidateTags(words[i]);
    for (int t : cands[i]) emit[i].push_back(LogEmission(words[i], t));
  }

  // State at position i is (tag at i-1, tag at i); the tag at i-1 is given
  // as an index into cands[i-1], or 0 for the start symbol when i == 0.
  const auto prev_tag = [&](std::size_t i, std::size_t p) {
    return i == 0 ? start : cands[i - 1][p];
  };
  const auto prev_size = [&](std::size_t i) { return i == 0 ? std::size_t{1} : cands[i - 1].size(); };

  std::vector<std::vector<std::vector<double>>> score(n);
  std::vector<std::vector<std::vector<std::size_t>>> back(n);
  for (std::size_t i = 0; i < n; ++i) {
    score[i].assign(prev_size(i), std::vector<double>(cands[i].size(), kNegInf));
    back[i].assign(prev_size(i), std::vector<std::size_t>(cands[i].size(), 0));
  }
  for (std::size_t c = 0; c < cands[0].size(); ++c) {
    score[0][0][c] = LogTransition(start, start, cands[0][c]) + emit[0][c];
  }
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t p = 0; p < cands[i - 1].size(); ++p) {
      const int b = cands[i - 1][p];
      for (std::size_t c = 0; c < cands[i].size(); ++c) {
        double best = kNegInf;
        std::size_t best_pp = 0;
        for (std::size_t pp = 0; pp < prev_size(i - 1); ++pp) {
          const double prior = score[i - 1][pp][p];
          if (prior == kNegInf) continue;
          const double s = prior + LogTransition(prev_tag(i - 1, pp), b, cands[i][c]);
          if (s > best) {
            best = s;
            best_pp = pp;
          }
        }
        score[i][p][c] = best + emit[i][c];
        back[i][p][c] = best_pp;
      }
    }
  }

  // Close with the end symbol and pick the best final state; ties keep the
  // earliest state in tagset order.
  double best = kNegInf;
  std::size_t best_p = 0;
  std::size_t best_c = 0;
  for (std::size_t p = 0; p < prev_size(n - 1); ++p) {
    for (std::size_t c = 0; c < cands[n - 1].size(); ++c) {
      if (score[n - 1][p][c] == kNegInf) continue;
      const double s = score[n - 1][p][c] +
                       LogTransition(prev_tag(n - 1, p), cands[n - 1][c], end_index());
      if (s > best) {
        best = s;
        best_p = p;
        best_c = c;
      }
    }
  }

  std::vector<int> tags(n);
  std::size_t p = best_p;
  std::size_t c = best_c;
  for (std::size_t i = n; i-- > 0;) {
    tags[i] = cands[i][c];
    if (i == 0) break;
    const std::size_t pp = back[i][p][c];
    c = p;
    p = pp;
  }
  return tags;
}

std::vector<TaggedToken> TaggerModel::Tag(const std::vector<Token> &sentence) const {
  std::vector<std::string> words;
  words.reserve(sentence.size());
  for (const Token &token : sentence) words.push_back(token.text);
  const std::vector<int> tags = Decode(words);
  std::vector<TaggedToken> out;
  out.reserve(sentence.size());
  for (std::size_t i = 0; i < sentence.size(); ++i) {
    out.push_back({sentence[i], tagset_[tags[i]], coarse_[tags[i]]});
  }
  return out;
}

std::int64_t TaggerModel::TrigramCount(std::string_view a, std::string_view b,
                                       std::string_view c) const {
  const auto it = counts_.trigrams.find({std::string(a), std::string(b), std::string(c)});
  return it == counts_.trigrams.end() ? 0 : it->second;
}

std::int64_t TaggerModel::EmissionCount(std::string_view tag, std::string_view word) const {
  const auto it = counts_.emissions.find({std::string(tag), NormalizeWord(word)});
  return it == counts_.emissions.end() ? 0 : it->second;
}

// Model file layout (UTF-8 text, TAB-separated, fields escaped):
//
//   SIMILE-TAGGER <version>
//   options <max_suffix_length> <rare_word_threshold> <transliterate 0|1>
//   weights <unigram> <bigram> <trigram>
//   tags <n>            then n lines: <fine_tag> <V|A|N|O>
//   trigrams <n>        then n lines: <a> <b> <c> <count>
//   emissions <n>       then n lines: <tag> <word> <count>
//   end
std::string TaggerModel::Serialize() const {
  std::ostringstream out;
  out.precision(17);
  out << kModelMagic << '\t' << kModelVersion << '\n';
  out << "options\t" << options_.max_suffix_length << '\t' << options_.rare_word_threshold
      << '\t' << (options_.transliterate ? 1 : 0) << '\n';
  out << "weights\t" << weights_.unigram << '\t' << weights_.bigram << '\t'
      << weights_.trigram << '\n';
  out << "tags\t" << tagset_.size() << '\n';
  for (int t = 0; t < num_tags(); ++t) {
    out << EscapeField(tagset_[t]) << '\t' << CoarseSymbol(coarse_[t]) << '\n';
  }
  out << "trigrams\t" << counts_.trigrams.size() << '\n';
  for (const auto &[key, count] : counts_.trigrams) {
    const auto &[a, b, c] = key;
    out << EscapeField(a) << '\t' << EscapeField(b) << '\t' << EscapeField(c) << '\t'
        << count << '\n';
  }
  out << "emissions\t" << counts_.emissions.size() << '\n';
  for (const auto &[key, count] : counts_.emissions) {
    out << EscapeField(key.first) << '\t' << EscapeField(key.second) << '\t' << count << '\n';
  }
  out << "end\n";
  return out.str();
}

void TaggerModel::Save(const std::filesystem::path &path) const {
  WriteFileAtomic(path, Serialize());
}

namespace {

class ModelReader {
 public:
  explicit ModelReader(std::string_view contents) : lines_(SplitLines(contents)) {}

  std::vector<std::string> Next(std::string_view expect_head, std::size_t fields) {
    if (pos_ >= lines_.size()) Fail("unexpected end of file");
    std::vector<std::string> parts = SplitTabs(lines_[pos_++]);
    if (!expect_head.empty() && parts.front() != expect_head) {
      Fail("expected '" + std::string(expect_head) + "'");
    }
    if (parts.size() != fields) Fail("expected " + std::to_string(fields) + " fields");
    for (std::string &p : parts) p = UnescapeField(p);
    return parts;
  }

  [[noreturn]] void Fail(const std::string &what) const {
    throw ParseError("tagger model line " + std::to_string(pos_) + ": " + what);
  }

  bool AtEnd() const { return pos_ >= lines_.size(); }

 private:
  std::vector<std::string> lines_;
  std::size_t pos_ = 0;
};

std::int64_t ParseInt(const std::string &s, ModelReader &reader) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) reader.Fail("bad integer '" + s + "'");
    return v;
  } catch (const std::logic_error &) {
    reader.Fail("bad integer '" + s + "'");
  }
}

double ParseDouble(const std::string &s, ModelReader &reader) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) reader.Fail("bad number '" + s + "'");
    return v;
  } catch (const std::logic_error &) {
    reader.Fail("bad number '" + s + "'");
  }
}

}  // namespace

TaggerModel TaggerModel::Deserialize(std::string_view contents) {
  ModelReader reader(contents);
  const std::vector<std::string> header = reader.Next("", 2);
  if (header[0] != kModelMagic) reader.Fail("not a tagger model (bad magic header)");
  if (ParseInt(header[1], reader) != kModelVersion) {
    reader.Fail("unsupported tagger model version " + header[1]);
  }
  const std::vector<std::string> opts = reader.Next("options", 4);
  TaggerOptions options;
  options.max_suffix_length = static_cast<int>(ParseInt(opts[1], reader));
  options.rare_word_threshold = ParseInt(opts[2], reader);
  options.transliterate = ParseInt(opts[3], reader) != 0;
  const std::vector<std::string> w = reader.Next("weights", 4);
  const InterpolationWeights weights{ParseDouble(w[1], reader), ParseDouble(w[2], reader),
                                     ParseDouble(w[3], reader)};

  CoarseMap coarse_map;
  const std::int64_t num_tags = ParseInt(reader.Next("tags", 2)[1], reader);
  for (std::int64_t i = 0; i < num_tags; ++i) {
    const std::vector<std::string> t = reader.Next("", 2);
    const std::optional<CoarseTag> coarse = ParseCoarseSymbol(t[1]);
    if (!coarse) reader.Fail("bad coarse tag '" + t[1] + "'");
    coarse_map.Override(t[0], *coarse);
  }
  TaggerCounts counts;
  const std::int64_t num_trigrams = ParseInt(reader.Next("trigrams", 2)[1], reader);
  for (std::int64_t i = 0; i < num_trigrams; ++i) {
    const std::vector<std::string> t = reader.Next("", 4);
    counts.trigrams[{t[0], t[1], t[2]}] = ParseInt(t[3], reader);
  }
  const std::int64_t num_emissions = ParseInt(reader.Next("emissions", 2)[1], reader);
  for (std::int64_t i = 0; i < num_emissions; ++i) {
    const std::vector<std::string> t = reader.Next("", 3);
    counts.emissions[{t[0], t[1]}] = ParseInt(t[2], reader);
  }
  reader.Next("end", 1);

  try {
    TaggerModel model = FromCounts(counts, std::move(coarse_map), options, weights);
    if (model.num_tags() != num_tags) {
      throw ParseError("tagger model tag list does not match its counts");
    }
    return model;
  } catch (const InvalidArgument &e) {
    throw ParseError(std::string("corrupt tagger model: ") + e.what());
  }
}

TaggerModel TaggerModel::Load(const std::filesystem::path &path) {
  try {
    return Deserialize(ReadFile(path));
  } catch (const ParseError &e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace simile
