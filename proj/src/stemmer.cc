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

#include "simile/stemmer.h"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "simile/bundled_data.h"
#include "simile/errors.h"
#include "simile/io.h"
#include "simile/text.h"
#include "simile/tokenizer.h"

namespace simile {
namespace {

bool EndsWith(const std::u32string &word, const std::u32string &suffix) {
  return word.size() >= suffix.size() &&
         word.compare(word.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Passes stop changing a word long before this with any sane table; the cap
// only guards against cyclic user transforms.
constexpr int kMaxPasses = 32;

}  // namespace

StemRuleTable::StemRuleTable(std::vector<StemTransform> transforms,
                             std::vector<std::string> suffixes,
                             std::size_t min_stem_len)
    : transforms_(std::move(transforms)),
      suffixes_(std::move(suffixes)),
      min_stem_len_(min_stem_len) {
  if (min_stem_len_ < 1) throw InvalidArgument("min_stem_len must be at least 1");
  std::unordered_set<std::string> seen;
  for (const std::string &suffix : suffixes_) {
    if (suffix.empty()) throw InvalidArgument("empty suffix in stem rules");
    if (!seen.insert(suffix).second) {
      throw InvalidArgument("duplicate suffix in stem rules: " + suffix);
    }
  }
  for (const StemTransform &t : transforms_) {
    if (t.suffix.empty()) throw InvalidArgument("empty transform pattern in stem rules");
  }
  std::stable_sort(suffixes_.begin(), suffixes_.end(),
                   [](const std::string &a, const std::string &b) {
                     return Utf8Length(a) > Utf8Length(b);
                   });
}

StemRuleTable StemRuleTable::Parse(std::string_view contents) {
  enum class Section { kNone, kTransforms, kSuffixes };
  Section section = Section::kNone;
  std::vector<StemTransform> transforms;
  std::vector<std::string> suffixes;
  std::size_t min_stem_len = 2;
  int line_no = 0;
  for (const std::string &raw : SplitLines(contents)) {
    ++line_no;
    std::string_view line = raw;
    const std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    // Tabs are significant inside transform lines, so only trim the ends.
    line = Trim(line);
    if (line.empty()) continue;
    const auto fail = [&](const std::string &what) {
      throw ParseError("stem rules line " + std::to_string(line_no) + ": " + what);
    };
    if (line == "[transforms]") {
      section = Section::kTransforms;
    } else if (line == "[suffixes]") {
      section = Section::kSuffixes;
    } else if (line.front() == '[') {
      fail("unknown section " + std::string(line));
    } else if (line.rfind("min_stem_len=", 0) == 0) {
      const std::string value(line.substr(13));
      try {
        std::size_t used = 0;
        const long parsed = std::stol(value, &used);
        if (used != value.size() || parsed < 1) fail("min_stem_len must be a positive integer");
        min_stem_len = static_cast<std::size_t>(parsed);
      } catch (const std::logic_error &) {
        fail("min_stem_len must be a positive integer");
      }
    } else if (section == Section::kTransforms) {
      const std::vector<std::string> fields = SplitTabs(line);
      if (fields.size() != 2 || fields[0].empty()) fail("expected suffix<TAB>replacement");
      transforms.push_back({NormalizeForm(fields[0]), NormalizeForm(fields[1])});
    } else if (section == Section::kSuffixes) {
      if (line.find_first_of(" \t") != std::string_view::npos) fail("suffix contains whitespace");
      suffixes.push_back(NormalizeForm(line));
    } else {
      fail("rule outside of a section");
    }
  }
  try {
    return StemRuleTable(std::move(transforms), std::move(suffixes), min_stem_len);
  } catch (const InvalidArgument &e) {
    throw ParseError(e.what());
  }
}

StemRuleTable StemRuleTable::Load(const std::filesystem::path &path) {
  return Parse(ReadFile(path));
}

const StemRuleTable &StemRuleTable::Bundled() {
  static const StemRuleTable table = Parse(bundled::kStemmerRules);
  return table;
}

Stemmer::Stemmer(StemRuleTable rules, bool transliterate)
    : rules_(std::move(rules)), transliterate_(transliterate) {
  for (const StemTransform &t : rules_.transforms()) {
    transforms_.push_back({ToU32(t.suffix), ToU32(t.replacement)});
  }
  for (const std::string &s : rules_.suffixes()) suffixes_.push_back(ToU32(s));
}

const Stemmer &Stemmer::Default() {
  static const Stemmer stemmer;
  return stemmer;
}

std::string Stemmer::Stem(std::string_view word) const {
  std::u32string w = ToU32(NormalizeForm(word, transliterate_));
  const std::size_t min_len = rules_.min_stem_len();
  if (w.size() <= min_len) return ToUtf8(w);

  std::set<std::u32string> seen;
  for (int pass = 0; pass < kMaxPasses && seen.insert(w).second; ++pass) {
    std::u32string next = w;
    for (const Rule &t : transforms_) {
      if (EndsWith(next, t.suffix)) {
        std::u32string replaced = next.substr(0, next.size() - t.suffix.size()) + t.replacement;
        if (replaced.size() >= min_len) next = std::move(replaced);
        break;
      }
    }
    for (const std::u32string &suffix : suffixes_) {
      if (EndsWith(next, suffix) && next.size() - suffix.size() >= min_len) {
        next.resize(next.size() - suffix.size());
        break;
      }
    }
    if (next == w) break;
    w = std::move(next);
  }
  return ToUtf8(w);
}

std::string Stemmer::StemPhrase(std::string_view phrase) const {
  std::vector<std::string> stems;
  for (const Token &token : Tokenize(phrase)) {
    if (token.kind == TokenKind::kPunctuation) continue;
    stems.push_back(Stem(token.text));
  }
  return Join(stems, " ");
}

}  // namespace simile
