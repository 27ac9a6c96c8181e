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

#ifndef SIMILE_STEMMER_H_
#define SIMILE_STEMMER_H_

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace simile {

struct StemTransform {
  std::string suffix;
  std::string replacement;
};

// Rule table for the suffix-stripping stemmer.
//
// File format (UTF-8):
//
//   min_stem_len=2
//   [transforms]
//   eo<TAB>el
//   [suffixes]
//   ima
//   a
//
// Blank lines and '#' comments are ignored. Suffixes are kept longest-first
// regardless of file order; duplicates are an error.
class StemRuleTable {
 public:
  StemRuleTable(std::vector<StemTransform> transforms,
                std::vector<std::string> suffixes, std::size_t min_stem_len);

  static StemRuleTable Parse(std::string_view contents);
  static StemRuleTable Load(const std::filesystem::path &path);
  static const StemRuleTable &Bundled();

  const std::vector<StemTransform> &transforms() const { return transforms_; }
  const std::vector<std::string> &suffixes() const { return suffixes_; }
  std::size_t min_stem_len() const { return min_stem_len_; }

 private:
  std::vector<StemTransform> transforms_;
  std::vector<std::string> suffixes_;
  std::size_t min_stem_len_;
};

class Stemmer {
 public:
  explicit Stemmer(StemRuleTable rules = StemRuleTable::Bundled(),
                   bool transliterate = true);

  // Stemmer over the bundled rules, shared and immutable.
  static const Stemmer &Default();

  // Lowercases and script-normalizes, then runs transform+strip passes to a
  // fixed point. Words no longer than min_stem_len come back lowercased.
  std::string Stem(std::string_view word) const;

  // Stems every word and number token of the phrase and joins them with
  // single spaces. Punctuation is dropped.
  std::string StemPhrase(std::string_view phrase) const;

  const StemRuleTable &rules() const { return rules_; }

 private:
  struct Rule {
    std::u32string suffix;
    std::u32string replacement;
  };

  StemRuleTable rules_;
  bool transliterate_;
  std::vector<Rule> transforms_;
  std::vector<std::u32string> suffixes_;
};

}  // namespace simile

#endif  // SIMILE_STEMMER_H_
