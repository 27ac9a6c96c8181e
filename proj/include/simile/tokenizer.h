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

#ifndef SIMILE_TOKENIZER_H_
#define SIMILE_TOKENIZER_H_

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace simile {

enum class TokenKind { kWord, kPunctuation, kNumber };

struct Token {
  std::string text;
  TokenKind kind = TokenKind::kWord;

  bool operator==(const Token &other) const = default;
};

// Byte range [begin, end) into a source string.
struct TextSpan {
  std::size_t begin = 0;
  std::size_t end = 0;

  bool operator==(const TextSpan &other) const = default;
};

struct Sentence {
  std::vector<Token> tokens;
  std::size_t source_offset = 0;
};

// Lowercased abbreviations (without the trailing period) that do not end a
// sentence. File format: one abbreviation per line, '#' starts a comment.
class AbbreviationList {
 public:
  AbbreviationList() = default;
  explicit AbbreviationList(std::unordered_set<std::string> entries)
      : entries_(std::move(entries)) {}

  static AbbreviationList Parse(std::string_view contents);
  static AbbreviationList Load(const std::filesystem::path &path);
  static const AbbreviationList &Bundled();

  bool Contains(std::string_view word) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::unordered_set<std::string> entries_;
};

// Sentence boundaries: after a run of . ! ? … (plus closing quotes or
// brackets) that is followed by whitespace and an uppercase letter, or by
// the end of the text. A period after a listed abbreviation never splits.
std::vector<TextSpan> SplitSentences(
    std::string_view text,
    const AbbreviationList &abbreviations = AbbreviationList::Bundled());

// Splits one sentence into tokens. Apostrophes and hyphens between two
// alphanumeric characters stay inside the word ("k'o", "crno-beli"); every
// other punctuation character is its own token, except that runs of periods
// form one token.
std::vector<Token> Tokenize(std::string_view sentence_text);

// SplitSentences followed by Tokenize on every span.
std::vector<Sentence> Segment(
    std::string_view text,
    const AbbreviationList &abbreviations = AbbreviationList::Bundled());

}  // namespace simile

#endif  // SIMILE_TOKENIZER_H_
