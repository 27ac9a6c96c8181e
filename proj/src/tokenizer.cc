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

#include "simile/tokenizer.h"

#include "simile/bundled_data.h"
#include "simile/errors.h"
#include "simile/io.h"
#include "simile/text.h"

namespace simile {

AbbreviationList AbbreviationList::Parse(std::string_view contents) {
  std::unordered_set<std::string> entries;
  std::size_t start = 0;
  while (start <= contents.size()) {
    std::size_t end = contents.find('\n', start);
    if (end == std::string_view::npos) end = contents.size();
    std::string_view line = contents.substr(start, end - start);
    const std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    line = Trim(line);
    while (!line.empty() && line.back() == '.') line.remove_suffix(1);
    if (!line.empty()) entries.insert(NormalizeForm(line));
    start = end + 1;
  }
  return AbbreviationList(std::move(entries));
}

AbbreviationList AbbreviationList::Load(const std::filesystem::path &path) {
  return Parse(ReadFile(path));
}

const AbbreviationList &AbbreviationList::Bundled() {
  static const AbbreviationList list = Parse(bundled::kAbbreviations);
  return list;
}

bool AbbreviationList::Contains(std::string_view word) const {
  return entries_.count(NormalizeForm(word)) > 0;
}

namespace {

struct CodePoint {
  char32_t cp;
  std::size_t begin;
  std::size_t end;
};

std::vector<CodePoint> Decode(std::string_view text) {
  std::vector<CodePoint> cps;
  cps.reserve(text.size());
  for (std::size_t pos = 0; pos < text.size();) {
    const std::size_t begin = pos;
    const char32_t cp = DecodeUtf8(text, pos);
    cps.push_back({cp, begin, pos});
  }
  return cps;
}

bool IsTerminal(char32_t cp) {
  return cp == '.' || cp == '!' || cp == '?' || cp == 0x2026;
}

bool IsClosing(char32_t cp) {
  switch (cp) {
    case '"': case '\'': case ')': case ']': case 0x201D: case 0x2019:
    case 0x00BB: case 0x201C:
      return true;
    default:
      return false;
  }
}

bool IsOpening(char32_t cp) {
  switch (cp) {
    case '"': case '(': case '[': case 0x201E: case 0x201C: case 0x00AB:
    case '-': case 0x2013: case 0x2014:
      return true;
    default:
      return false;
  }
}

bool IsApostrophe(char32_t cp) {
  return cp == '\'' || cp == 0x2019 || cp == 0x02BC;
}

bool IsWordInternal(char32_t cp) { return IsApostrophe(cp) || cp == '-'; }

bool IsAlnum(char32_t cp) { return IsLetter(cp) || IsDigit(cp); }

}  // namespace

std::vector<TextSpan> SplitSentences(std::string_view text,
                                     const AbbreviationList &abbreviations) {
  const std::vector<CodePoint> cps = Decode(text);
  std::vector<TextSpan> spans;
  const std::size_t n = cps.size();
  std::size_t i = 0;
  while (i < n && IsSpace(cps[i].cp)) ++i;
  if (i == n) return spans;
  std::size_t sentence_begin = i;
  std::size_t last_nonspace_end = cps[i].end;

  while (i < n) {
    if (!IsSpace(cps[i].cp)) last_nonspace_end = cps[i].end;
    if (!IsTerminal(cps[i].cp)) {
      ++i;
      continue;
    }
    // The word right before a lone period may be an abbreviation.
    bool abbreviation = false;
    if (cps[i].cp == '.' && (i + 1 >= n || cps[i + 1].cp != '.')) {
      std::size_t w = i;
      while (w > 0 && IsLetter(cps[w - 1].cp)) --w;
      if (w < i) {
        abbreviation = abbreviations.Contains(
            text.substr(cps[w].begin, cps[i].begin - cps[w].begin));
      }
    }
    std::size_t j = i;
    while (j < n && IsTerminal(cps[j].cp)) ++j;
    while (j < n && IsClosing(cps[j].cp)) ++j;
    const std::size_t boundary_end = cps[j - 1].end;
    std::size_t k = j;
    while (k < n && IsSpace(cps[k].cp)) ++k;
    bool split = false;
    if (!abbreviation) {
      if (k == n) {
        split = true;
      } else if (k > j) {
        std::size_t m = k;
        while (m < n && IsOpening(cps[m].cp)) ++m;
        split = m < n && IsUpper(cps[m].cp);
      }
    }
    if (split) {
      spans.push_back({cps[sentence_begin].begin, boundary_end});
      if (k == n) return spans;
      sentence_begin = k;
      last_nonspace_end = cps[k].end;
      i = k;
    } else {
      last_nonspace_end = boundary_end;
      i = j;
    }
  }
  spans.push_back({cps[sentence_begin].begin, last_nonspace_end});
  return spans;
}

std::vector<Token> Tokenize(std::string_view sentence_text) {
  const std::vector<CodePoint> cps = Decode(sentence_text);
  std::vector<Token> tokens;
  const std::size_t n = cps.size();
  const auto slice = [&](std::size_t from, std::size_t to) {
    return std::string(sentence_text.substr(cps[from].begin, cps[to - 1].end - cps[from].begin));
  };
  std::size_t i = 0;
  while (i < n) {
    const char32_t cp = cps[i].cp;
    if (IsSpace(cp)) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (IsLetter(cp)) {
      ++i;
      while (i < n) {
        if (IsAlnum(cps[i].cp)) {
          ++i;
        } else if (IsWordInternal(cps[i].cp) && i + 1 < n && IsAlnum(cps[i + 1].cp)) {
          i += 2;
        } else {
          break;
        }
      }
      tokens.push_back({slice(start, i), TokenKind::kWord});
    } else if (IsDigit(cp)) {
      ++i;
      while (i < n) {
        if (IsDigit(cps[i].cp)) {
          ++i;
        } else if ((cps[i].cp == '.' || cps[i].cp == ',') && i + 1 < n &&
                   IsDigit(cps[i + 1].cp)) {
          i += 2;
        } else {
          break;
        }
      }
      tokens.push_back({slice(start, i), TokenKind::kNumber});
    } else if (cp == '.') {
      while (i < n && cps[i].cp == '.') ++i;
      tokens.push_back({slice(start, i), TokenKind::kPunctuation});
    } else {
      ++i;
      tokens.push_back({slice(start, i), TokenKind::kPunctuation});
    }
  }
  return tokens;
}

std::vector<Sentence> Segment(std::string_view text,
                              const AbbreviationList &abbreviations) {
  std::vector<Sentence> sentences;
  for (const TextSpan &span : SplitSentences(text, abbreviations)) {
    Sentence sentence;
    sentence.tokens = Tokenize(text.substr(span.begin, span.end - span.begin));
    sentence.source_offset = span.begin;
    if (!sentence.tokens.empty()) sentences.push_back(std::move(sentence));
  }
  return sentences;
}

}  // namespace simile
