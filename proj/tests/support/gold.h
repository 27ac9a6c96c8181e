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

#ifndef SIMILE_TESTS_SUPPORT_GOLD_H_
#define SIMILE_TESTS_SUPPORT_GOLD_H_

#include <string>
#include <vector>

#include "simile/errors.h"
#include "simile/io.h"
#include "simile/tagger.h"
#include "simile/text.h"

namespace simile::testing {

struct GoldSentence {
  std::vector<TaggedToken> tokens;
  std::vector<std::string> expected;
};

// Tag "Z" marks punctuation; other tags go through CoarseOf.
inline std::vector<GoldSentence> ParseGold(const std::string &contents) {
  std::vector<GoldSentence> out;
  GoldSentence current;
  for (const std::string &line : SplitLines(contents)) {
    if (!line.empty() && line[0] == '#') continue;
    if (Trim(line).empty()) {
      if (!current.tokens.empty()) out.push_back(std::move(current));
      current = {};
      continue;
    }
    if (line.rfind("=> ", 0) == 0) {
      current.expected.push_back(line.substr(3));
      continue;
    }
    const auto fields = SplitTabs(line);
    if (fields.size() != 2) throw ParseError("bad gold line: " + line);
    TaggedToken t;
    t.token.text = fields[0];
    t.token.kind = fields[1] == "Z" ? TokenKind::kPunctuation : TokenKind::kWord;
    t.fine_tag = fields[1];
    t.coarse = CoarseOf(fields[1]);
    current.tokens.push_back(std::move(t));
  }
  if (!current.tokens.empty()) out.push_back(std::move(current));
  return out;
}

}  // namespace simile::testing

#endif  // SIMILE_TESTS_SUPPORT_GOLD_H_
