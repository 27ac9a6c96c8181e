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

#ifndef SIMILE_TEXT_H_
#define SIMILE_TEXT_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace simile {

// UTF-8 helpers and Serbian script handling. Only the code points that
// matter for Serbian (ASCII, Latin Extended-A letters č ć đ š ž, and the
// Serbian Cyrillic block) get case and script mappings; everything else
// passes through untouched.

constexpr char32_t kReplacementChar = 0xFFFD;

// Decodes one code point starting at byte offset `pos`. Advances `pos`.
// Malformed sequences decode as U+FFFD and consume one byte.
char32_t DecodeUtf8(std::string_view text, std::size_t &pos);

void AppendUtf8(char32_t cp, std::string *out);

std::u32string ToU32(std::string_view text);
std::string ToUtf8(std::u32string_view text);

// True if `text` is well-formed UTF-8.
bool IsValidUtf8(std::string_view text);

// Replaces malformed sequences with U+FFFD.
std::string SanitizeUtf8(std::string_view text);

// Number of code points.
std::size_t Utf8Length(std::string_view text);

bool IsLetter(char32_t cp);
bool IsUpper(char32_t cp);
bool IsDigit(char32_t cp);
bool IsSpace(char32_t cp);

char32_t ToLower(char32_t cp);

std::string Lowercase(std::string_view text);

// Serbian Cyrillic to Latin (gaj) transliteration. Digraph letters
// (љ, њ, џ) become two Latin characters.
std::string CyrillicToLatin(std::string_view text);

// Typographic apostrophes (’ ‘ ʼ `) become the ASCII apostrophe.
std::string NormalizeApostrophes(std::string_view text);

// Canonical comparison form: apostrophes unified, optionally transliterated
// to Latin, lowercased.
std::string NormalizeForm(std::string_view text, bool transliterate = true);

// Serbian Latin collation (a b c č ć d dž đ e ... š t u v z ž, with lj and
// nj as single letters). Returns <0, 0, >0. Equal collation keys fall back to
// byte order so the ordering is total.
int CollateSerbian(std::string_view a, std::string_view b);

// Splits on ASCII whitespace, dropping empty pieces.
std::vector<std::string> SplitWhitespace(std::string_view text);

std::string_view Trim(std::string_view text);

std::string Join(const std::vector<std::string> &parts, std::string_view sep);

// Escapes backslash, tab, CR and LF so a value fits in a TSV field.
std::string EscapeField(std::string_view value);
std::string UnescapeField(std::string_view value);

std::vector<std::string> SplitTabs(std::string_view line);

}  // namespace simile

#endif  // SIMILE_TEXT_H_
