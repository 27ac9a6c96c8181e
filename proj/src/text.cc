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

#include "simile/text.h"

#include <algorithm>
#include <array>
#include <cctype>

namespace simile {

char32_t DecodeUtf8(std::string_view text, std::size_t &pos) {
  const auto byte = [&](std::size_t i) {
    return static_cast<unsigned char>(text[i]);
  };
  const unsigned char lead = byte(pos);
  if (lead < 0x80) {
    ++pos;
    return lead;
  }
  int extra;
  char32_t cp;
  if ((lead & 0xE0) == 0xC0) {
    extra = 1;
    cp = lead & 0x1F;
  } else if ((lead & 0xF0) == 0xE0) {
    extra = 2;
    cp = lead & 0x0F;
  } else if ((lead & 0xF8) == 0xF0) {
    extra = 3;
    cp = lead & 0x07;
  } else {
    ++pos;
    return kReplacementChar;
  }
  if (pos + extra >= text.size()) {
    ++pos;
    return kReplacementChar;
  }
  for (int i = 1; i <= extra; ++i) {
    const unsigned char c = byte(pos + i);
    if ((c & 0xC0) != 0x80) {
      ++pos;
      return kReplacementChar;
    }
    cp = (cp << 6) | (c & 0x3F);
  }
  // Reject overlong forms, surrogates and out-of-range values.
  static constexpr std::array<char32_t, 4> kMin = {0, 0x80, 0x800, 0x10000};
  if (cp < kMin[extra] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
    ++pos;
    return kReplacementChar;
  }
  pos += extra + 1;
  return cp;
}

void AppendUtf8(char32_t cp, std::string *out) {
  if (cp < 0x80) {
    out->push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out->push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out->push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out->push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::u32string ToU32(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  for (std::size_t pos = 0; pos < text.size();) out.push_back(DecodeUtf8(text, pos));
  return out;
}

std::string ToUtf8(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : text) AppendUtf8(cp, &out);
  return out;
}

bool IsValidUtf8(std::string_view text) {
  for (std::size_t pos = 0; pos < text.size();) {
    const std::size_t start = pos;
    const char32_t cp = DecodeUtf8(text, pos);
    if (cp == kReplacementChar && pos - start == 1 &&
        static_cast<unsigned char>(text[start]) >= 0x80) {
      return false;
    }
  }
  return true;
}

std::string SanitizeUtf8(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t pos = 0; pos < text.size();) AppendUtf8(DecodeUtf8(text, pos), &out);
  return out;
}

std::size_t Utf8Length(std::string_view text) {
  std::size_t n = 0;
  for (std::size_t pos = 0; pos < text.size(); ++n) DecodeUtf8(text, pos);
  return n;
}

bool IsSpace(char32_t cp) {
  switch (cp) {
    case ' ': case '\t': case '\n': case '\r': case '\f': case '\v':
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200B;
  }
}

bool IsDigit(char32_t cp) { return cp >= '0' && cp <= '9'; }

bool IsLetter(char32_t cp) {
  if (cp < 0x80) return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z');
  if (cp <= 0xBF) return false;
  if (cp == 0xD7 || cp == 0xF7) return false;
  if (cp >= 0x2000 && cp <= 0x2BFF) return false;
  if (cp >= 0x3000 && cp <= 0x303F) return false;
  if (cp == kReplacementChar || IsSpace(cp)) return false;
  return true;
}

bool IsUpper(char32_t cp) { return ToLower(cp) != cp; }

char32_t ToLower(char32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
  if (cp < 0xC0) return cp;
  if (cp <= 0xDE) return cp == 0xD7 ? cp : cp + 0x20;
  if (cp >= 0x100 && cp <= 0x137) return (cp % 2 == 0) ? cp + 1 : cp;
  if (cp >= 0x139 && cp <= 0x148) return (cp % 2 == 1) ? cp + 1 : cp;
  if (cp >= 0x14A && cp <= 0x177) return (cp % 2 == 0) ? cp + 1 : cp;
  if (cp == 0x178) return 0xFF;
  if (cp >= 0x179 && cp <= 0x17E) return (cp % 2 == 1) ? cp + 1 : cp;
  if (cp >= 0x400 && cp <= 0x40F) return cp + 0x50;
  if (cp >= 0x410 && cp <= 0x42F) return cp + 0x20;
  return cp;
}

std::string Lowercase(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t pos = 0; pos < text.size();) {
    AppendUtf8(ToLower(DecodeUtf8(text, pos)), &out);
  }
  return out;
}

namespace {

// Latin rendering of a lowercase Serbian Cyrillic letter, or empty.
std::u32string_view LatinOf(char32_t lower) {
  switch (lower) {
    case U'а': return U"a";
    case U'б': return U"b";
    case U'в': return U"v";
    case U'г': return U"g";
    case U'д': return U"d";
    case U'ђ': return U"đ";
    case U'е': return U"e";
    case U'ж': return U"ž";
    case U'з': return U"z";
    case U'и': return U"i";
    case U'ј': return U"j";
    case U'к': return U"k";
    case U'л': return U"l";
    case U'љ': return U"lj";
    case U'м': return U"m";
    case U'н': return U"n";
    case U'њ': return U"nj";
    case U'о': return U"o";
    case U'п': return U"p";
    case U'р': return U"r";
    case U'с': return U"s";
    case U'т': return U"t";
    case U'ћ': return U"ć";
    case U'у': return U"u";
    case U'ф': return U"f";
    case U'х': return U"h";
    case U'ц': return U"c";
    case U'ч': return U"č";
    case U'џ': return U"dž";
    case U'ш': return U"š";
    default: return {};
  }
}

char32_t ToUpperLatin(char32_t cp) {
  if (cp >= 'a' && cp <= 'z') return cp - 0x20;
  switch (cp) {
    case U'č': return U'Č';
    case U'ć': return U'Ć';
    case U'đ': return U'Đ';
    case U'š': return U'Š';
    case U'ž': return U'Ž';
    default: return cp;
  }
}

}  // namespace

std::string CyrillicToLatin(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t pos = 0; pos < text.size();) {
    const char32_t cp = DecodeUtf8(text, pos);
    const char32_t lower = ToLower(cp);
    const std::u32string_view latin = LatinOf(lower);
    if (latin.empty()) {
      AppendUtf8(cp, &out);
      continue;
    }
    const bool upper = lower != cp;
    for (std::size_t i = 0; i < latin.size(); ++i) {
      // Title case for digraphs: Љ -> Lj.
      AppendUtf8(upper && i == 0 ? ToUpperLatin(latin[i]) : latin[i], &out);
    }
  }
  return out;
}

std::string NormalizeApostrophes(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t pos = 0; pos < text.size();) {
    const char32_t cp = DecodeUtf8(text, pos);
    if (cp == 0x2019 || cp == 0x2018 || cp == 0x02BC || cp == '`') {
      out.push_back('\'');
    } else {
      AppendUtf8(cp, &out);
    }
  }
  return out;
}

std::string NormalizeForm(std::string_view text, bool transliterate) {
  std::string out = NormalizeApostrophes(text);
  if (transliterate) out = CyrillicToLatin(out);
  return Lowercase(out);
}

namespace {

// Collation element sequence for Serbian Latin order.
std::vector<int> CollationKey(std::string_view text) {
  static constexpr std::u32string_view kAlphabet[] = {
      U"a", U"b", U"c", U"č", U"ć", U"d", U"dž", U"đ", U"e", U"f",
      U"g", U"h", U"i", U"j", U"k", U"l", U"lj", U"m", U"n", U"nj",
      U"o", U"p", U"q", U"r", U"s", U"š", U"t", U"u", U"v", U"w",
      U"x", U"y", U"z", U"ž"};
  const std::u32string s = ToU32(NormalizeForm(text));
  std::vector<int> key;
  key.reserve(s.size());
  for (std::size_t i = 0; i < s.size();) {
    int rank = -1;
    std::size_t width = 1;
    for (int r = 0; r < static_cast<int>(std::size(kAlphabet)); ++r) {
      const std::u32string_view letter = kAlphabet[r];
      if (s.compare(i, letter.size(), letter) == 0 && letter.size() >= width) {
        if (rank < 0 || letter.size() > width) {
          rank = r;
          width = letter.size();
        }
      }
    }
    if (rank >= 0) {
      key.push_back(2000 + rank);
    } else if (IsDigit(s[i])) {
      key.push_back(1000 + static_cast<int>(s[i] - '0'));
    } else if (IsLetter(s[i])) {
      key.push_back(3000 + static_cast<int>(s[i]));
    } else {
      key.push_back(static_cast<int>(std::min<char32_t>(s[i], 999)));
    }
    i += width;
  }
  return key;
}

}  // namespace

int CollateSerbian(std::string_view a, std::string_view b) {
  const std::vector<int> ka = CollationKey(a);
  const std::vector<int> kb = CollationKey(b);
  if (ka != kb) return ka < kb ? -1 : 1;
  if (a == b) return 0;
  return a < b ? -1 : 1;
}

std::vector<std::string> SplitWhitespace(std::string_view text) {
  std::vector<std::string> parts;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) parts.emplace_back(text.substr(start, i - start));
  }
  return parts;
}

std::string_view Trim(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  return text.substr(begin, end - begin);
}

std::string Join(const std::vector<std::string> &parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out.append(sep);
    out.append(parts[i]);
  }
  return out;
}

std::string EscapeField(std::string_view value) {
  std::string out;
  out.reserve(value.size());
  for (char c : value) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string UnescapeField(std::string_view value) {
  std::string out;
  out.reserve(value.size());
  for (std::size_t i = 0; i < value.size(); ++i) {
    if (value[i] != '\\' || i + 1 == value.size()) {
      out.push_back(value[i]);
      continue;
    }
    switch (value[++i]) {
      case 't': out.push_back('\t'); break;
      case 'n': out.push_back('\n'); break;
      case 'r': out.push_back('\r'); break;
      default: out.push_back(value[i]);
    }
  }
  return out;
}

std::vector<std::string> SplitTabs(std::string_view line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.emplace_back(line.substr(start));
      break;
    }
    fields.emplace_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return fields;
}

}  // namespace simile
