// Copyright 2025 The FairForge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fairforge/unicode.hpp"

#include <array>
#include <cstdint>

namespace fairforge {

namespace {

constexpr char32_t kReplacement = 0xFFFD;

// (base, combining mark) -> composed. Enough for the Latin diacritics that
// show up in mixed-normalization web text.
struct Composition {
  char32_t base;
  char32_t mark;
  char32_t composed;
};

constexpr std::array<Composition, 62> kCompositions{{
    // U+0300 combining grave
    {U'a', 0x0300, U'à'}, {U'e', 0x0300, U'è'}, {U'i', 0x0300, U'ì'},
    {U'o', 0x0300, U'ò'}, {U'u', 0x0300, U'ù'},
    {U'A', 0x0300, U'À'}, {U'E', 0x0300, U'È'}, {U'I', 0x0300, U'Ì'},
    {U'O', 0x0300, U'Ò'}, {U'U', 0x0300, U'Ù'},
    // U+0301 combining acute
    {U'a', 0x0301, U'á'}, {U'e', 0x0301, U'é'}, {U'i', 0x0301, U'í'},
    {U'o', 0x0301, U'ó'}, {U'u', 0x0301, U'ú'}, {U'y', 0x0301, U'ý'},
    {U'c', 0x0301, U'ć'}, {U'n', 0x0301, U'ń'}, {U's', 0x0301, U'ś'},
    {U'z', 0x0301, U'ź'},
    {U'A', 0x0301, U'Á'}, {U'E', 0x0301, U'É'}, {U'I', 0x0301, U'Í'},
    {U'O', 0x0301, U'Ó'}, {U'U', 0x0301, U'Ú'}, {U'Y', 0x0301, U'Ý'},
    {U'C', 0x0301, U'Ć'}, {U'N', 0x0301, U'Ń'}, {U'S', 0x0301, U'Ś'},
    {U'Z', 0x0301, U'Ź'},
    // U+0302 combining circumflex
    {U'a', 0x0302, U'â'}, {U'e', 0x0302, U'ê'}, {U'i', 0x0302, U'î'},
    {U'o', 0x0302, U'ô'}, {U'u', 0x0302, U'û'},
    {U'A', 0x0302, U'Â'}, {U'E', 0x0302, U'Ê'}, {U'I', 0x0302, U'Î'},
    {U'O', 0x0302, U'Ô'}, {U'U', 0x0302, U'Û'},
    // U+0303 combining tilde
    {U'a', 0x0303, U'ã'}, {U'n', 0x0303, U'ñ'}, {U'o', 0x0303, U'õ'},
    {U'A', 0x0303, U'Ã'}, {U'N', 0x0303, U'Ñ'}, {U'O', 0x0303, U'Õ'},
    // U+0308 combining diaeresis; the case German web corpora actually hit
    {U'a', 0x0308, U'ä'}, {U'e', 0x0308, U'ë'}, {U'i', 0x0308, U'ï'},
    {U'o', 0x0308, U'ö'}, {U'u', 0x0308, U'ü'}, {U'y', 0x0308, U'ÿ'},
    {U'A', 0x0308, U'Ä'}, {U'E', 0x0308, U'Ë'}, {U'I', 0x0308, U'Ï'},
    {U'O', 0x0308, U'Ö'}, {U'U', 0x0308, U'Ü'},
    // U+030A combining ring above
    {U'a', 0x030A, U'å'}, {U'A', 0x030A, U'Å'},
    // U+0327 combining cedilla
    {U'c', 0x0327, U'ç'}, {U'C', 0x0327, U'Ç'}, {U's', 0x0327, U'ş'},
}};

char32_t compose(char32_t base, char32_t mark) {
  for (const auto& c : kCompositions) {
    if (c.base == base && c.mark == mark) return c.composed;
  }
  return 0;
}

}  // namespace

std::u32string decode_utf8(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    const auto b0 = static_cast<unsigned char>(text[i]);
    if (b0 < 0x80) {
      out.push_back(b0);
      ++i;
      continue;
    }
    int len = 0;
    char32_t cp = 0;
    if ((b0 & 0xE0) == 0xC0) {
      len = 2;
      cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3;
      cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4;
      cp = b0 & 0x07;
    } else {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    if (i + len > n) {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    bool ok = true;
    for (int k = 1; k < len; ++k) {
      const auto bk = static_cast<unsigned char>(text[i + k]);
      if ((bk & 0xC0) != 0x80) {
        ok = false;
        break;
      }
      cp = (cp << 6) | (bk & 0x3F);
    }
    if (!ok || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

std::string encode_utf8(char32_t cp) {
  std::string out;
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
  return out;
}

std::string encode_utf8(std::u32string_view codepoints) {
  std::string out;
  out.reserve(codepoints.size());
  for (char32_t cp : codepoints) out += encode_utf8(cp);
  return out;
}

std::size_t codepoint_count(std::string_view text) {
  std::size_t count = 0;
  for (char c : text) {
    if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++count;
  }
  return count;
}

bool is_letter(char32_t c) {
  if ((c >= U'A' && c <= U'Z') || (c >= U'a' && c <= U'z')) return true;
  if (c >= 0xC0 && c <= 0xFF) return c != 0xD7 && c != 0xF7;
  if (c >= 0x100 && c <= 0x24F) return true;   // Latin Extended-A/B
  if (c >= 0x386 && c <= 0x3FF) return c != 0x387;  // Greek
  if (c >= 0x400 && c <= 0x4FF) return true;   // Cyrillic
  return false;
}

bool is_digit(char32_t c) { return c >= U'0' && c <= U'9'; }

bool is_space(char32_t c) {
  return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r' || c == U'\v' ||
         c == U'\f' || c == 0xA0 || c == 0x2028 || c == 0x2029;
}

bool is_upper(char32_t c) {
  if (c >= U'A' && c <= U'Z') return true;
  if (c >= 0xC0 && c <= 0xDE) return c != 0xD7;
  if (c >= 0x100 && c <= 0x137) return (c % 2) == 0;
  if (c >= 0x139 && c <= 0x148) return (c % 2) == 1;
  if (c >= 0x14A && c <= 0x177) return (c % 2) == 0;
  if (c == 0x178) return true;  // Ÿ
  if (c >= 0x179 && c <= 0x17E) return (c % 2) == 1;
  if (c >= 0x410 && c <= 0x42F) return true;
  return false;
}

bool is_lower(char32_t c) { return is_letter(c) && !is_upper(c); }

char32_t to_lower(char32_t c) {
  if (c >= U'A' && c <= U'Z') return c + 0x20;
  if (c >= 0xC0 && c <= 0xDE && c != 0xD7) return c + 0x20;
  if (c == 0x178) return 0xFF;
  if (is_upper(c) && c >= 0x100 && c <= 0x17E) return c + 1;
  if (c >= 0x410 && c <= 0x42F) return c + 0x20;
  return c;
}

char32_t to_upper(char32_t c) {
  if (c >= U'a' && c <= U'z') return c - 0x20;
  if (c >= 0xE0 && c <= 0xFE && c != 0xF7) return c - 0x20;
  if (c == 0xFF) return 0x178;
  if (c >= 0x101 && c <= 0x17E && is_upper(c - 1)) return c - 1;
  if (c >= 0x430 && c <= 0x44F) return c - 0x20;
  return c;  // ß and caseless letters stay as-is
}

std::string to_lower_copy(std::string_view text) {
  std::u32string cps = decode_utf8(text);
  for (auto& c : cps) c = to_lower(c);
  return encode_utf8(cps);
}

std::string nfc(std::string_view text) {
  std::u32string cps = decode_utf8(text);
  std::u32string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) {
    if (!out.empty() && cp >= 0x0300 && cp <= 0x036F) {
      if (char32_t composed = compose(out.back(), cp)) {
        out.back() = composed;
        continue;
      }
    }
    out.push_back(cp);
  }
  return encode_utf8(out);
}

std::string collapse_whitespace(std::string_view text) {
  std::u32string cps = decode_utf8(text);
  std::u32string out;
  out.reserve(cps.size());
  bool pending_space = false;
  for (char32_t cp : cps) {
    if (is_space(cp)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(U' ');
      pending_space = false;
    }
    out.push_back(cp);
  }
  return encode_utf8(out);
}

}  // namespace fairforge
