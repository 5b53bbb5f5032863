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

#ifndef FAIRFORGE_UNICODE_HPP
#define FAIRFORGE_UNICODE_HPP

#include <cstddef>
#include <string>
#include <string_view>

// Minimal UTF-8 / code point helpers for the European-language corpora this
// toolkit processes. Letter classification covers ASCII, Latin-1 Supplement,
// Latin Extended-A/B, Greek and Cyrillic; case mapping is exact for ASCII and
// Latin-1/Extended-A, which is all the rewriting rules rely on.

namespace fairforge {

std::u32string decode_utf8(std::string_view text);
std::string encode_utf8(std::u32string_view codepoints);
std::string encode_utf8(char32_t codepoint);

std::size_t codepoint_count(std::string_view text);

bool is_letter(char32_t c);
bool is_digit(char32_t c);
bool is_space(char32_t c);
bool is_upper(char32_t c);
bool is_lower(char32_t c);

char32_t to_lower(char32_t c);
char32_t to_upper(char32_t c);

std::string to_lower_copy(std::string_view text);

/// Composes combining diacritical marks with their Latin base letters
/// (NFC for the repertoire seen in web corpora: grave, acute, circumflex,
/// tilde, diaeresis, ring above, cedilla). Unknown combinations pass through.
std::string nfc(std::string_view text);

/// Trims and collapses internal whitespace runs to single spaces.
std::string collapse_whitespace(std::string_view text);

}  // namespace fairforge

#endif  // FAIRFORGE_UNICODE_HPP
