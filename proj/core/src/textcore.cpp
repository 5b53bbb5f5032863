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

#include "fairforge/textcore.hpp"

#include <algorithm>

#include "fairforge/unicode.hpp"

namespace fairforge {

namespace {

bool is_marker(char32_t c) {
  return c == U'*' || c == U':' || c == U'_' || c == U'/';
}

bool is_word_char(char32_t c) { return is_letter(c) || is_digit(c); }

struct Chunk {
  std::u32string cps;
  std::vector<std::size_t> byte_offsets;  // per code point, plus end sentinel
};

void emit(std::vector<TokenSpan>& out, const Chunk& chunk, std::size_t from,
          std::size_t to) {
  if (from >= to) return;
  TokenSpan span;
  span.text = encode_utf8(std::u32string_view(chunk.cps).substr(from, to - from));
  span.begin = chunk.byte_offsets[from];
  span.end = chunk.byte_offsets[to];
  out.push_back(std::move(span));
}

void tokenize_chunk(std::vector<TokenSpan>& out, const Chunk& chunk,
                    TokenizeMode mode) {
  const std::u32string& cps = chunk.cps;
  std::size_t begin = 0;
  std::size_t end = cps.size();

  // Leading punctuation, one token per code point.
  while (begin < end && !is_word_char(cps[begin])) {
    emit(out, chunk, begin, begin + 1);
    ++begin;
  }
  // Trailing punctuation, emitted after the core below.
  std::size_t core_end = end;
  while (core_end > begin && !is_word_char(cps[core_end - 1])) --core_end;

  // Core: split at markers unless (marker-preserving) flanked by letters.
  std::size_t piece_start = begin;
  for (std::size_t i = begin; i < core_end; ++i) {
    if (!is_marker(cps[i])) continue;
    const bool flanked = i > 0 && i + 1 < cps.size() && is_letter(cps[i - 1]) &&
                         is_letter(cps[i + 1]);
    if (mode == TokenizeMode::kMarkerPreserving && flanked) continue;
    emit(out, chunk, piece_start, i);
    emit(out, chunk, i, i + 1);
    piece_start = i + 1;
  }
  emit(out, chunk, piece_start, core_end);

  for (std::size_t i = core_end; i < end; ++i) emit(out, chunk, i, i + 1);
}

bool attaches_left(const std::string& token) {
  if (token.empty()) return false;
  return std::all_of(token.begin(), token.end(), [](char c) {
    return c == '.' || c == ',' || c == ';' || c == ':' || c == '!' ||
           c == '?' || c == ')';
  });
}

bool is_blank(std::string_view line) {
  for (char c : line) {
    if (c != ' ' && c != '\t' && c != '\r') return false;
  }
  return true;
}

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

}  // namespace

bool Segment::has_label(std::string_view label) const {
  return std::find(labels.begin(), labels.end(), label) != labels.end();
}

void Segment::add_label(std::string_view label) {
  if (!has_label(label)) labels.emplace_back(label);
}

std::vector<TokenSpan> tokenize_spans(std::string_view text, TokenizeMode mode) {
  std::vector<TokenSpan> out;
  Chunk chunk;
  std::size_t byte = 0;
  const std::u32string cps = decode_utf8(text);
  // Rebuild byte offsets while walking the decoded sequence.
  std::vector<std::size_t> offsets(cps.size() + 1);
  for (std::size_t i = 0; i < cps.size(); ++i) {
    offsets[i] = byte;
    byte += encode_utf8(cps[i]).size();
  }
  offsets[cps.size()] = byte;

  std::size_t i = 0;
  while (i < cps.size()) {
    while (i < cps.size() && is_space(cps[i])) ++i;
    std::size_t start = i;
    while (i < cps.size() && !is_space(cps[i])) ++i;
    if (start == i) continue;
    chunk.cps.assign(cps, start, i - start);
    chunk.byte_offsets.assign(offsets.begin() + static_cast<std::ptrdiff_t>(start),
                              offsets.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    tokenize_chunk(out, chunk, mode);
  }
  return out;
}

std::vector<std::string> tokenize(std::string_view text, TokenizeMode mode) {
  std::vector<std::string> out;
  for (auto& span : tokenize_spans(text, mode)) out.push_back(std::move(span.text));
  return out;
}

std::string detokenize(std::span<const std::string> tokens) {
  std::string out;
  bool suppress_space = true;  // no leading space
  for (const auto& token : tokens) {
    if (!suppress_space && !attaches_left(token)) out.push_back(' ');
    out += token;
    suppress_space = (token == "(");
  }
  return out;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open for reading: " + path.string());
  return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  return out;
}

void for_each_plain_segment(std::istream& in, std::string_view lang,
                            const std::function<void(Segment&&)>& fn) {
  std::string line;
  std::uint64_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_blank(line)) continue;
    Segment seg;
    seg.id = lineno;
    seg.text = nfc(strip_cr(line));
    seg.lang = std::string(lang);
    fn(std::move(seg));
  }
}

std::vector<Segment> read_plain_segments(std::istream& in, std::string_view lang) {
  std::vector<Segment> out;
  for_each_plain_segment(in, lang, [&](Segment&& seg) { out.push_back(std::move(seg)); });
  return out;
}

std::vector<Segment> read_plain_segments(const std::filesystem::path& path,
                                         std::string_view lang) {
  std::ifstream in = open_input(path);
  return read_plain_segments(in, lang);
}

std::size_t write_plain_segments(std::ostream& out, std::span<const Segment> segments) {
  std::size_t count = 0;
  for (const auto& seg : segments) {
    out << seg.text << '\n';
    ++count;
  }
  if (!out) throw IoError("write failure on plain segment stream");
  return count;
}

}  // namespace fairforge
