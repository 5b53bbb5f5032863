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

#ifndef FAIRFORGE_TEXTCORE_HPP
#define FAIRFORGE_TEXTCORE_HPP

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fairforge {

/// One unit of monolingual text. `id` is the 1-based input line number.
struct Segment {
  std::uint64_t id = 0;
  std::string text;
  std::string lang;
  std::vector<std::string> labels;

  bool has_label(std::string_view label) const;
  void add_label(std::string_view label);
};

/// One training pair. `origin` tags how the source side was manufactured
/// (backward-rule, roundtrip-plain, roundtrip-fem-tag, roundtrip-masc-tag,
/// copy, non-gendered).
struct ParallelRecord {
  std::string src;
  std::string trg;
  std::string origin;
  std::optional<std::string> pivot;
  std::vector<std::string> tags;

  friend bool operator==(const ParallelRecord&, const ParallelRecord&) = default;
};

enum class TokenizeMode {
  kMarkerPreserving,  // *, :, _, / flanked by letters stay word-internal
  kAggressive,        // those markers become separate tokens
};

struct TokenSpan {
  std::string text;
  std::size_t begin = 0;  // byte offsets into the original string
  std::size_t end = 0;
};

/// Whitespace split with leading/trailing punctuation detached as single
/// tokens. Empty input yields an empty sequence.
std::vector<std::string> tokenize(std::string_view text,
                                  TokenizeMode mode = TokenizeMode::kMarkerPreserving);
std::vector<TokenSpan> tokenize_spans(std::string_view text,
                                      TokenizeMode mode = TokenizeMode::kMarkerPreserving);

/// Joins with single spaces, then reattaches punctuation: no space before
/// any of ".,;:!?)" and none after "(".
std::string detokenize(std::span<const std::string> tokens);

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Plain corpus: UTF-8, one segment per line. Blank lines are skipped; ids are
// input line numbers. Text is NFC-normalized on read.
void for_each_plain_segment(std::istream& in, std::string_view lang,
                            const std::function<void(Segment&&)>& fn);
std::vector<Segment> read_plain_segments(const std::filesystem::path& path,
                                         std::string_view lang);
std::vector<Segment> read_plain_segments(std::istream& in, std::string_view lang);

std::size_t write_plain_segments(std::ostream& out, std::span<const Segment> segments);

// Labeled corpus: JSON-lines with keys id, text, lang, labels.
void for_each_labeled_segment(std::istream& in,
                              const std::function<void(Segment&&)>& fn);
std::vector<Segment> read_labeled_segments(const std::filesystem::path& path);
std::vector<Segment> read_labeled_segments(std::istream& in);
std::size_t write_labeled_segments(std::ostream& out, std::span<const Segment> segments);
std::size_t write_labeled_segments(const std::filesystem::path& path,
                                   std::span<const Segment> segments);

// Parallel data: JSON-lines with keys src, trg, origin, optional pivot/tags.
void for_each_record(std::istream& in,
                     const std::function<void(ParallelRecord&&)>& fn);
std::vector<ParallelRecord> read_records(const std::filesystem::path& path);
std::vector<ParallelRecord> read_records(std::istream& in);
std::size_t write_records(std::ostream& out, std::span<const ParallelRecord> records);
std::size_t write_records(const std::filesystem::path& path,
                          std::span<const ParallelRecord> records);

std::ifstream open_input(const std::filesystem::path& path);
std::ofstream open_output(const std::filesystem::path& path);

}  // namespace fairforge

#endif  // FAIRFORGE_TEXTCORE_HPP
