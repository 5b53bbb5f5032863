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

#ifndef FAIRFORGE_FILTERS_HPP
#define FAIRFORGE_FILTERS_HPP

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_set>

#include "fairforge/langid.hpp"
#include "fairforge/textcore.hpp"

namespace fairforge {

// Thresholds are inclusive at both boundaries.
struct FilterConfig {
  int min_words = 1;
  int max_words = 150;
  int max_word_len = 40;
  double min_alpha_ratio = 0.5;
  double lang_id_threshold = 0.0;
  std::string expected_lang;
};

/// Parses key=value lines ('#' starts a comment). Unknown keys are an error.
FilterConfig load_filter_config(std::istream& in);
FilterConfig load_filter_config(const std::filesystem::path& path);

bool length_filter(const Segment& seg, const FilterConfig& cfg);
bool long_word_filter(const Segment& seg, const FilterConfig& cfg);
bool alphabet_ratio_filter(const Segment& seg, const FilterConfig& cfg);

/// True iff the scorer's top label equals cfg.expected_lang and its
/// confidence exceeds cfg.lang_id_threshold. Scorer failure rejects the
/// segment (a warning is written to stderr).
bool language_id_filter(const Segment& seg, const LangScorer& scorer,
                        const FilterConfig& cfg);

/// All four predicates plus the scorer, conjunction order-independent.
bool passes_all(const Segment& seg, const LangScorer& scorer, const FilterConfig& cfg);

/// Streaming exact-match deduplication. The key is the segment text after
/// whitespace collapse and NFC; first occurrence wins.
class Dedup {
 public:
  /// Returns true iff the segment has not been seen before.
  bool admit(const Segment& seg);
  std::size_t seen() const { return keys_.size(); }

  static std::string key(std::string_view text);

 private:
  std::unordered_set<std::string> keys_;
};

std::vector<Segment> dedup(std::vector<Segment> segments);

}  // namespace fairforge

#endif  // FAIRFORGE_FILTERS_HPP
