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

#ifndef FAIRFORGE_PATTERN_ENGINE_HPP
#define FAIRFORGE_PATTERN_ENGINE_HPP

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Backtracking matcher over code points for the gender-fair pattern dialect:
// literals, escapes, \w and \S classes, greedy + ? {m,} {m,n} quantifiers,
// capturing groups with alternation, backreferences and negative lookahead.
// std::regex cannot express these over UTF-8 (its \w is byte-based), and the
// pattern semantics here must match letter classes the tokenizer uses.

namespace fairforge::detail {

struct GroupSpan {
  bool set = false;
  std::size_t begin = 0;
  std::size_t end = 0;
};

struct PatternMatch {
  std::size_t end = 0;  // one past the last matched code point
  std::vector<GroupSpan> groups;
};

class CompiledPattern {
 public:
  struct Node {
    enum class Kind { kLiteral, kWordClass, kNonSpaceClass, kRepeat, kGroup,
                      kBackref, kNegLookahead };
    Kind kind = Kind::kLiteral;
    char32_t literal = 0;
    std::size_t min = 0;
    std::size_t max = std::numeric_limits<std::size_t>::max();
    int group_index = 0;  // kGroup capture slot, kBackref target
    std::vector<std::vector<Node>> alts;  // kGroup; child of kRepeat/kNegLookahead
  };

  /// Throws std::invalid_argument on syntax errors.
  static CompiledPattern compile(std::string_view pattern);

  /// Anchored match starting at `start`; greedy backtracking semantics
  /// (first accepted alternative, longest repeat first).
  std::optional<PatternMatch> match_at(const std::u32string& text,
                                       std::size_t start) const;

  const std::string& source() const { return source_; }
  int group_count() const { return group_count_; }

 private:
  std::vector<Node> nodes_;
  std::string source_;
  int group_count_ = 0;

  struct Parser;
};

}  // namespace fairforge::detail

#endif  // FAIRFORGE_PATTERN_ENGINE_HPP
