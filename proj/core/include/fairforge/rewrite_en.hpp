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

#ifndef FAIRFORGE_REWRITE_EN_HPP
#define FAIRFORGE_REWRITE_EN_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fairforge/genderlex.hpp"

namespace fairforge {

/// Present-tense number shifting: a bijective irregular map (is/are,
/// was/were, has/have, does/do, goes/go) plus the regular -s/-es/-ies rule
/// over a closed list of common verb stems. No POS tagging; tokens outside
/// the covered orthographies are left alone.
class VerbTable {
 public:
  static const VerbTable& builtin();

  /// 3rd-person singular -> plural ("knows" -> "know"), if covered.
  std::optional<std::string> pluralize(std::string_view token) const;
  /// Plural/base -> 3rd-person singular ("know" -> "knows"), if covered.
  std::optional<std::string> singularize(std::string_view token) const;

  bool is_adverb(std::string_view token) const;
  bool is_preposition(std::string_view token) const;
  bool is_verb_like(std::string_view token) const;

 private:
  VerbTable();
};

enum class Direction { kForward, kBackward };

struct RewriteDecision {
  std::size_t begin = 0;  // byte span in the input sentence
  std::size_t end = 0;
  std::string rule_id;
  std::string before;
  std::string after;
  Direction direction = Direction::kForward;
  std::optional<Gender> gender;  // backward only
  bool low_confidence = false;
};

struct RewriteResult {
  std::string text;
  std::vector<RewriteDecision> decisions;
};

/// S -> T_pseudo: replaces gendered surfaces with their fair forms,
/// pluralizes verbs after rewritten subject pronouns and resolves the
/// her/his ambiguities. Unknown words pass through.
RewriteResult forward_rewrite(std::string_view sentence, const Lexicon& lex,
                              const VerbTable& verbs);

/// T -> S_pseudo: replaces fair forms with the chosen gender's surfaces
/// where the table has one, singularizing verbs after rewritten "they".
RewriteResult backward_rewrite(std::string_view sentence, Gender gender,
                               const Lexicon& lex, const VerbTable& verbs);

enum class PronounRole { kPossessive, kPersonal };

/// Heuristic for ambiguous "her"/"his": possessive iff the next non-adverb
/// token is noun-like (not sentence-final, not punctuation, preposition or
/// verb). Sentence-final defaults to personal.
PronounRole resolve_pronoun_ambiguity(std::span<const std::string> tokens,
                                      std::size_t index,
                                      const VerbTable& verbs);

struct VerbAdjustment {
  std::vector<std::string> tokens;
  std::optional<std::size_t> verb_index;
  bool low_confidence = false;  // no covered verb in the search window
};

/// Number-shifts the first covered verb within the next three non-adverb
/// tokens after a rewritten subject pronoun.
VerbAdjustment adjust_verb_number(std::span<const std::string> tokens,
                                  std::size_t pronoun_index, Direction direction,
                                  const VerbTable& verbs);

/// Applies decisions to the input; reproduces RewriteResult::text exactly.
std::string apply_decisions(std::string_view sentence,
                            std::span<const RewriteDecision> decisions);

}  // namespace fairforge

#endif  // FAIRFORGE_REWRITE_EN_HPP
