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

#include <unordered_map>
#include <unordered_set>

#include "fairforge/rewrite_en.hpp"
#include "fairforge/unicode.hpp"

namespace fairforge {

namespace {

const std::unordered_map<std::string, std::string>& irregular_sg_to_pl() {
  static const auto* map = new std::unordered_map<std::string, std::string>{
      {"is", "are"}, {"was", "were"}, {"has", "have"},
      {"does", "do"}, {"goes", "go"},
  };
  return *map;
}

const std::unordered_map<std::string, std::string>& irregular_pl_to_sg() {
  static const auto* map = [] {
    auto* m = new std::unordered_map<std::string, std::string>();
    for (const auto& [sg, pl] : irregular_sg_to_pl()) (*m)[pl] = sg;
    return m;
  }();
  return *map;
}

// Base forms the regular -s/-es/-ies rule is allowed to touch. Without POS
// information this list is what keeps "they ran" or "they glass" intact.
const std::unordered_set<std::string>& verb_stems() {
  static const auto* set = new std::unordered_set<std::string>{
      "accept",  "agree",   "answer",  "appear",  "argue",   "arrive",
      "ask",     "become",  "begin",   "believe", "break",   "bring",
      "build",   "buy",     "call",    "carry",   "catch",   "change",
      "choose",  "claim",   "close",   "come",    "consider","continue",
      "cook",    "cover",   "create",  "cry",     "cut",     "dance",
      "decide",  "deliver", "describe","develop", "draw",    "dream",
      "drink",   "drive",   "eat",     "enjoy",   "expect",  "explain",
      "fall",    "feel",    "find",    "finish",  "fly",     "follow",
      "forget",  "get",     "give",    "grow",    "happen",  "hate",
      "hear",    "help",    "hold",    "hope",    "hurt",    "include",
      "keep",    "know",    "laugh",   "lead",    "learn",   "leave",
      "like",    "listen",  "live",    "look",    "lose",    "love",
      "make",    "manage",  "mean",    "meet",    "miss",    "move",
      "need",    "offer",   "open",    "pass",    "pay",     "plan",
      "play",    "prefer",  "produce", "push",    "put",     "raise",
      "reach",   "read",    "receive", "remember","report",  "return",
      "rise",    "run",     "say",     "see",     "seem",    "sell",
      "send",    "serve",   "show",    "sing",    "sit",     "sleep",
      "speak",   "stand",   "start",   "stay",    "stop",    "study",
      "support", "take",    "talk",    "teach",   "tell",    "think",
      "travel",  "try",     "turn",    "understand", "use",  "visit",
      "vote",    "wait",    "walk",    "want",    "watch",   "wear",
      "win",     "wish",    "work",    "write",
  };
  return *set;
}

const std::unordered_set<std::string>& adverbs() {
  static const auto* set = new std::unordered_set<std::string>{
      "really",    "often",     "never",    "always",   "also",     "still",
      "just",      "now",       "then",     "usually",  "sometimes","probably",
      "certainly", "definitely","already",  "only",     "even",     "quickly",
      "slowly",    "finally",   "recently", "currently","clearly",  "truly",
      "actually",  "rarely",    "frequently", "yesterday", "today", "tomorrow",
      "tonight",   "soon",      "later",    "again",    "yet",      "once",
      "twice",     "here",      "there",    "too",
  };
  return *set;
}

const std::unordered_set<std::string>& prepositions() {
  static const auto* set = new std::unordered_set<std::string>{
      "to",   "in",     "on",      "at",      "for",     "with",  "from",
      "by",   "about",  "of",      "over",    "under",   "into",  "onto",
      "after","before", "during",  "between", "against", "without",
      "through", "up",  "down",    "off",     "out",     "around", "near",
      "as",   "than",
  };
  return *set;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

bool is_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

bool takes_es(std::string_view stem) {
  return ends_with(stem, "s") || ends_with(stem, "x") || ends_with(stem, "z") ||
         ends_with(stem, "ch") || ends_with(stem, "sh") || ends_with(stem, "o");
}

std::string mirror_case(std::string_view original, std::string replacement) {
  const std::u32string orig = decode_utf8(original);
  bool all_upper = orig.size() > 1;
  for (char32_t c : orig) {
    if (is_letter(c) && !is_upper(c)) {
      all_upper = false;
      break;
    }
  }
  std::u32string repl = decode_utf8(replacement);
  if (repl.empty() || orig.empty()) return replacement;
  if (all_upper) {
    for (auto& c : repl) c = to_upper(c);
  } else if (is_upper(orig[0])) {
    repl[0] = to_upper(repl[0]);
  }
  return encode_utf8(repl);
}

}  // namespace

// mirror_case is shared with rewrite_en.cpp via this internal hook.
namespace detail {
std::string mirror_case_like(std::string_view original, std::string replacement) {
  return mirror_case(original, std::move(replacement));
}
}  // namespace detail

VerbTable::VerbTable() = default;

const VerbTable& VerbTable::builtin() {
  static const VerbTable table;
  return table;
}

std::optional<std::string> VerbTable::pluralize(std::string_view token) const {
  const std::string lower = to_lower_copy(token);
  if (auto it = irregular_sg_to_pl().find(lower); it != irregular_sg_to_pl().end()) {
    return detail::mirror_case_like(token, it->second);
  }
  if (ends_with(lower, "ies") && lower.size() > 4) {
    std::string stem = lower.substr(0, lower.size() - 3) + "y";
    if (verb_stems().count(stem)) return detail::mirror_case_like(token, stem);
  }
  if (ends_with(lower, "es")) {
    std::string stem = lower.substr(0, lower.size() - 2);
    if (takes_es(stem) && verb_stems().count(stem)) {
      return detail::mirror_case_like(token, stem);
    }
  }
  if (ends_with(lower, "s") && !ends_with(lower, "ss")) {
    std::string stem = lower.substr(0, lower.size() - 1);
    if (verb_stems().count(stem)) return detail::mirror_case_like(token, stem);
  }
  return std::nullopt;
}

std::optional<std::string> VerbTable::singularize(std::string_view token) const {
  const std::string lower = to_lower_copy(token);
  if (auto it = irregular_pl_to_sg().find(lower); it != irregular_pl_to_sg().end()) {
    return detail::mirror_case_like(token, it->second);
  }
  if (!verb_stems().count(lower)) return std::nullopt;
  std::string result;
  if (ends_with(lower, "y") && lower.size() > 1 &&
      !is_vowel(lower[lower.size() - 2])) {
    result = lower.substr(0, lower.size() - 1) + "ies";
  } else if (takes_es(lower)) {
    result = lower + "es";
  } else {
    result = lower + "s";
  }
  return detail::mirror_case_like(token, result);
}

bool VerbTable::is_adverb(std::string_view token) const {
  return adverbs().count(to_lower_copy(token)) > 0;
}

bool VerbTable::is_preposition(std::string_view token) const {
  return prepositions().count(to_lower_copy(token)) > 0;
}

bool VerbTable::is_verb_like(std::string_view token) const {
  const std::string lower = to_lower_copy(token);
  if (irregular_sg_to_pl().count(lower) || irregular_pl_to_sg().count(lower)) {
    return true;
  }
  if (verb_stems().count(lower)) return true;
  return pluralize(lower).has_value();
}

}  // namespace fairforge
