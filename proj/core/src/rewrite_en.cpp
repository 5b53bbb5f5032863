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

#include "fairforge/rewrite_en.hpp"

#include <algorithm>
#include <unordered_set>

#include "fairforge/unicode.hpp"

namespace fairforge {

namespace detail {
std::string mirror_case_like(std::string_view original, std::string replacement);
}

namespace {

bool is_punct_token(const std::string& token) {
  const std::u32string cps = decode_utf8(token);
  return !cps.empty() && !is_letter(cps[0]) && !is_digit(cps[0]);
}

// Searches the next three non-adverb tokens for a verb the table covers.
struct VerbHit {
  std::size_t index;
  std::string replacement;
};

std::optional<VerbHit> find_verb(std::span<const std::string> tokens,
                                 std::size_t after, Direction direction,
                                 const VerbTable& verbs) {
  std::size_t examined = 0;
  for (std::size_t j = after + 1; j < tokens.size() && examined < 3; ++j) {
    if (verbs.is_adverb(tokens[j])) continue;
    ++examined;
    const auto shifted = direction == Direction::kForward
                             ? verbs.pluralize(tokens[j])
                             : verbs.singularize(tokens[j]);
    if (shifted) return VerbHit{j, *shifted};
  }
  return std::nullopt;
}

struct Rewriter {
  std::string_view sentence;
  std::vector<TokenSpan> spans;
  std::vector<std::string> tokens;
  const Lexicon& lex;
  const VerbTable& verbs;
  Direction direction;
  std::optional<Gender> gender;

  std::vector<RewriteDecision> decisions;
  std::unordered_set<std::size_t> claimed;  // token indices already rewritten

  Rewriter(std::string_view text, const Lexicon& lexicon, const VerbTable& table,
           Direction dir, std::optional<Gender> g)
      : sentence(text), lex(lexicon), verbs(table), direction(dir), gender(g) {
    spans = tokenize_spans(text);
    tokens.reserve(spans.size());
    for (const auto& s : spans) tokens.push_back(s.text);
  }

  void replace_tokens(std::size_t begin_tok, std::size_t end_tok,
                      const std::string& replacement, std::string rule_id,
                      bool low_confidence = false) {
    RewriteDecision d;
    d.begin = spans[begin_tok].begin;
    d.end = spans[end_tok - 1].end;
    d.before = std::string(sentence.substr(d.begin, d.end - d.begin));
    d.after = detail::mirror_case_like(tokens[begin_tok], replacement);
    d.rule_id = std::move(rule_id);
    d.direction = direction;
    d.gender = gender;
    d.low_confidence = low_confidence;
    if (d.after == d.before) return;  // nothing to do, keep the audit clean
    decisions.push_back(std::move(d));
    for (std::size_t k = begin_tok; k < end_tok; ++k) claimed.insert(k);
  }

  void adjust_verb_after(std::size_t pronoun_tok, std::size_t pronoun_decision) {
    const auto hit = find_verb(tokens, pronoun_tok, direction, verbs);
    if (!hit || claimed.count(hit->index)) {
      decisions[pronoun_decision].low_confidence = true;
      return;
    }
    replace_tokens(hit->index, hit->index + 1, hit->replacement,
                   direction == Direction::kForward ? "verb:pluralize"
                                                    : "verb:singularize");
  }

  void forward_pronoun(std::size_t i, const std::string& lower) {
    if (lower == "he" || lower == "she") {
      replace_tokens(i, i + 1, "they", "pron:subject");
      adjust_verb_after(i, decisions.size() - 1);
    } else if (lower == "him") {
      replace_tokens(i, i + 1, "them", "pron:object");
    } else if (lower == "hers") {
      replace_tokens(i, i + 1, "theirs", "pron:possessive-standalone");
    } else if (lower == "himself" || lower == "herself") {
      replace_tokens(i, i + 1, "themself", "pron:reflexive");
    } else if (lower == "her") {
      const auto role = resolve_pronoun_ambiguity(tokens, i, verbs);
      if (role == PronounRole::kPossessive) {
        replace_tokens(i, i + 1, "their", "pron:her-possessive");
      } else {
        replace_tokens(i, i + 1, "them", "pron:her-personal");
      }
    } else if (lower == "his") {
      // Mirrors the her-heuristic: determiner before a noun-like token,
      // standalone possessive otherwise.
      const auto role = resolve_pronoun_ambiguity(tokens, i, verbs);
      if (role == PronounRole::kPossessive) {
        replace_tokens(i, i + 1, "their", "pron:his-determiner");
      } else {
        replace_tokens(i, i + 1, "theirs", "pron:his-standalone");
      }
    }
  }

  void backward_pronoun(std::size_t i, const std::string& lower) {
    const bool fem = gender == Gender::kFeminine;
    if (lower == "they") {
      replace_tokens(i, i + 1, fem ? "she" : "he", "pron:subject");
      adjust_verb_after(i, decisions.size() - 1);
    } else if (lower == "their") {
      replace_tokens(i, i + 1, fem ? "her" : "his", "pron:possessive");
    } else if (lower == "them") {
      replace_tokens(i, i + 1, fem ? "her" : "him", "pron:object");
    } else if (lower == "theirs") {
      replace_tokens(i, i + 1, fem ? "hers" : "his", "pron:possessive-standalone");
    } else if (lower == "themself" || lower == "themselves") {
      replace_tokens(i, i + 1, fem ? "herself" : "himself", "pron:reflexive");
    }
  }

  RewriteResult run() {
    const auto hits = lex.find_hits(tokens);
    for (const auto& hit : hits) {
      const bool gendered_hit = hit.which != Lexicon::Hit::Which::kFair;
      if (direction == Direction::kForward) {
        if (!gendered_hit) continue;
        if (hit.entry->category == LexCategory::kPronoun) {
          forward_pronoun(hit.token_begin, to_lower_copy(tokens[hit.token_begin]));
        } else {
          replace_tokens(hit.token_begin, hit.token_end, hit.entry->fair,
                         "lex:" + std::string(to_string(hit.entry->category)));
        }
      } else {
        if (gendered_hit) continue;  // already gendered, leave in place
        if (hit.entry->category == LexCategory::kPronoun) {
          backward_pronoun(hit.token_begin, to_lower_copy(tokens[hit.token_begin]));
        } else {
          const std::string& surface = gender == Gender::kFeminine
                                           ? hit.entry->feminine
                                           : hit.entry->masculine;
          if (surface.empty()) continue;  // irreversible row for this gender
          replace_tokens(hit.token_begin, hit.token_end, surface,
                         "lex:" + std::string(to_string(hit.entry->category)));
        }
      }
    }
    std::sort(decisions.begin(), decisions.end(),
              [](const RewriteDecision& a, const RewriteDecision& b) {
                return a.begin < b.begin;
              });
    RewriteResult result;
    result.text = apply_decisions(sentence, decisions);
    result.decisions = std::move(decisions);
    return result;
  }
};

}  // namespace

PronounRole resolve_pronoun_ambiguity(std::span<const std::string> tokens,
                                      std::size_t index, const VerbTable& verbs) {
  for (std::size_t j = index + 1; j < tokens.size(); ++j) {
    if (verbs.is_adverb(tokens[j])) continue;
    if (is_punct_token(tokens[j])) return PronounRole::kPersonal;
    if (verbs.is_preposition(tokens[j])) return PronounRole::kPersonal;
    if (verbs.is_verb_like(tokens[j])) return PronounRole::kPersonal;
    return PronounRole::kPossessive;
  }
  return PronounRole::kPersonal;  // sentence-final
}

VerbAdjustment adjust_verb_number(std::span<const std::string> tokens,
                                  std::size_t pronoun_index, Direction direction,
                                  const VerbTable& verbs) {
  VerbAdjustment result;
  result.tokens.assign(tokens.begin(), tokens.end());
  const auto hit = find_verb(tokens, pronoun_index, direction, verbs);
  if (!hit) {
    result.low_confidence = true;
    return result;
  }
  result.tokens[hit->index] = hit->replacement;
  result.verb_index = hit->index;
  return result;
}

std::string apply_decisions(std::string_view sentence,
                            std::span<const RewriteDecision> decisions) {
  std::string out;
  std::size_t cursor = 0;
  for (const auto& d : decisions) {
    out.append(sentence.substr(cursor, d.begin - cursor));
    out += d.after;
    cursor = d.end;
  }
  out.append(sentence.substr(cursor));
  return out;
}

RewriteResult forward_rewrite(std::string_view sentence, const Lexicon& lex,
                              const VerbTable& verbs) {
  Rewriter rewriter(sentence, lex, verbs, Direction::kForward, std::nullopt);
  return rewriter.run();
}

RewriteResult backward_rewrite(std::string_view sentence, Gender gender,
                               const Lexicon& lex, const VerbTable& verbs) {
  Rewriter rewriter(sentence, lex, verbs, Direction::kBackward, gender);
  return rewriter.run();
}

}  // namespace fairforge
