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

#ifndef FAIRFORGE_GENDERLEX_HPP
#define FAIRFORGE_GENDERLEX_HPP

#include <filesystem>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fairforge/textcore.hpp"

namespace fairforge {

enum class Gender { kFeminine, kMasculine };
enum class Number { kSingular, kPlural };

// ---------------------------------------------------------------------------
// English lookup tables
// ---------------------------------------------------------------------------

enum class LexCategory { kPronoun, kJobTitle, kGenericMan, kFeminineForm };

/// One lookup row. Either gendered column may be empty (generic-man rows have
/// no feminine surface, feminine-form rows no masculine one); `fair` never is.
struct LexEntry {
  LexCategory category = LexCategory::kJobTitle;
  Number number = Number::kSingular;
  std::string feminine;
  std::string masculine;
  std::string fair;
};

std::string_view to_string(LexCategory category);
std::string_view to_string(Number number);

class Lexicon {
 public:
  /// The full bidirectional English tables (pronouns, job titles, generic
  /// "man" phrases, unnecessary feminine forms).
  static const Lexicon& builtin();

  /// TSV columns: category, number, feminine, masculine, fair.
  static Lexicon from_tsv(std::istream& in);
  static Lexicon from_tsv(const std::filesystem::path& path);
  std::string to_tsv() const;

  const std::vector<LexEntry>& entries() const { return entries_; }

  struct Hit {
    std::size_t token_begin = 0;  // token index range [begin, end)
    std::size_t token_end = 0;
    const LexEntry* entry = nullptr;
    enum class Which { kFeminine, kMasculine, kFair } which = Which::kFair;
  };

  /// Case-insensitive longest-match scan over a token sequence. Hits never
  /// overlap; ties are broken in favor of longer surfaces.
  std::vector<Hit> find_hits(std::span<const std::string> tokens) const;

 private:
  void add(LexEntry entry);
  void index_surface(const std::string& surface, std::size_t entry_idx,
                     Hit::Which which);
  void validate() const;

  struct Indexed {
    std::vector<std::string> tokens;  // lowercased surface tokens
    std::size_t entry_idx = 0;
    Hit::Which which = Hit::Which::kFair;
  };
  std::vector<LexEntry> entries_;
  std::vector<Indexed> surfaces_;  // sorted by descending token count
};

enum class EnClass { kGendered, kGenderFair, kNonGendered };

/// Gendered beats gender-fair when both occur; no hit at all is non-gendered.
EnClass classify_en(const Segment& seg, const Lexicon& lex);

// ---------------------------------------------------------------------------
// German gender-fair patterns
// ---------------------------------------------------------------------------

enum class FormKind { kPair, kBinnenI, kSlash, kGap, kColon, kStar };

std::string_view to_string(FormKind kind);

struct Pattern {
  FormKind kind = FormKind::kStar;
  Number number = Number::kPlural;
  std::string regex;
};

/// A detected gender-fair span. Offsets are byte offsets into the UTF-8
/// text, so text.substr(begin, end - begin) == matched.
struct GenderFairMatch {
  std::size_t begin = 0;
  std::size_t end = 0;
  FormKind kind = FormKind::kStar;
  Number number = Number::kPlural;
  std::string stem;
  std::string matched;
};

class PatternSet {
 public:
  /// Suffix patterns for all six form kinds in plural and singular, plus the
  /// closed list of marked article/pronoun pair forms ("einem*r", "der*die").
  static const PatternSet& builtin();

  /// TSV lines: kind, number, regex. Replaces the suffix patterns; the
  /// article closed list stays built in.
  static PatternSet from_file(std::istream& in);
  static PatternSet from_file(const std::filesystem::path& path);

  const std::vector<Pattern>& patterns() const;

  // Internal handle used by the matching routines.
  struct Impl;
  const Impl& impl() const { return *impl_; }

 private:
  std::shared_ptr<const Impl> impl_;
};

/// All non-overlapping matches, leftmost-longest. Matches start at token
/// boundaries; marker-form matches may end inside a compound when a
/// lowercase continuation follows ("Kund*innendaten").
std::vector<GenderFairMatch> find_matches_de(std::string_view text,
                                             const PatternSet& patterns);

/// Rewrites every match to the target kind, keeping stem and number
/// ("Student_innen" -> "Student*innen", "Studentinnen und Studenten" ->
/// "Student*innen"). Non-matching text is byte-identical. Article pair forms
/// keep their marker when the target is Binnen-I, which has no separator.
std::string normalize_de(std::string_view text, const PatternSet& patterns,
                         FormKind target_kind = FormKind::kStar);

struct DeClass {
  bool gender_fair = false;
  bool has_sg = false;
  bool has_pl = false;
};

DeClass classify_de(const Segment& seg, const PatternSet& patterns);

}  // namespace fairforge

#endif  // FAIRFORGE_GENDERLEX_HPP
