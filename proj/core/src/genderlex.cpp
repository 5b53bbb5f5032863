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

#include "fairforge/genderlex.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "fairforge/unicode.hpp"
#include "lexicon_data.hpp"
#include "pattern_engine.hpp"

namespace fairforge {

namespace {

LexCategory parse_category(const std::string& s, int lineno) {
  if (s == "pronoun") return LexCategory::kPronoun;
  if (s == "job_title") return LexCategory::kJobTitle;
  if (s == "generic_man") return LexCategory::kGenericMan;
  if (s == "feminine_form") return LexCategory::kFeminineForm;
  throw ParseError("unknown lexicon category '" + s + "' at line " +
                   std::to_string(lineno));
}

Number parse_number_tag(const std::string& s, int lineno) {
  if (s == "sg") return Number::kSingular;
  if (s == "pl") return Number::kPlural;
  throw ParseError("unknown number '" + s + "' at line " + std::to_string(lineno));
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  if (!fields.empty() && !fields.back().empty() && fields.back().back() == '\r') {
    fields.back().pop_back();
  }
  return fields;
}

}  // namespace

std::string_view to_string(LexCategory category) {
  switch (category) {
    case LexCategory::kPronoun: return "pronoun";
    case LexCategory::kJobTitle: return "job_title";
    case LexCategory::kGenericMan: return "generic_man";
    case LexCategory::kFeminineForm: return "feminine_form";
  }
  return "?";
}

std::string_view to_string(Number number) {
  return number == Number::kSingular ? "sg" : "pl";
}

std::string_view to_string(FormKind kind) {
  switch (kind) {
    case FormKind::kPair: return "pair";
    case FormKind::kBinnenI: return "binnen_i";
    case FormKind::kSlash: return "slash";
    case FormKind::kGap: return "gap";
    case FormKind::kColon: return "colon";
    case FormKind::kStar: return "star";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Lexicon
// ---------------------------------------------------------------------------

void Lexicon::index_surface(const std::string& surface, std::size_t entry_idx,
                            Hit::Which which) {
  if (surface.empty()) return;
  Indexed idx;
  idx.tokens = tokenize(to_lower_copy(surface));
  idx.entry_idx = entry_idx;
  idx.which = which;
  surfaces_.push_back(std::move(idx));
}

void Lexicon::add(LexEntry entry) {
  if (entry.fair.empty()) {
    throw ParseError("lexicon entry with empty fair form");
  }
  const std::size_t idx = entries_.size();
  entries_.push_back(std::move(entry));
  const LexEntry& e = entries_.back();
  index_surface(e.feminine, idx, Hit::Which::kFeminine);
  index_surface(e.masculine, idx, Hit::Which::kMasculine);
  index_surface(e.fair, idx, Hit::Which::kFair);
}

void Lexicon::validate() const {
  // Gendered surfaces must be unique per number outside the pronoun rows;
  // "her" and "his" legitimately appear twice there (possessive/personal)
  // and are resolved by the rewriting heuristics.
  std::unordered_set<std::string> seen;
  for (const auto& e : entries_) {
    if (e.category == LexCategory::kPronoun) continue;
    for (const std::string* surface : {&e.feminine, &e.masculine}) {
      if (surface->empty()) continue;
      std::string key = to_lower_copy(*surface) + "#";
      key += to_string(e.number);
      if (!seen.insert(key).second) {
        throw ParseError("duplicate gendered surface in lexicon: " + *surface);
      }
    }
  }
}

Lexicon Lexicon::from_tsv(std::istream& in) {
  Lexicon lex;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    const auto fields = split_tabs(line);
    if (fields.size() != 5) {
      throw ParseError("expected 5 tab-separated fields at line " +
                       std::to_string(lineno));
    }
    LexEntry entry;
    entry.category = parse_category(fields[0], lineno);
    entry.number = parse_number_tag(fields[1], lineno);
    entry.feminine = fields[2];
    entry.masculine = fields[3];
    entry.fair = fields[4];
    lex.add(std::move(entry));
  }
  // Longer surfaces first so that multi-word phrases win over subphrases.
  std::stable_sort(lex.surfaces_.begin(), lex.surfaces_.end(),
                   [](const Indexed& a, const Indexed& b) {
                     return a.tokens.size() > b.tokens.size();
                   });
  lex.validate();
  return lex;
}

Lexicon Lexicon::from_tsv(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  return from_tsv(in);
}

std::string Lexicon::to_tsv() const {
  std::ostringstream out;
  for (const auto& e : entries_) {
    out << to_string(e.category) << '\t' << to_string(e.number) << '\t'
        << e.feminine << '\t' << e.masculine << '\t' << e.fair << '\n';
  }
  return out.str();
}

const Lexicon& Lexicon::builtin() {
  static const Lexicon* lex = [] {
    std::istringstream in(detail::kBuiltinLexiconTsv);
    return new Lexicon(Lexicon::from_tsv(in));
  }();
  return *lex;
}

std::vector<Lexicon::Hit> Lexicon::find_hits(
    std::span<const std::string> tokens) const {
  std::vector<std::string> lowered;
  lowered.reserve(tokens.size());
  for (const auto& t : tokens) lowered.push_back(to_lower_copy(t));

  std::vector<Hit> hits;
  std::size_t i = 0;
  while (i < lowered.size()) {
    const Indexed* found = nullptr;
    for (const auto& surface : surfaces_) {
      if (i + surface.tokens.size() > lowered.size()) continue;
      bool equal = true;
      for (std::size_t k = 0; k < surface.tokens.size(); ++k) {
        if (lowered[i + k] != surface.tokens[k]) {
          equal = false;
          break;
        }
      }
      if (equal) {
        found = &surface;
        break;  // surfaces_ is sorted longest-first
      }
    }
    if (found) {
      Hit hit;
      hit.token_begin = i;
      hit.token_end = i + found->tokens.size();
      hit.entry = &entries_[found->entry_idx];
      hit.which = found->which;
      hits.push_back(hit);
      i = hit.token_end;
    } else {
      ++i;
    }
  }
  return hits;
}

EnClass classify_en(const Segment& seg, const Lexicon& lex) {
  const auto tokens = tokenize(seg.text);
  bool fair = false;
  for (const auto& hit : lex.find_hits(tokens)) {
    if (hit.which == Lexicon::Hit::Which::kFair) {
      fair = true;
    } else {
      return EnClass::kGendered;
    }
  }
  return fair ? EnClass::kGenderFair : EnClass::kNonGendered;
}

// ---------------------------------------------------------------------------
// German pattern set
// ---------------------------------------------------------------------------

namespace {

bool is_marker_cp(char32_t c) {
  return c == U'*' || c == U':' || c == U'_' || c == U'/';
}

FormKind marker_kind(char32_t c) {
  switch (c) {
    case U'*': return FormKind::kStar;
    case U':': return FormKind::kColon;
    case U'_': return FormKind::kGap;
    case U'/': return FormKind::kSlash;
    default: return FormKind::kBinnenI;
  }
}

char32_t marker_char(FormKind kind) {
  switch (kind) {
    case FormKind::kStar: return U'*';
    case FormKind::kColon: return U':';
    case FormKind::kGap: return U'_';
    case FormKind::kSlash: return U'/';
    default: return 0;
  }
}

// Determiners and pronouns that occur as marked pair forms ("einem*r",
// "der*die", "er*sie"). Left side must be one of these; the right side is
// a short ending or another word from the list.
const char* const kArticleWords[] = {
    "der", "die", "das", "dem", "den", "des",
    "ein", "eine", "einem", "einen", "einer", "eines",
    "er", "sie", "ihm", "ihr", "ihn",
    "sein", "seine", "seinem", "seinen", "seiner", "seines",
    "ihre", "ihrem", "ihren", "ihrer", "ihres",
    "jede", "jeder", "jedem", "jeden", "jedes",
    "jene", "jener", "jenem", "jenen",
    "diese", "dieser", "diesem", "diesen", "dieses",
    "welche", "welcher", "welchem", "welchen", "welches",
    "kein", "keine", "keiner", "keinem", "keinen", "keines",
    "andere", "anderer", "anderem", "anderen", "anderes",
    "mein", "meine", "meiner", "meinem", "meinen",
    "dein", "deine", "deiner", "deinem", "deinen",
    "unser", "unsere", "unserer", "unserem", "unseren",
    "derjenige", "diejenige", "demjenigen", "denjenigen", "derjenigen",
    "dasjenige", "derselbe", "dieselbe", "demselben", "denselben",
    "derselben", "dasselbe", "wer", "wen", "wem",
};

bool is_article_suffix(const std::u32string& s) {
  if (s.size() != 1) return false;
  const char32_t c = s[0];
  return c == U'e' || c == U'r' || c == U'n' || c == U's' || c == U'm';
}

struct CompiledEntry {
  Pattern meta;
  detail::CompiledPattern compiled;
};

struct Candidate {
  std::size_t begin = 0;          // cp range of the whole match
  std::size_t end = 0;
  FormKind kind = FormKind::kStar;
  Number number = Number::kPlural;
  std::size_t stem_begin = 0;     // cp range of the stem
  std::size_t stem_end = 0;
  bool article = false;
};

}  // namespace

struct PatternSet::Impl {
  std::vector<Pattern> declared;
  std::vector<CompiledEntry> entries;
  std::unordered_set<std::u32string> article_words;

  void add(FormKind kind, Number number, const std::string& regex) {
    Pattern meta{kind, number, regex};
    declared.push_back(meta);
    entries.push_back({meta, detail::CompiledPattern::compile(regex)});
  }

  void add_articles() {
    for (const char* word : kArticleWords) {
      article_words.insert(decode_utf8(word));
    }
  }
};

namespace {

std::shared_ptr<PatternSet::Impl> make_builtin_impl() {
  auto impl = std::make_shared<PatternSet::Impl>();
  // Pair forms; the feminine-first plural pattern is the canonical one, the
  // rest are mirrored/singular analogues with the same group structure.
  for (const char* conj : {"und", "oder"}) {
    const std::string c = conj;
    impl->add(FormKind::kPair, Number::kPlural,
              "(\\S{2,})innen " + c + " -?\\1(?!innen)(en|e|n)?");
    impl->add(FormKind::kPair, Number::kPlural,
              "(\\S{2,})(?!innen)(en|e|n)? " + c + " -?\\1innen");
    impl->add(FormKind::kPair, Number::kSingular,
              "(\\S{2,})in(?!nen) " + c + " -?\\1(?!in)(e)?");
    impl->add(FormKind::kPair, Number::kSingular,
              "(\\S{2,})(e)? " + c + " -?\\1in(?!nen)");
  }
  impl->add(FormKind::kBinnenI, Number::kPlural, "\\w+Innen");
  impl->add(FormKind::kSlash, Number::kPlural, "\\w+ ?/ ?innen");
  impl->add(FormKind::kGap, Number::kPlural, "\\w+_innen");
  impl->add(FormKind::kColon, Number::kPlural, "\\w+:innen");
  impl->add(FormKind::kStar, Number::kPlural, "\\w+\\*innen");
  impl->add(FormKind::kBinnenI, Number::kSingular, "\\w+In(?!nen)");
  impl->add(FormKind::kSlash, Number::kSingular, "\\w+ ?/ ?in(?!nen)");
  impl->add(FormKind::kGap, Number::kSingular, "\\w+_in(?!nen)");
  impl->add(FormKind::kColon, Number::kSingular, "\\w+:in(?!nen)");
  impl->add(FormKind::kStar, Number::kSingular, "\\w+\\*in(?!nen)");
  impl->add_articles();
  return impl;
}

FormKind parse_kind(const std::string& s, int lineno) {
  if (s == "pair") return FormKind::kPair;
  if (s == "binnen_i") return FormKind::kBinnenI;
  if (s == "slash") return FormKind::kSlash;
  if (s == "gap") return FormKind::kGap;
  if (s == "colon") return FormKind::kColon;
  if (s == "star") return FormKind::kStar;
  throw ParseError("unknown pattern kind '" + s + "' at line " +
                   std::to_string(lineno));
}

}  // namespace

const PatternSet& PatternSet::builtin() {
  static const PatternSet* set = [] {
    auto* s = new PatternSet();
    s->impl_ = make_builtin_impl();
    return s;
  }();
  return *set;
}

PatternSet PatternSet::from_file(std::istream& in) {
  auto impl = std::make_shared<Impl>();
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    const auto fields = split_tabs(line);
    if (fields.size() != 3) {
      throw ParseError("expected kind<TAB>number<TAB>regex at line " +
                       std::to_string(lineno));
    }
    try {
      impl->add(parse_kind(fields[0], lineno), parse_number_tag(fields[1], lineno),
                fields[2]);
    } catch (const std::invalid_argument& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  impl->add_articles();
  PatternSet set;
  set.impl_ = std::move(impl);
  return set;
}

PatternSet PatternSet::from_file(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  return from_file(in);
}

const std::vector<Pattern>& PatternSet::patterns() const {
  return impl_->declared;
}

namespace {

bool is_word_cp(char32_t c) { return is_letter(c) || is_digit(c); }

bool boundary_start(const std::u32string& cps, std::size_t pos) {
  if (!is_word_cp(cps[pos])) return false;
  if (pos == 0) return true;
  const char32_t prev = cps[pos - 1];
  return !is_word_cp(prev) && !is_marker_cp(prev);
}

bool valid_end(const std::u32string& cps, std::size_t end, FormKind kind,
               bool article) {
  if (end >= cps.size()) return true;
  const char32_t next = cps[end];
  if (!is_word_cp(next)) return true;
  if (article || kind == FormKind::kPair) return false;
  // Marker forms may continue into a compound tail: "Kund*innendaten".
  return is_lower(next);
}

// Stem of a suffix-form match: everything before the marker, or before the
// trailing (I|i)n(nen) run for Binnen-I.
void suffix_stem(const std::u32string& cps, std::size_t begin, std::size_t end,
                 FormKind kind, Number number, std::size_t& stem_begin,
                 std::size_t& stem_end) {
  stem_begin = begin;
  if (kind == FormKind::kBinnenI) {
    stem_end = end - (number == Number::kPlural ? 5 : 2);
    return;
  }
  std::size_t marker = begin;
  while (marker < end && !is_marker_cp(cps[marker])) ++marker;
  stem_end = marker;
  while (stem_end > begin && cps[stem_end - 1] == U' ') --stem_end;  // "x / innen"
}

std::optional<Candidate> try_article(const std::u32string& cps, std::size_t pos,
                                     const PatternSet::Impl& impl) {
  std::size_t end = pos;
  std::size_t marker = 0;
  int marker_count = 0;
  while (end < cps.size() && (is_letter(cps[end]) || is_marker_cp(cps[end]))) {
    if (is_marker_cp(cps[end])) {
      marker = end;
      ++marker_count;
    }
    ++end;
  }
  if (marker_count != 1 || marker == pos || marker + 1 >= end) return std::nullopt;
  std::u32string left = cps.substr(pos, marker - pos);
  std::u32string right = cps.substr(marker + 1, end - marker - 1);
  for (auto& c : left) c = to_lower(c);
  for (auto& c : right) c = to_lower(c);
  if (impl.article_words.count(left) == 0) return std::nullopt;
  if (impl.article_words.count(right) == 0 && !is_article_suffix(right)) {
    return std::nullopt;
  }
  Candidate c;
  c.begin = pos;
  c.end = end;
  c.kind = marker_kind(cps[marker]);
  c.number = Number::kSingular;
  c.stem_begin = pos;
  c.stem_end = marker;
  c.article = true;
  return c;
}

std::vector<Candidate> collect_matches(const std::u32string& cps,
                                       const PatternSet::Impl& impl) {
  std::vector<Candidate> matches;
  std::size_t pos = 0;
  while (pos < cps.size()) {
    if (!boundary_start(cps, pos)) {
      ++pos;
      continue;
    }
    std::optional<Candidate> best;
    for (const auto& entry : impl.entries) {
      const auto m = entry.compiled.match_at(cps, pos);
      if (!m) continue;
      if (!valid_end(cps, m->end, entry.meta.kind, false)) continue;
      if (best && m->end <= best->end) continue;
      Candidate c;
      c.begin = pos;
      c.end = m->end;
      c.kind = entry.meta.kind;
      c.number = entry.meta.number;
      c.article = false;
      if (entry.meta.kind == FormKind::kPair && m->groups.size() > 1 &&
          m->groups[1].set) {
        c.stem_begin = m->groups[1].begin;
        c.stem_end = m->groups[1].end;
      } else {
        suffix_stem(cps, pos, m->end, entry.meta.kind, entry.meta.number,
                    c.stem_begin, c.stem_end);
      }
      best = c;
    }
    if (const auto article = try_article(cps, pos, impl)) {
      if (!best || article->end > best->end) best = article;
    }
    if (best) {
      matches.push_back(*best);
      pos = best->end;
    } else {
      ++pos;
    }
  }
  return matches;
}

}  // namespace

std::vector<GenderFairMatch> find_matches_de(std::string_view text,
                                             const PatternSet& patterns) {
  const std::u32string cps = decode_utf8(text);
  // Byte offset of each code point, for the public byte-based spans.
  std::vector<std::size_t> byte_at(cps.size() + 1);
  std::size_t byte = 0;
  for (std::size_t i = 0; i < cps.size(); ++i) {
    byte_at[i] = byte;
    byte += encode_utf8(cps[i]).size();
  }
  byte_at[cps.size()] = byte;

  std::vector<GenderFairMatch> out;
  for (const auto& c : collect_matches(cps, patterns.impl())) {
    GenderFairMatch m;
    m.begin = byte_at[c.begin];
    m.end = byte_at[c.end];
    m.kind = c.kind;
    m.number = c.number;
    m.stem = encode_utf8(
        std::u32string_view(cps).substr(c.stem_begin, c.stem_end - c.stem_begin));
    m.matched = std::string(text.substr(m.begin, m.end - m.begin));
    out.push_back(std::move(m));
  }
  return out;
}

std::string normalize_de(std::string_view text, const PatternSet& patterns,
                         FormKind target_kind) {
  const auto matches = find_matches_de(text, patterns);
  std::string out;
  std::size_t cursor = 0;
  for (const auto& m : matches) {
    out.append(text.substr(cursor, m.begin - cursor));
    const std::string suffix = m.number == Number::kPlural ? "innen" : "in";
    const std::u32string matched_cps = decode_utf8(m.matched);
    std::size_t marker_pos = 0;
    while (marker_pos < matched_cps.size() && !is_marker_cp(matched_cps[marker_pos])) {
      ++marker_pos;
    }
    // Article forms keep their right-hand part; nouns get stem + suffix.
    bool article = false;
    if (marker_pos < matched_cps.size()) {
      std::u32string after = matched_cps.substr(marker_pos + 1);
      std::u32string trimmed;
      for (char32_t c : after) {
        if (c != U' ') trimmed.push_back(c);
      }
      for (auto& c : trimmed) c = to_lower(c);
      article = trimmed != U"innen" && trimmed != U"in";
    }
    std::string replacement;
    if (article) {
      if (char32_t mc = marker_char(target_kind)) {
        replacement = m.stem + encode_utf8(mc) +
                      encode_utf8(matched_cps.substr(marker_pos + 1));
      } else {
        replacement = m.matched;  // no Binnen-I rendering for article forms
      }
    } else if (target_kind == FormKind::kBinnenI) {
      replacement = m.stem + (m.number == Number::kPlural ? "Innen" : "In");
    } else {
      replacement = m.stem + encode_utf8(marker_char(target_kind)) + suffix;
    }
    out += replacement;
    cursor = m.end;
  }
  out.append(text.substr(cursor));
  return out;
}

DeClass classify_de(const Segment& seg, const PatternSet& patterns) {
  DeClass result;
  for (const auto& m : find_matches_de(seg.text, patterns)) {
    result.gender_fair = true;
    if (m.number == Number::kSingular) result.has_sg = true;
    if (m.number == Number::kPlural) result.has_pl = true;
  }
  return result;
}

}  // namespace fairforge
