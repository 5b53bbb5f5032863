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

#include "fairforge/filters.hpp"

#include <iostream>
#include <sstream>

#include "fairforge/unicode.hpp"

namespace fairforge {

namespace {

std::vector<std::string> whitespace_words(std::string_view text) {
  std::vector<std::string> words;
  std::size_t i = 0;
  const std::u32string cps = decode_utf8(text);
  while (i < cps.size()) {
    while (i < cps.size() && is_space(cps[i])) ++i;
    std::size_t start = i;
    while (i < cps.size() && !is_space(cps[i])) ++i;
    if (i > start)
      words.push_back(encode_utf8(std::u32string_view(cps).substr(start, i - start)));
  }
  return words;
}

void set_config_key(FilterConfig& cfg, const std::string& key,
                    const std::string& value, int lineno) {
  try {
    if (key == "min_words") {
      cfg.min_words = std::stoi(value);
    } else if (key == "max_words") {
      cfg.max_words = std::stoi(value);
    } else if (key == "max_word_len") {
      cfg.max_word_len = std::stoi(value);
    } else if (key == "min_alpha_ratio") {
      cfg.min_alpha_ratio = std::stod(value);
    } else if (key == "lang_id_threshold") {
      cfg.lang_id_threshold = std::stod(value);
    } else if (key == "expected_lang") {
      cfg.expected_lang = value;
    } else {
      throw ParseError("unknown filter config key '" + key + "' at line " +
                       std::to_string(lineno));
    }
  } catch (const std::invalid_argument&) {
    throw ParseError("bad value for '" + key + "' at line " + std::to_string(lineno));
  }
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

FilterConfig load_filter_config(std::istream& in) {
  FilterConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw ParseError("expected key=value at line " + std::to_string(lineno));
    }
    set_config_key(cfg, trim(stripped.substr(0, eq)), trim(stripped.substr(eq + 1)),
                   lineno);
  }
  if (cfg.min_words < 0 || cfg.min_words > cfg.max_words) {
    throw ParseError("filter config violates 0 <= min_words <= max_words");
  }
  if (cfg.min_alpha_ratio < 0.0 || cfg.min_alpha_ratio > 1.0) {
    throw ParseError("min_alpha_ratio must be within [0, 1]");
  }
  return cfg;
}

FilterConfig load_filter_config(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  return load_filter_config(in);
}

bool length_filter(const Segment& seg, const FilterConfig& cfg) {
  const auto n = static_cast<int>(whitespace_words(seg.text).size());
  return n >= cfg.min_words && n <= cfg.max_words;
}

bool long_word_filter(const Segment& seg, const FilterConfig& cfg) {
  for (const auto& word : whitespace_words(seg.text)) {
    if (codepoint_count(word) > static_cast<std::size_t>(cfg.max_word_len)) {
      return false;
    }
  }
  return true;
}

bool alphabet_ratio_filter(const Segment& seg, const FilterConfig& cfg) {
  std::size_t alpha = 0;
  std::size_t non_space = 0;
  for (char32_t cp : decode_utf8(seg.text)) {
    if (is_space(cp)) continue;
    ++non_space;
    if (is_letter(cp)) ++alpha;
  }
  if (non_space == 0) return false;
  return static_cast<double>(alpha) >=
         cfg.min_alpha_ratio * static_cast<double>(non_space);
}

bool language_id_filter(const Segment& seg, const LangScorer& scorer,
                        const FilterConfig& cfg) {
  try {
    const LangScore s = scorer.score(seg.text);
    return s.label == cfg.expected_lang && s.confidence > cfg.lang_id_threshold;
  } catch (const std::exception& e) {
    std::cerr << "warning: language scorer failed on segment " << seg.id << ": "
              << e.what() << "\n";
    return false;
  }
}

bool passes_all(const Segment& seg, const LangScorer& scorer, const FilterConfig& cfg) {
  return length_filter(seg, cfg) && long_word_filter(seg, cfg) &&
         alphabet_ratio_filter(seg, cfg) && language_id_filter(seg, scorer, cfg);
}

std::string Dedup::key(std::string_view text) {
  return collapse_whitespace(nfc(text));
}

bool Dedup::admit(const Segment& seg) {
  return keys_.insert(key(seg.text)).second;
}

std::vector<Segment> dedup(std::vector<Segment> segments) {
  Dedup seen;
  std::vector<Segment> out;
  out.reserve(segments.size());
  for (auto& seg : segments) {
    if (seen.admit(seg)) out.push_back(std::move(seg));
  }
  return out;
}

}  // namespace fairforge
