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

#include "fairforge/langid.hpp"

#include <cmath>

#include "fairforge/unicode.hpp"

namespace fairforge {

namespace {

// Uniform background probability per trigram. Seen trigrams in a language
// model score above this, unseen ones below, so text made of unseen
// trigrams drifts to the "und" label instead of a random language.
constexpr double kBackgroundProb = 1.0 / 5000.0;
constexpr double kSmoothing = 0.1;

const char kGermanSeed[] =
    "Die Familien treffen sich am Nachmittag im Garten und sprechen über die "
    "Schule. Jede Begegnung mit einem Kind ist anders, auch die Eltern sind "
    "verschieden. Wir suchen eine erfahrene Fachkraft für unser Team in der "
    "Stadt. Der Unterricht beginnt am Morgen und endet am späten Nachmittag. "
    "Viele Menschen lesen gerne Bücher über Geschichte und Wissenschaft. Das "
    "Wetter ist heute schön, aber morgen soll es regnen. Die Mitarbeiter des "
    "Unternehmens arbeiten an einem neuen Projekt. Sie haben Freude am Umgang "
    "mit Kolleginnen und Kollegen. Eine abgeschlossene Ausbildung ist von "
    "Vorteil. Es erwartet Sie ein spannendes Arbeitsumfeld und ein gutes "
    "Betriebsklima. Die Punkte werden addiert und eine neue Runde wird "
    "gespielt. Durch die Technik des Internets kann jede Person das Gefühl "
    "bekommen, den Überblick zu verlieren. Gerade im finanziellen Bereich ist "
    "das Vertrauen besonders wichtig. Zugelassen zur Ausbildung werden alle "
    "mit einem eidgenössischen Fähigkeitszeugnis oder einer gleichwertigen "
    "Ausbildung. Erforderlich sind zudem zwölf Monate Praxis in einem "
    "Betrieb.";

const char kEnglishSeed[] =
    "The families meet in the garden in the afternoon and talk about school. "
    "Every encounter with a child is different, and the parents differ too. "
    "We are looking for an experienced professional to join our team in the "
    "city. Lessons begin in the morning and end in the late afternoon. Many "
    "people enjoy reading books about history and science. The weather is "
    "nice today, but it is supposed to rain tomorrow. The employees of the "
    "company are working on a new project. A completed apprenticeship is an "
    "advantage. An exciting work environment and a good atmosphere await "
    "you. The points are added up and a new round is played. Through the "
    "technology of the internet, a person can feel that they are losing "
    "track of where their data is stored. Trust is especially important in "
    "financial matters. Everyone with an official certificate or an "
    "equivalent qualification is admitted to the training. Twelve months of "
    "practice in a company are also required. The quick brown fox jumps "
    "over the lazy dog while the jazz band puzzles the crowd.";

std::vector<std::u32string> trigrams(std::string_view text) {
  std::u32string padded = U" ";
  padded += decode_utf8(collapse_whitespace(text));
  for (auto& c : padded) c = to_lower(c);
  padded += U' ';
  std::vector<std::u32string> out;
  if (padded.size() < 3) return out;
  out.reserve(padded.size() - 2);
  for (std::size_t i = 0; i + 3 <= padded.size(); ++i) {
    out.push_back(padded.substr(i, 3));
  }
  return out;
}

double log_sum_exp(const std::vector<double>& xs) {
  double best = xs.front();
  for (double x : xs) best = std::max(best, x);
  double sum = 0;
  for (double x : xs) sum += std::exp(x - best);
  return best + std::log(sum);
}

}  // namespace

void TrigramLangScorer::add_language(std::string lang, std::string_view seed_text) {
  std::map<std::u32string, std::size_t> counts;
  std::size_t total = 0;
  for (auto& tri : trigrams(seed_text)) {
    ++counts[tri];
    ++total;
  }
  Model model;
  const double denom =
      static_cast<double>(total) + kSmoothing * static_cast<double>(counts.size());
  for (const auto& [tri, count] : counts) {
    model.logprob[tri] = std::log((static_cast<double>(count) + kSmoothing) / denom);
  }
  model.unseen_logprob = std::log(kSmoothing / denom);
  models_[std::move(lang)] = std::move(model);
}

LangScore TrigramLangScorer::score(std::string_view text) const {
  const auto tris = trigrams(text);
  LangScore result{"und", 0.0};
  if (tris.empty() || models_.empty()) return result;

  std::vector<std::string> labels;
  std::vector<double> logliks;
  for (const auto& [lang, model] : models_) {
    double loglik = 0;
    for (const auto& tri : tris) {
      auto it = model.logprob.find(tri);
      loglik += it == model.logprob.end() ? model.unseen_logprob : it->second;
    }
    labels.push_back(lang);
    logliks.push_back(loglik);
  }
  labels.emplace_back("und");
  logliks.push_back(static_cast<double>(tris.size()) * std::log(kBackgroundProb));

  const double denom = log_sum_exp(logliks);
  std::size_t best = 0;
  for (std::size_t i = 1; i < logliks.size(); ++i) {
    if (logliks[i] > logliks[best]) best = i;
  }
  result.label = labels[best];
  result.confidence = std::exp(logliks[best] - denom);
  return result;
}

bool TrigramLangScorer::supports(std::string_view lang) const {
  return models_.count(std::string(lang)) > 0;
}

const TrigramLangScorer& TrigramLangScorer::builtin() {
  static const TrigramLangScorer* scorer = [] {
    auto* s = new TrigramLangScorer();
    s->add_language("de", kGermanSeed);
    s->add_language("en", kEnglishSeed);
    return s;
  }();
  return *scorer;
}

}  // namespace fairforge
