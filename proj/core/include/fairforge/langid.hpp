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

#ifndef FAIRFORGE_LANGID_HPP
#define FAIRFORGE_LANGID_HPP

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace fairforge {

struct LangScore {
  std::string label;       // best language, "und" if the background model wins
  double confidence = 0;   // posterior of the best label, in [0, 1]
};

class LangScorer {
 public:
  virtual ~LangScorer() = default;
  virtual LangScore score(std::string_view text) const = 0;
  virtual bool supports(std::string_view lang) const = 0;
};

/// Character-trigram frequency model over small per-language seed texts,
/// with a uniform background model so that gibberish scores as "und" rather
/// than whichever language smoothing happens to favor. Fully deterministic.
class TrigramLangScorer : public LangScorer {
 public:
  /// Scorer trained on the bundled German and English seed texts.
  static const TrigramLangScorer& builtin();

  void add_language(std::string lang, std::string_view seed_text);

  LangScore score(std::string_view text) const override;
  bool supports(std::string_view lang) const override;

 private:
  struct Model {
    std::map<std::u32string, double> logprob;
    double unseen_logprob = 0;
  };
  std::map<std::string, Model> models_;
};

}  // namespace fairforge

#endif  // FAIRFORGE_LANGID_HPP
