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

#ifndef FAIRFORGE_LEXICON_DATA_HPP
#define FAIRFORGE_LEXICON_DATA_HPP

namespace fairforge::detail {

extern const char kBuiltinLexiconTsv[];

}  // namespace fairforge::detail

#endif  // FAIRFORGE_LEXICON_DATA_HPP
