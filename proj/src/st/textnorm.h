// Copyright 2026 The selftrain Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef ST_TEXTNORM_H_
#define ST_TEXTNORM_H_

#include <string>
#include <vector>

namespace st {

// Applied in fixed order: sentence split -> lowercase -> hyphen replacement
// -> punctuation strip -> whitespace collapse.
struct NormalizationRules {
  bool lowercase = true;
  bool strip_punctuation = true;  // apostrophes between letters survive
  bool hyphen_to_space = true;
};

// Rule-based sentence splitter: breaks after {., !, ?} followed by
// whitespace and an upper-case letter, with a small abbreviation stoplist
// and single-initial handling. Returned sentences keep their terminators;
// empty input yields an empty list.
std::vector<std::string> split_sentences(const std::string& raw);

// Normalizes one sentence to word tokens. Output characters are restricted
// to lower-case letters, digits and in-word apostrophes; idempotent.
std::vector<std::string> normalize_text(const std::string& raw,
                                        const NormalizationRules& rules);

inline std::vector<std::string> normalize_text(const std::string& raw) {
  return normalize_text(raw, NormalizationRules{});
}

// Spells words as single-character token strings with a separator token
// between consecutive words: ["ab","c"] -> ["a","b",sep,"c"].
std::vector<std::string> chars_with_separator(
    const std::vector<std::string>& words, const std::string& separator);

}  // namespace st

#endif  // ST_TEXTNORM_H_
