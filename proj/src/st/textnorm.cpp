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
#include "st/textnorm.h"

#include <algorithm>
#include <cctype>
#include <set>

#include "st/io.h"

namespace st {

namespace {

bool is_alpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}
bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

const std::set<std::string>& abbreviations() {
  static const std::set<std::string> kAbbrev = {
      "mr",  "mrs", "ms",  "dr",   "prof", "rev",  "gen", "sen",
      "st",  "jr",  "sr",  "vs",   "etc",  "inc",  "co",  "corp",
      "no",  "dept", "fig", "est",  "approx", "col", "capt", "lt"};
  return kAbbrev;
}

// Word immediately preceding position `dot`, lower-cased, letters only.
std::string word_before(const std::string& s, size_t dot) {
  size_t end = dot;
  size_t begin = end;
  while (begin > 0 && is_alpha(s[begin - 1])) --begin;
  std::string w;
  for (size_t i = begin; i < end; ++i)
    w.push_back(static_cast<char>(std::tolower(s[i])));
  return w;
}

}  // namespace

std::vector<std::string> split_sentences(const std::string& raw) {
  std::vector<std::string> sentences;
  size_t start = 0;
  for (size_t i = 0; i < raw.size(); ++i) {
    const char c = raw[i];
    if (c != '.' && c != '!' && c != '?') continue;

    // Look ahead past closing quotes, then require whitespace followed by
    // an upper-case opener.
    size_t j = i + 1;
    while (j < raw.size() && (raw[j] == '"' || raw[j] == '\'')) ++j;
    size_t after_mark = j;
    while (j < raw.size() && is_space(raw[j])) ++j;
    if (j == after_mark) continue;  // no whitespace after the mark
    if (j < raw.size()) {
      char next = raw[j];
      if (next == '"' || next == '\'') {
        if (j + 1 < raw.size()) next = raw[j + 1];
      }
      if (!is_upper(next) && !is_digit(next)) continue;
    }

    if (c == '.') {
      const std::string w = word_before(raw, i);
      if (abbreviations().count(w) > 0) continue;
      if (w.size() == 1 && is_upper(raw[i - 1])) continue;  // initials
    }

    std::string sentence = strip(raw.substr(start, after_mark - start));
    if (!sentence.empty()) sentences.push_back(sentence);
    start = after_mark;
  }
  std::string tail = strip(raw.substr(start));
  if (!tail.empty()) sentences.push_back(tail);
  return sentences;
}

std::vector<std::string> normalize_text(const std::string& raw,
                                        const NormalizationRules& rules) {
  std::string s = raw;
  if (rules.lowercase) {
    for (char& c : s) c = static_cast<char>(std::tolower(c));
  }
  if (rules.hyphen_to_space) {
    std::replace(s.begin(), s.end(), '-', ' ');
  }
  if (rules.strip_punctuation) {
    std::string kept;
    kept.reserve(s.size());
    for (size_t i = 0; i < s.size(); ++i) {
      const char c = s[i];
      if (is_alpha(c) || is_digit(c) || is_space(c)) {
        kept.push_back(c);
      } else if (c == '\'' && i > 0 && i + 1 < s.size() &&
                 is_alpha(s[i - 1]) && is_alpha(s[i + 1])) {
        kept.push_back(c);
      } else {
        kept.push_back(' ');
      }
    }
    s = kept;
  }
  return split_ws(s);
}

std::vector<std::string> chars_with_separator(
    const std::vector<std::string>& words, const std::string& separator) {
  std::vector<std::string> out;
  for (size_t w = 0; w < words.size(); ++w) {
    if (w > 0) out.push_back(separator);
    for (char c : words[w]) out.push_back(std::string(1, c));
  }
  return out;
}

}  // namespace st
