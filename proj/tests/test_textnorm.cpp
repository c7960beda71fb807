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

#include <set>

#include "doctest.h"
#include "st/io.h"
#include "st/rng.h"

using namespace st;

namespace {

// Hand-labeled segmentation fixture: one sentence per entry. The raw text
// fed to the splitter is the entries joined with single spaces.
const std::vector<std::string>& fixture() {
  static const std::vector<std::string> kSentences = {
      "The train left the station at dawn.",
      "Nobody noticed the empty seat in the third carriage.",
      "Mr. Holloway had missed it by a minute.",
      "He stood on the platform and swore quietly.",
      "A porter offered to fetch him a timetable.",
      "\"There is another at nine,\" the porter said.",
      "It was already half past eight.",
      "Dr. Reyes was waiting for him in the city.",
      "The appointment could not be moved again.",
      "He bought a coffee and a paper and sat down.",
      "The headlines were dull.",
      "Prices were up, and the weather would not hold.",
      "On page three he found a story about a lighthouse.",
      "The keeper had kept the lamp burning through the storm.",
      "It reminded him of his grandfather.",
      "The old man had worked the coast for forty years.",
      "He never once complained about the isolation.",
      "What would he have made of all this hurry?",
      "The nine o'clock arrived exactly on time.",
      "Holloway found a window seat and closed his eyes.",
      "The city came up slowly out of the haze.",
      "Towers first, then the long grey bridges.",
      "He walked the last half mile to save the fare.",
      "The clinic smelled of lemon soap.",
      "Dr. Reyes shook his hand warmly.",
      "\"You look tired,\" she said.",
      "He admitted that he had not slept well.",
      "The tests took most of the morning.",
      "By noon he was free to go.",
      "He celebrated with an enormous lunch.",
      "The restaurant stood on the corner of King St. and Vine.",
      "Its windows were fogged with steam.",
      "A waiter recited the specials from memory.",
      "Holloway chose the soup without hesitation.",
      "It arrived scalding and wonderful.",
      "Outside, the afternoon traffic thickened.",
      "He thought about catching the early train home.",
      "Instead he wandered into a secondhand bookshop.",
      "The owner was asleep behind the register.",
      "Shelves leaned together like old friends.",
      "He found a cracked atlas from 1911.",
      "The maps still showed the old borders.",
      "He bought it for almost nothing.",
      "Was that fair to the sleeping owner?",
      "He left an extra coin on the counter anyway.",
      "The evening train was nearly empty.",
      "Rain began somewhere past the river.",
      "He read the atlas under a flickering lamp.",
      "Home arrived before he expected it!",
      "The empty platform shone in the wet light.",
  };
  return kSentences;
}

}  // namespace

TEST_SUITE_BEGIN("textnorm");

TEST_CASE("splits on terminators before capitals") {
  const auto s = split_sentences("A b. C d!");
  REQUIRE(s.size() == 2);
  CHECK(s[0] == "A b.");
  CHECK(s[1] == "C d!");
}

TEST_CASE("text without terminator is one sentence") {
  const auto s = split_sentences("no terminator");
  REQUIRE(s.size() == 1);
  CHECK(s[0] == "no terminator");
}

TEST_CASE("empty input gives empty list") {
  CHECK(split_sentences("").empty());
  CHECK(split_sentences("   \n ").empty());
}

TEST_CASE("abbreviations do not split") {
  const auto s = split_sentences("Mr. Smith went. He left.");
  REQUIRE(s.size() == 2);
  CHECK(s[0] == "Mr. Smith went.");
  CHECK(s[1] == "He left.");
}

TEST_CASE("single initials do not split") {
  const auto s = split_sentences("J. K. Rowling wrote it. True story.");
  REQUIRE(s.size() == 2);
  CHECK(s[0] == "J. K. Rowling wrote it.");
}

TEST_CASE("fixture boundary agreement is at least 95 percent") {
  const auto& truth = fixture();
  REQUIRE(truth.size() == 50);
  const std::string raw = join(truth, " ");
  const auto pred = split_sentences(raw);

  // Boundary = cumulative character offset at each sentence end.
  std::set<size_t> true_bounds, pred_bounds;
  size_t off = 0;
  for (const auto& s : truth) {
    off += s.size();
    true_bounds.insert(off);
    off += 1;  // joining space
  }
  // Recover predicted offsets by locating each predicted sentence in raw.
  size_t cursor = 0;
  for (const auto& s : pred) {
    const size_t at = raw.find(s, cursor);
    REQUIRE(at != std::string::npos);
    pred_bounds.insert(at + s.size());
    cursor = at + s.size();
  }
  size_t agree = 0;
  for (size_t b : true_bounds) agree += pred_bounds.count(b);
  const double recall = static_cast<double>(agree) / true_bounds.size();
  const double precision = static_cast<double>(agree) / pred_bounds.size();
  CHECK(recall >= 0.95);
  CHECK(precision >= 0.95);
}

TEST_CASE("splitter output covers the input") {
  const std::string raw = "One two. Three four! Five?";
  const auto s = split_sentences(raw);
  std::string joined = join(s, " ");
  CHECK(joined == raw);
  for (const auto& sent : s) CHECK(!sent.empty());
}

TEST_CASE("basic normalization") {
  CHECK(normalize_text("Hello, World!") ==
        std::vector<std::string>{"hello", "world"});
}

TEST_CASE("apostrophe in contractions survives") {
  CHECK(normalize_text("don't stop") ==
        std::vector<std::string>{"don't", "stop"});
}

TEST_CASE("hyphens become spaces") {
  CHECK(normalize_text("well-known fact") ==
        std::vector<std::string>{"well", "known", "fact"});
}

TEST_CASE("leading and trailing apostrophes are stripped") {
  CHECK(normalize_text("'tis the dogs' day") ==
        std::vector<std::string>{"tis", "the", "dogs", "day"});
}

TEST_CASE("digits are kept") {
  CHECK(normalize_text("in 1911 it rained") ==
        std::vector<std::string>{"in", "1911", "it", "rained"});
}

TEST_CASE("normalization is idempotent and closed over its alphabet") {
  Rng rng(4242);
  const std::string pool =
      "abcXYZ0189'!?.,;--  \t()\"abc'd e-f g..hh don't";
  for (int trial = 0; trial < 200; ++trial) {
    std::string s;
    const size_t len = rng.uniform_int(40);
    for (size_t i = 0; i < len; ++i) {
      s.push_back(pool[rng.uniform_int(pool.size())]);
    }
    const auto once = normalize_text(s);
    const auto twice = normalize_text(join(once, " "));
    CHECK(once == twice);
    for (const auto& w : once) {
      for (char c : w) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
                        c == '\'';
        CHECK(ok);
      }
    }
  }
}

TEST_CASE("chars with separator") {
  CHECK(chars_with_separator({"ab", "c"}, "_") ==
        std::vector<std::string>{"a", "b", "_", "c"});
  CHECK(chars_with_separator({}, "_").empty());
}

TEST_SUITE_END();
