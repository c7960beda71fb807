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
#include "st/metrics.h"

#include <map>

#include "doctest.h"
#include "st/rng.h"

using namespace st;

namespace {

// Independent memoized-recursion distance, kept free of the DP code path.
int oracle_distance(const Tokens& a, const Tokens& b, size_t i, size_t j,
                    std::map<std::pair<size_t, size_t>, int>& memo) {
  if (i == a.size()) return static_cast<int>(b.size() - j);
  if (j == b.size()) return static_cast<int>(a.size() - i);
  auto key = std::make_pair(i, j);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  int best = oracle_distance(a, b, i + 1, j + 1, memo) + (a[i] == b[j] ? 0 : 1);
  best = std::min(best, oracle_distance(a, b, i + 1, j, memo) + 1);
  best = std::min(best, oracle_distance(a, b, i, j + 1, memo) + 1);
  memo[key] = best;
  return best;
}

int oracle_distance(const Tokens& a, const Tokens& b) {
  std::map<std::pair<size_t, size_t>, int> memo;
  return oracle_distance(a, b, 0, 0, memo);
}

Tokens random_tokens(Rng& rng, int max_len, int alphabet) {
  Tokens t(rng.uniform_int(static_cast<uint64_t>(max_len) + 1));
  for (auto& x : t) x = static_cast<TokenId>(rng.uniform_int(alphabet));
  return t;
}

}  // namespace

TEST_SUITE_BEGIN("metrics");

TEST_CASE("single substitution") {
  ErrorBreakdown b = edit_distance({1, 2, 3}, {1, 9, 3});
  CHECK(b.substitutions == 1);
  CHECK(b.insertions == 0);
  CHECK(b.deletions == 0);
  CHECK(b.wer() == doctest::Approx(33.3333).epsilon(1e-3));
}

TEST_CASE("identical sequences score zero") {
  ErrorBreakdown b = edit_distance({4, 5, 6, 7}, {4, 5, 6, 7});
  CHECK(b.total_errors() == 0);
  CHECK(b.wer() == 0.0);
}

TEST_CASE("empty reference rejected") {
  CHECK_THROWS_AS(edit_distance({}, {1}), Error);
}

TEST_CASE("distance matches memoized oracle on 500 random pairs") {
  Rng rng(20260810);
  for (int i = 0; i < 500; ++i) {
    Tokens ref = random_tokens(rng, 12, 5);
    if (ref.empty()) ref.push_back(0);
    const Tokens hyp = random_tokens(rng, 12, 5);
    ErrorBreakdown b = edit_distance(ref, hyp);
    CHECK(b.total_errors() == oracle_distance(ref, hyp));
    CHECK(b.substitutions + b.deletions <= b.ref_length);
  }
}

TEST_CASE("raw distance is symmetric, WER is not") {
  Rng rng(7);
  for (int i = 0; i < 100; ++i) {
    Tokens a = random_tokens(rng, 10, 4);
    Tokens b = random_tokens(rng, 10, 4);
    if (a.empty()) a.push_back(1);
    if (b.empty()) b.push_back(2);
    CHECK(edit_distance(a, b).total_errors() ==
          edit_distance(b, a).total_errors());
  }
}

TEST_CASE("triangle inequality on random triples") {
  Rng rng(99);
  for (int i = 0; i < 200; ++i) {
    Tokens a = random_tokens(rng, 8, 4);
    Tokens b = random_tokens(rng, 8, 4);
    Tokens c = random_tokens(rng, 8, 4);
    if (a.empty()) a.push_back(0);
    if (b.empty()) b.push_back(0);
    if (c.empty()) c.push_back(0);
    const int ab = edit_distance(a, b).total_errors();
    const int bc = edit_distance(b, c).total_errors();
    const int ac = edit_distance(a, c).total_errors();
    CHECK(ac <= ab + bc);
  }
}

TEST_CASE("wer can exceed 100 percent") {
  ErrorBreakdown b = edit_distance({1}, {1, 2, 3, 4});
  CHECK(b.insertions == 3);
  CHECK(b.wer() == doctest::Approx(300.0));
}

TEST_CASE("corpus wer pools errors over reference words") {
  std::map<std::string, Tokens> refs{{"u0", {1, 2, 3, 4}}};
  std::map<std::string, Tokens> hyps{{"u0", {1, 9, 3, 4}}};
  CHECK(corpus_wer(refs, hyps).wer() == doctest::Approx(25.0));
}

TEST_CASE("empty hypothesis scores as all deletions") {
  std::map<std::string, Tokens> refs{{"u0", {1, 2, 3, 4, 5}}};
  std::map<std::string, Tokens> hyps{{"u0", {}}};
  CorpusWer w = corpus_wer(refs, hyps);
  CHECK(w.pooled.deletions == 5);
  CHECK(w.wer() == doctest::Approx(100.0));
}

TEST_CASE("pooled wer differs from per-utterance mean") {
  // 1-word ref with 1 error, 9-word ref with 0 errors.
  std::map<std::string, Tokens> refs{{"a", {1}}, {"b", {1, 2, 3, 4, 5, 6, 7, 8, 9}}};
  std::map<std::string, Tokens> hyps{{"a", {2}}, {"b", {1, 2, 3, 4, 5, 6, 7, 8, 9}}};
  CorpusWer w = corpus_wer(refs, hyps);
  CHECK(w.wer() == doctest::Approx(10.0));
  CHECK(w.per_utt_mean == doctest::Approx(50.0));
}

TEST_CASE("missing hypothesis id is an error") {
  std::map<std::string, Tokens> refs{{"a", {1}}};
  std::map<std::string, Tokens> hyps;
  CHECK_THROWS_AS(corpus_wer(refs, hyps), Error);
}

TEST_CASE("label wer against oracle") {
  std::map<std::string, Tokens> oracle{{"a", {1, 2}}, {"b", {3, 4}},
                                       {"c", {5, 6}}};
  std::map<std::string, Tokens> labels{{"a", {1, 2}}, {"b", {3, 9}}};
  LabelWer lw = label_wer(labels, oracle);
  CHECK(lw.retained_fraction == doctest::Approx(2.0 / 3.0));
  CHECK(lw.wer.wer() == doctest::Approx(25.0));

  std::map<std::string, Tokens> exact = oracle;
  CHECK(label_wer(exact, oracle).wer.wer() == 0.0);

  std::map<std::string, Tokens> empty_oracle;
  CHECK_THROWS_AS(label_wer(labels, empty_oracle), Error);
}

TEST_CASE("spearman rho basics") {
  CHECK(spearman_rho({1, 2, 3, 4}, {10, 20, 30, 40}) == doctest::Approx(1.0));
  CHECK(spearman_rho({1, 2, 3, 4}, {9, 7, 5, 3}) == doctest::Approx(-1.0));
  CHECK(spearman_rho({1, 2, 3, 4}, {1, 3, 2, 4}) > 0.0);
}

TEST_SUITE_END();
