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

#include <algorithm>
#include <numeric>

#include "st/error.h"

namespace st {

ErrorBreakdown edit_distance(const Tokens& ref, const Tokens& hyp) {
  if (ref.empty()) throw Error("edit_distance: empty reference");
  const int n = static_cast<int>(ref.size());
  const int m = static_cast<int>(hyp.size());

  // cost[i][j]: distance between ref[0..i) and hyp[0..j).
  std::vector<std::vector<int>> cost(n + 1, std::vector<int>(m + 1, 0));
  for (int i = 0; i <= n; ++i) cost[i][0] = i;
  for (int j = 0; j <= m; ++j) cost[0][j] = j;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= m; ++j) {
      const int sub = cost[i - 1][j - 1] + (ref[i - 1] == hyp[j - 1] ? 0 : 1);
      const int del = cost[i - 1][j] + 1;
      const int ins = cost[i][j - 1] + 1;
      cost[i][j] = std::min(sub, std::min(del, ins));
    }
  }

  ErrorBreakdown out;
  out.ref_length = n;
  // Traceback, ties resolved sub > del > ins.
  int i = n, j = m;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0 &&
        cost[i][j] ==
            cost[i - 1][j - 1] + (ref[i - 1] == hyp[j - 1] ? 0 : 1)) {
      if (ref[i - 1] != hyp[j - 1]) ++out.substitutions;
      --i;
      --j;
    } else if (i > 0 && cost[i][j] == cost[i - 1][j] + 1) {
      ++out.deletions;
      --i;
    } else {
      ++out.insertions;
      --j;
    }
  }
  return out;
}

CorpusWer corpus_wer(const std::map<std::string, Tokens>& refs,
                     const std::map<std::string, Tokens>& hyps) {
  if (refs.empty()) throw Error("corpus_wer: empty reference set");
  CorpusWer out;
  double wer_sum = 0.0;
  for (const auto& [id, ref] : refs) {
    auto it = hyps.find(id);
    if (it == hyps.end()) throw Error("corpus_wer: missing hypothesis " + id);
    ErrorBreakdown b = edit_distance(ref, it->second);
    out.pooled.substitutions += b.substitutions;
    out.pooled.insertions += b.insertions;
    out.pooled.deletions += b.deletions;
    out.pooled.ref_length += b.ref_length;
    wer_sum += b.wer();
  }
  out.per_utt_mean = wer_sum / static_cast<double>(refs.size());
  return out;
}

LabelWer label_wer(const std::map<std::string, Tokens>& labels,
                   const std::map<std::string, Tokens>& oracle) {
  if (oracle.empty()) throw Error("label_wer: oracle transcripts missing");
  std::map<std::string, Tokens> refs;
  for (const auto& [id, toks] : labels) {
    auto it = oracle.find(id);
    if (it == oracle.end()) throw Error("label_wer: no oracle for " + id);
    refs.emplace(id, it->second);
  }
  LabelWer out;
  out.retained_fraction =
      static_cast<double>(labels.size()) / static_cast<double>(oracle.size());
  if (!labels.empty()) out.wer = corpus_wer(refs, labels);
  return out;
}

namespace {

std::vector<double> ranks(const std::vector<double>& v) {
  const size_t n = v.size();
  std::vector<size_t> idx(n);
  std::iota(idx.begin(), idx.end(), size_t{0});
  std::sort(idx.begin(), idx.end(),
            [&](size_t a, size_t b) { return v[a] < v[b]; });
  std::vector<double> r(n);
  size_t i = 0;
  while (i < n) {
    size_t j = i;
    while (j + 1 < n && v[idx[j + 1]] == v[idx[i]]) ++j;
    const double avg = 0.5 * (static_cast<double>(i) + static_cast<double>(j)) + 1.0;
    for (size_t k = i; k <= j; ++k) r[idx[k]] = avg;
    i = j + 1;
  }
  return r;
}

}  // namespace

double spearman_rho(const std::vector<double>& x,
                    const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw Error("spearman_rho: need two equal-length series");
  }
  const std::vector<double> rx = ranks(x);
  const std::vector<double> ry = ranks(y);
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    mx += rx[i];
    my += ry[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace st
