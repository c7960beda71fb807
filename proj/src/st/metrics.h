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
#ifndef ST_METRICS_H_
#define ST_METRICS_H_

#include <map>
#include <string>
#include <vector>

#include "st/vocab.h"

namespace st {

struct ErrorBreakdown {
  int substitutions = 0;
  int insertions = 0;
  int deletions = 0;
  int ref_length = 0;

  int total_errors() const { return substitutions + insertions + deletions; }
  double wer() const {
    return 100.0 * static_cast<double>(total_errors()) / ref_length;
  }
};

// Unit-cost Levenshtein alignment. Among minimal-cost alignments the
// traceback resolves ties in the order substitution > deletion > insertion,
// so the (S, I, D) decomposition is deterministic.
ErrorBreakdown edit_distance(const Tokens& ref, const Tokens& hyp);

// Pooled WER: 100 * sum(S+I+D) / sum(ref_length). Refs and hyps are aligned
// by id; every ref id must be present in hyps (a failed decode is scored as
// an empty hypothesis upstream).
struct CorpusWer {
  ErrorBreakdown pooled;       // summed over utterances
  double per_utt_mean = 0.0;   // secondary diagnostic, percent
  double wer() const { return pooled.wer(); }
};

CorpusWer corpus_wer(const std::map<std::string, Tokens>& refs,
                     const std::map<std::string, Tokens>& hyps);

// Label WER of retained pseudo-labels against oracle transcripts, plus the
// fraction of oracle utterances that the label set retains.
struct LabelWer {
  CorpusWer wer;
  double retained_fraction = 0.0;
};

LabelWer label_wer(const std::map<std::string, Tokens>& labels,
                   const std::map<std::string, Tokens>& oracle);

// Spearman rank correlation; ties get average ranks.
double spearman_rho(const std::vector<double>& x,
                    const std::vector<double>& y);

}  // namespace st

#endif  // ST_METRICS_H_
