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
#ifndef ST_LM_H_
#define ST_LM_H_

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "st/vocab.h"

namespace st {

using Sentences = std::vector<std::vector<std::string>>;

enum class Smoothing {
  kNone,              // MLE; unseen events score -inf (test use only)
  kAddK,              // additive smoothing, dense per-context rows
  kAbsoluteDiscount,  // interpolated absolute discounting (default)
};

struct NGramConfig {
  int order = 5;
  Smoothing smoothing = Smoothing::kAbsoluteDiscount;
  double add_k = 1.0;
  double discount = 0.75;
  bool include_unk = true;  // reserve <unk> when building vocab from text

  std::string smoothing_name() const;
};

// Backoff-table n-gram model over the shared token vocabulary. EOS is a
// first-class token: it is counted and scored at the end of every sentence.
// Contexts are packed into 64 bits, which limits order to <= 8 and the
// vocabulary to < 256 tokens (far beyond desk scale).
//
// Immutable after training; concurrent readers are safe.
class NGramLM {
 public:
  struct ContextEntry {
    double log_bow = 0.0;
    // sorted by token id
    std::vector<std::pair<TokenId, double>> logprobs;
  };
  // levels[k-1]: contexts of length k-1 -> entry
  using Level = std::unordered_map<uint64_t, ContextEntry>;

  NGramLM() = default;

  int order() const { return order_; }
  const Vocabulary& vocab() const { return vocab_; }
  const NGramConfig& config() const { return config_; }

  // log P(token | context); context longer than order-1 is truncated on the
  // left. Unknown strings map to <unk> upstream; ids must be in range.
  double logprob_token(const Tokens& context, TokenId token) const;

  // Full conditional distribution for one context; dst gets vocab() .size()
  // log-probabilities. Shared walk with logprob_token.
  void step_distribution(const Tokens& context, double* dst) const;

  // Sum over positions of log P(token_u | tokens_<u) plus the EOS factor.
  double sequence_logprob(const Tokens& tokens) const;

  const std::vector<Level>& levels() const { return levels_; }

  std::string serialize() const;
  static NGramLM deserialize(const std::string& text);
  void save(const std::string& path) const;
  static NGramLM load(const std::string& path);

  // Uniform unigram over the given vocabulary; every event scores -log(V).
  static NGramLM uniform(const Vocabulary& vocab);

  static uint64_t pack_context(const TokenId* ctx, int len);

 private:
  friend NGramLM train_ngram(const Sentences&, const NGramConfig&,
                             const Vocabulary*);

  Vocabulary vocab_;
  NGramConfig config_;
  int order_ = 1;
  std::vector<Level> levels_;
};

// Trains an n-gram model. The vocabulary is built from the text (plus EOS
// and, by default, UNK) unless an explicit one is supplied.
NGramLM train_ngram(const Sentences& text, const NGramConfig& config,
                    const Vocabulary* vocab = nullptr);

// Log-probability of a token-string sequence including the EOS factor; OOV
// strings are mapped to UNK.
double lm_logprob(const NGramLM& lm, const std::vector<std::string>& tokens);

// exp(-(sum logprob)/(number of scored events)); each sentence contributes
// its token count plus one EOS event.
double perplexity(const NGramLM& lm, const Sentences& corpus);

// One rung of the controlled-quality ladder: train on the first
// floor(fraction * N) sentences with the given order.
struct DegradeLevel {
  double fraction = 1.0;
  int order = 5;
  bool operator==(const DegradeLevel& o) const {
    return fraction == o.fraction && order == o.order;
  }
};

struct DegradedLM {
  DegradeLevel level;
  NGramLM lm;
  double heldout_perplexity = 0.0;
};

// Trains one model per level (>= 3 distinct levels required) and checks
// that held-out perplexity is strictly increasing along the ladder. All
// models share the full-text vocabulary so perplexities are comparable.
std::vector<DegradedLM> degrade_lm(const Sentences& text,
                                   const std::vector<DegradeLevel>& levels,
                                   const NGramConfig& base_config,
                                   const Sentences& heldout);

// Exhaustive per-context probability sum, used by normalization checks.
double context_prob_sum(const NGramLM& lm, const Tokens& context);

// Cached per-step LM scorer for the decoder. Not thread-safe; make one per
// decoding thread. The underlying model stays immutable.
class LmStepScorer {
 public:
  explicit LmStepScorer(const NGramLM& lm) : lm_(&lm) {}

  // Log-distribution over the LM vocabulary given the last order-1 tokens.
  const std::vector<double>& step(const Tokens& context);

 private:
  const NGramLM* lm_;
  std::unordered_map<uint64_t, std::vector<double>> cache_;
};

}  // namespace st

#endif  // ST_LM_H_
