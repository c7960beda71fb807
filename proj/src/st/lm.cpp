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
#include "st/lm.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "st/error.h"
#include "st/io.h"

namespace st {

namespace {

constexpr double kLogZero = -std::numeric_limits<double>::infinity();
constexpr int kMaxOrder = 8;       // context packs into 64 bits
constexpr int kMaxVocab = 255;

struct RawCounts {
  int total = 0;
  std::map<TokenId, int> by_token;  // sorted by token id
};

void validate_config(const NGramConfig& cfg) {
  if (cfg.order < 1) throw ConfigError("ngram order must be >= 1");
  if (cfg.order > kMaxOrder) {
    throw ConfigError("ngram order above " + std::to_string(kMaxOrder) +
                      " is not supported");
  }
  if (cfg.smoothing == Smoothing::kAddK && cfg.add_k <= 0.0) {
    throw ConfigError("add_k must be positive");
  }
  if (cfg.smoothing == Smoothing::kAbsoluteDiscount &&
      (cfg.discount <= 0.0 || cfg.discount >= 1.0)) {
    throw ConfigError("discount must lie in (0, 1)");
  }
}

Vocabulary build_vocab(const Sentences& text, bool include_unk) {
  std::set<std::string> types;
  for (const auto& sent : text) {
    for (const auto& tok : sent) types.insert(tok);
  }
  if (types.empty()) throw ConfigError("ngram training text has empty vocabulary");
  std::vector<std::string> entries(types.begin(), types.end());
  return Vocabulary(entries, include_unk);
}

}  // namespace

std::string NGramConfig::smoothing_name() const {
  switch (smoothing) {
    case Smoothing::kNone:
      return "none";
    case Smoothing::kAddK:
      return "add_k";
    case Smoothing::kAbsoluteDiscount:
      return "absolute_discount";
  }
  return "unknown";
}

uint64_t NGramLM::pack_context(const TokenId* ctx, int len) {
  uint64_t key = static_cast<uint64_t>(len) << 56;
  for (int i = 0; i < len; ++i) {
    key |= static_cast<uint64_t>(static_cast<uint8_t>(ctx[i])) << (8 * i);
  }
  return key;
}

double NGramLM::logprob_token(const Tokens& context, TokenId token) const {
  if (token < 0 || token >= vocab_.size()) {
    throw Error("lm: token id out of range");
  }
  int len = std::min<int>(static_cast<int>(context.size()), order_ - 1);
  const TokenId* ctx = context.data() + (context.size() - len);
  double acc = 0.0;
  for (; len >= 0; --len) {
    const Level& level = levels_[static_cast<size_t>(len)];
    auto it = level.find(pack_context(ctx, len));
    if (it == level.end()) {
      ++ctx;  // unseen context: implicit backoff weight of 1
      continue;
    }
    const ContextEntry& e = it->second;
    auto pos = std::lower_bound(
        e.logprobs.begin(), e.logprobs.end(), token,
        [](const std::pair<TokenId, double>& a, TokenId t) {
          return a.first < t;
        });
    if (pos != e.logprobs.end() && pos->first == token) {
      return acc + pos->second;
    }
    acc += e.log_bow;
    ++ctx;
  }
  return kLogZero;  // MLE-only: unseen unigram
}

void NGramLM::step_distribution(const Tokens& context, double* dst) const {
  const int v = vocab_.size();
  for (int i = 0; i < v; ++i) dst[i] = 1.0;  // sentinel: unresolved
  int len = std::min<int>(static_cast<int>(context.size()), order_ - 1);
  const TokenId* ctx = context.data() + (context.size() - len);
  double acc = 0.0;
  int unresolved = v;
  for (; len >= 0 && unresolved > 0; --len) {
    const Level& level = levels_[static_cast<size_t>(len)];
    auto it = level.find(pack_context(ctx, len));
    if (it == level.end()) {
      ++ctx;
      continue;
    }
    const ContextEntry& e = it->second;
    for (const auto& [tok, lp] : e.logprobs) {
      if (dst[tok] > 0.0) {
        dst[tok] = acc + lp;
        --unresolved;
      }
    }
    acc += e.log_bow;
    ++ctx;
  }
  for (int i = 0; i < v; ++i) {
    if (dst[i] > 0.0) dst[i] = kLogZero;
  }
}

double NGramLM::sequence_logprob(const Tokens& tokens) const {
  double total = 0.0;
  Tokens context;
  context.reserve(tokens.size());
  for (size_t u = 0; u <= tokens.size(); ++u) {
    const TokenId tok =
        u < tokens.size() ? tokens[u] : Vocabulary::kEos;
    total += logprob_token(context, tok);
    if (u < tokens.size()) context.push_back(tok);
  }
  return total;
}

NGramLM train_ngram(const Sentences& text, const NGramConfig& config,
                    const Vocabulary* vocab) {
  validate_config(config);
  if (text.empty()) throw ConfigError("ngram training text is empty");

  NGramLM lm;
  lm.config_ = config;
  lm.order_ = config.order;
  lm.vocab_ = vocab ? *vocab : build_vocab(text, config.include_unk);
  const int v = lm.vocab_.size();
  if (v > kMaxVocab) throw ConfigError("vocabulary too large for ngram LM");

  // Raw counts per level; the context at position u is truncated to the
  // available history, so level k collects events with u >= k-1.
  std::vector<std::unordered_map<uint64_t, RawCounts>> counts(
      static_cast<size_t>(config.order));
  for (const auto& sent : text) {
    Tokens ids;
    ids.reserve(sent.size());
    for (const auto& tok : sent) ids.push_back(lm.vocab_.id_or_unk(tok));
    const int n = static_cast<int>(ids.size());
    for (int u = 0; u <= n; ++u) {
      const TokenId tok = u < n ? ids[u] : Vocabulary::kEos;
      for (int k = 1; k <= config.order; ++k) {
        const int len = k - 1;
        if (u < len) break;
        const uint64_t key =
            NGramLM::pack_context(ids.data() + (u - len), len);
        RawCounts& rc = counts[static_cast<size_t>(len)][key];
        rc.total += 1;
        rc.by_token[tok] += 1;
      }
    }
  }

  lm.levels_.resize(static_cast<size_t>(config.order));

  // Unpacks a context key back into token ids (needed for lower-order
  // lookups during table construction).
  auto unpack = [](uint64_t key) {
    const int len = static_cast<int>(key >> 56);
    Tokens ctx(static_cast<size_t>(len));
    for (int i = 0; i < len; ++i) {
      ctx[static_cast<size_t>(i)] =
          static_cast<TokenId>((key >> (8 * i)) & 0xff);
    }
    return ctx;
  };

  for (int len = 0; len < config.order; ++len) {
    for (const auto& [key, rc] : counts[static_cast<size_t>(len)]) {
      const Tokens ctx = unpack(key);
      const Tokens lower_ctx(ctx.begin() + (ctx.empty() ? 0 : 1), ctx.end());
      NGramLM::ContextEntry entry;
      const double n_total = static_cast<double>(rc.total);
      const double distinct = static_cast<double>(rc.by_token.size());

      switch (config.smoothing) {
        case Smoothing::kNone: {
          for (const auto& [tok, c] : rc.by_token) {
            entry.logprobs.emplace_back(tok, std::log(c / n_total));
          }
          entry.log_bow = kLogZero;
          break;
        }
        case Smoothing::kAddK: {
          // Dense rows: every vocabulary token gets an explicit entry, so
          // the backoff weight is never consulted.
          const double denom = n_total + config.add_k * v;
          for (TokenId tok = 0; tok < v; ++tok) {
            auto it = rc.by_token.find(tok);
            const double c = it == rc.by_token.end()
                                 ? 0.0
                                 : static_cast<double>(it->second);
            entry.logprobs.emplace_back(
                tok, std::log((c + config.add_k) / denom));
          }
          entry.log_bow = kLogZero;
          break;
        }
        case Smoothing::kAbsoluteDiscount: {
          // Interpolated form; in backoff-table terms the interpolation
          // weight lambda is exactly the backoff weight.
          const double d = config.discount;
          const double lambda = d * distinct / n_total;
          if (len == 0) {
            const double unif = 1.0 / static_cast<double>(v);
            for (TokenId tok = 0; tok < v; ++tok) {
              auto it = rc.by_token.find(tok);
              const double c = it == rc.by_token.end()
                                   ? 0.0
                                   : static_cast<double>(it->second);
              const double p =
                  std::max(c - d, 0.0) / n_total + lambda * unif;
              entry.logprobs.emplace_back(tok, std::log(p));
            }
            entry.log_bow = kLogZero;  // dense
          } else {
            for (const auto& [tok, c] : rc.by_token) {
              const double p_low =
                  std::exp(lm.logprob_token(lower_ctx, tok));
              const double p =
                  (static_cast<double>(c) - d) / n_total + lambda * p_low;
              entry.logprobs.emplace_back(tok, std::log(p));
            }
            entry.log_bow = std::log(lambda);
          }
          break;
        }
      }
      lm.levels_[static_cast<size_t>(len)].emplace(key, std::move(entry));
    }
  }
  return lm;
}

double lm_logprob(const NGramLM& lm, const std::vector<std::string>& tokens) {
  Tokens ids;
  ids.reserve(tokens.size());
  for (const auto& t : tokens) ids.push_back(lm.vocab().id_or_unk(t));
  return lm.sequence_logprob(ids);
}

double perplexity(const NGramLM& lm, const Sentences& corpus) {
  if (corpus.empty()) throw Error("perplexity: zero total tokens");
  // Neumaier summation plus an all-equal fast path keeps the uniform-model
  // identity ppl == |V| within a couple of ulps regardless of corpus size.
  double sum = 0.0, comp = 0.0;
  double first = 0.0;
  bool all_equal = true;
  long long events = 0;
  for (const auto& sent : corpus) {
    Tokens ids;
    ids.reserve(sent.size());
    for (const auto& t : sent) ids.push_back(lm.vocab().id_or_unk(t));
    Tokens context;
    for (size_t u = 0; u <= ids.size(); ++u) {
      const TokenId tok = u < ids.size() ? ids[u] : Vocabulary::kEos;
      const double lp = lm.logprob_token(context, tok);
      if (events == 0) {
        first = lp;
      } else if (lp != first) {
        all_equal = false;
      }
      const double t = sum + lp;
      if (std::abs(sum) >= std::abs(lp)) {
        comp += (sum - t) + lp;
      } else {
        comp += (lp - t) + sum;
      }
      sum = t;
      ++events;
      if (u < ids.size()) context.push_back(tok);
    }
  }
  const double mean =
      all_equal ? first : (sum + comp) / static_cast<double>(events);
  return std::exp(-mean);
}

std::vector<DegradedLM> degrade_lm(const Sentences& text,
                                   const std::vector<DegradeLevel>& levels,
                                   const NGramConfig& base_config,
                                   const Sentences& heldout) {
  if (levels.size() < 3) {
    throw ConfigError("degrade_lm: at least 3 levels required");
  }
  for (size_t i = 0; i < levels.size(); ++i) {
    if (levels[i].fraction <= 0.0 || levels[i].fraction > 1.0) {
      throw ConfigError("degrade_lm: fraction must lie in (0, 1]");
    }
    for (size_t j = i + 1; j < levels.size(); ++j) {
      if (levels[i] == levels[j]) {
        throw ConfigError("degrade_lm: duplicate level (ladder must be strict)");
      }
    }
  }
  // A shared vocabulary keeps held-out perplexities comparable.
  const Vocabulary vocab = build_vocab(text, base_config.include_unk);

  std::vector<DegradedLM> out;
  for (const auto& level : levels) {
    const size_t n = static_cast<size_t>(
        std::floor(level.fraction * static_cast<double>(text.size())));
    if (n == 0) throw ConfigError("degrade_lm: level selects zero sentences");
    Sentences subset(text.begin(), text.begin() + static_cast<long>(n));
    NGramConfig cfg = base_config;
    cfg.order = level.order;
    DegradedLM d;
    d.level = level;
    d.lm = train_ngram(subset, cfg, &vocab);
    d.heldout_perplexity = perplexity(d.lm, heldout);
    out.push_back(std::move(d));
  }
  for (size_t i = 1; i < out.size(); ++i) {
    if (!(out[i].heldout_perplexity > out[i - 1].heldout_perplexity)) {
      std::ostringstream msg;
      msg << "degrade_lm: ladder not strictly increasing ("
          << out[i - 1].heldout_perplexity << " then "
          << out[i].heldout_perplexity << ")";
      throw StageError(msg.str());
    }
  }
  return out;
}

double context_prob_sum(const NGramLM& lm, const Tokens& context) {
  double sum = 0.0;
  for (TokenId tok = 0; tok < lm.vocab().size(); ++tok) {
    const double lp = lm.logprob_token(context, tok);
    if (lp != kLogZero) sum += std::exp(lp);
  }
  return sum;
}

const std::vector<double>& LmStepScorer::step(const Tokens& context) {
  const int len =
      std::min<int>(static_cast<int>(context.size()), lm_->order() - 1);
  const uint64_t key = NGramLM::pack_context(
      context.data() + (context.size() - static_cast<size_t>(len)), len);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  std::vector<double> dist(static_cast<size_t>(lm_->vocab().size()));
  lm_->step_distribution(context, dist.data());
  return cache_.emplace(key, std::move(dist)).first->second;
}

NGramLM NGramLM::uniform(const Vocabulary& vocab) {
  NGramLM lm;
  lm.vocab_ = vocab;
  lm.order_ = 1;
  lm.config_.order = 1;
  lm.config_.smoothing = Smoothing::kAddK;
  lm.levels_.resize(1);
  ContextEntry entry;
  const double lp = -std::log(static_cast<double>(vocab.size()));
  for (TokenId tok = 0; tok < vocab.size(); ++tok) {
    entry.logprobs.emplace_back(tok, lp);
  }
  entry.log_bow = kLogZero;
  lm.levels_[0].emplace(pack_context(nullptr, 0), std::move(entry));
  return lm;
}

std::string NGramLM::serialize() const {
  std::ostringstream out;
  out << "selftrain-ngram-v1\n";
  out << "order " << order_ << "\n";
  out << "smoothing " << config_.smoothing_name() << " "
      << fmt_hex(config_.smoothing == Smoothing::kAddK ? config_.add_k
                                                       : config_.discount)
      << "\n";
  out << "vocab " << vocab_.size() << "\n";
  for (const auto& tok : vocab_.tokens()) out << tok << "\n";

  size_t n_lines = 0;
  for (const auto& level : levels_) {
    for (const auto& [key, entry] : level) {
      (void)key;
      n_lines += entry.logprobs.size();
    }
  }
  out << "ngrams " << n_lines << "\n";
  for (const auto& level : levels_) {
    std::vector<uint64_t> keys;
    keys.reserve(level.size());
    for (const auto& [key, entry] : level) {
      (void)entry;
      keys.push_back(key);
    }
    std::sort(keys.begin(), keys.end());
    for (uint64_t key : keys) {
      const ContextEntry& entry = level.at(key);
      const int len = static_cast<int>(key >> 56);
      std::vector<std::string> ctx_toks;
      for (int i = 0; i < len; ++i) {
        ctx_toks.push_back(
            vocab_.token(static_cast<TokenId>((key >> (8 * i)) & 0xff)));
      }
      const std::string ctx = join(ctx_toks, " ");
      for (const auto& [tok, lp] : entry.logprobs) {
        out << ctx << "\t" << vocab_.token(tok) << "\t" << fmt_hex(lp)
            << "\t" << fmt_hex(entry.log_bow) << "\n";
      }
    }
  }
  return out.str();
}

NGramLM NGramLM::deserialize(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  auto next_line = [&]() {
    if (!std::getline(in, line)) throw Error("lm file truncated");
    return line;
  };
  if (next_line() != "selftrain-ngram-v1") {
    throw Error("lm file: bad version tag");
  }
  NGramLM lm;
  {
    auto parts = split_ws(next_line());
    if (parts.size() != 2 || parts[0] != "order") throw Error("lm file: order");
    lm.order_ = std::stoi(parts[1]);
  }
  {
    auto parts = split_ws(next_line());
    if (parts.size() != 3 || parts[0] != "smoothing") {
      throw Error("lm file: smoothing");
    }
    if (parts[1] == "none") {
      lm.config_.smoothing = Smoothing::kNone;
    } else if (parts[1] == "add_k") {
      lm.config_.smoothing = Smoothing::kAddK;
      lm.config_.add_k = parse_hex(parts[2]);
    } else if (parts[1] == "absolute_discount") {
      lm.config_.smoothing = Smoothing::kAbsoluteDiscount;
      lm.config_.discount = parse_hex(parts[2]);
    } else {
      throw Error("lm file: unknown smoothing " + parts[1]);
    }
    lm.config_.order = lm.order_;
  }
  int vocab_size = 0;
  {
    auto parts = split_ws(next_line());
    if (parts.size() != 2 || parts[0] != "vocab") throw Error("lm file: vocab");
    vocab_size = std::stoi(parts[1]);
  }
  std::vector<std::string> toks;
  for (int i = 0; i < vocab_size; ++i) toks.push_back(next_line());
  if (toks.empty() || toks[0] != "<eos>") throw Error("lm file: bad vocab");
  const bool with_unk = toks.size() > 1 && toks[1] == "<unk>";
  std::vector<std::string> entries(toks.begin() + (with_unk ? 2 : 1),
                                   toks.end());
  lm.vocab_ = Vocabulary(entries, with_unk);
  size_t n_lines = 0;
  {
    auto parts = split_ws(next_line());
    if (parts.size() != 2 || parts[0] != "ngrams") throw Error("lm file: ngrams");
    n_lines = std::stoul(parts[1]);
  }
  lm.levels_.resize(static_cast<size_t>(lm.order_));
  for (size_t i = 0; i < n_lines; ++i) {
    const std::string& l = next_line();
    auto fields = split(l, '\t');
    if (fields.size() != 4) throw Error("lm file: malformed ngram line");
    Tokens ctx;
    for (const auto& t : split_ws(fields[0])) ctx.push_back(lm.vocab_.id(t));
    if (static_cast<int>(ctx.size()) >= lm.order_) {
      throw Error("lm file: context longer than order");
    }
    const TokenId tok = lm.vocab_.id(fields[1]);
    const uint64_t key =
        pack_context(ctx.data(), static_cast<int>(ctx.size()));
    ContextEntry& entry = lm.levels_[ctx.size()][key];
    entry.log_bow = parse_hex(fields[3]);
    entry.logprobs.emplace_back(tok, parse_hex(fields[2]));
  }
  for (auto& level : lm.levels_) {
    for (auto& [key, entry] : level) {
      (void)key;
      std::sort(entry.logprobs.begin(), entry.logprobs.end());
    }
  }
  return lm;
}

void NGramLM::save(const std::string& path) const {
  write_file(path, serialize());
}

NGramLM NGramLM::load(const std::string& path) {
  return deserialize(read_file(path));
}

}  // namespace st
