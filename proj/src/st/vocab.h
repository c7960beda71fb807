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
#ifndef ST_VOCAB_H_
#define ST_VOCAB_H_

#include <string>
#include <unordered_map>
#include <vector>

#include "st/error.h"

namespace st {

using TokenId = int;
using Tokens = std::vector<TokenId>;

// Closed output-token vocabulary shared by the acoustic model, the language
// model and the decoder. EOS is always token 0. UNK (token 1, optional) is
// the out-of-vocabulary sink used on the LM scoring path; the pipeline
// vocabulary always reserves it. BOS is not a token, only a reserved
// embedding row (id == size()).
class Vocabulary {
 public:
  static constexpr TokenId kEos = 0;

  Vocabulary() = default;

  // Builds [<eos>, (<unk>,) entries...]; entries must be distinct and must
  // not collide with the reserved names.
  explicit Vocabulary(const std::vector<std::string>& entries,
                      bool with_unk = true) {
    tokens_ = {"<eos>"};
    if (with_unk) {
      tokens_.push_back("<unk>");
      unk_id_ = 1;
    }
    for (const auto& t : entries) tokens_.push_back(t);
    for (size_t i = 0; i < tokens_.size(); ++i) {
      if (!index_.emplace(tokens_[i], static_cast<TokenId>(i)).second) {
        throw ConfigError("duplicate vocabulary entry: " + tokens_[i]);
      }
    }
  }

  int size() const { return static_cast<int>(tokens_.size()); }
  bool has_unk() const { return unk_id_ >= 0; }
  TokenId unk_id() const { return unk_id_; }
  TokenId bos_embedding_id() const { return size(); }

  const std::string& token(TokenId id) const {
    if (id < 0 || id >= size()) throw Error("token id out of range");
    return tokens_[static_cast<size_t>(id)];
  }

  bool contains(const std::string& t) const { return index_.count(t) > 0; }

  TokenId id(const std::string& t) const {
    auto it = index_.find(t);
    if (it == index_.end()) throw Error("token not in vocabulary: " + t);
    return it->second;
  }

  // OOV-tolerant lookup used by the LM scoring path.
  TokenId id_or_unk(const std::string& t) const {
    auto it = index_.find(t);
    if (it != index_.end()) return it->second;
    if (unk_id_ < 0) throw Error("OOV token and no <unk> reserved: " + t);
    return unk_id_;
  }

  Tokens encode(const std::vector<std::string>& toks) const {
    Tokens out;
    out.reserve(toks.size());
    for (const auto& t : toks) out.push_back(id_or_unk(t));
    return out;
  }

  std::vector<std::string> decode(const Tokens& ids) const {
    std::vector<std::string> out;
    out.reserve(ids.size());
    for (TokenId id : ids) out.push_back(token(id));
    return out;
  }

  const std::vector<std::string>& tokens() const { return tokens_; }

  bool operator==(const Vocabulary& other) const {
    return tokens_ == other.tokens_ && unk_id_ == other.unk_id_;
  }
  bool operator!=(const Vocabulary& other) const { return !(*this == other); }

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, TokenId> index_;
  TokenId unk_id_ = -1;
};

}  // namespace st

#endif  // ST_VOCAB_H_
