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
#ifndef ST_ERROR_H_
#define ST_ERROR_H_

#include <stdexcept>
#include <string>

namespace st {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid configuration or malformed config file. CLI exit code 2.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

// A pipeline stage failed (bad data, divergence, missing artifact).
// CLI exit code 3.
class StageError : public Error {
 public:
  explicit StageError(const std::string& msg) : Error(msg) {}
};

}  // namespace st

#endif  // ST_ERROR_H_
