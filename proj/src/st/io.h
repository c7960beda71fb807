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
#ifndef ST_IO_H_
#define ST_IO_H_

#include <cstdint>
#include <string>
#include <vector>

namespace st {

std::string read_file(const std::string& path);
std::vector<std::string> read_lines(const std::string& path);
void write_file(const std::string& path, const std::string& content);
void append_file(const std::string& path, const std::string& content);
bool file_exists(const std::string& path);
void make_dirs(const std::string& path);
std::string path_join(const std::string& a, const std::string& b);

std::vector<std::string> split(const std::string& s, char sep);
std::vector<std::string> split_ws(const std::string& s);
std::string join(const std::vector<std::string>& parts,
                 const std::string& sep);
std::string strip(const std::string& s);

// Fixed-precision decimal formatting for reports; locale independent.
std::string fmt_double(double x, int precision = 4);
// Bit-exact round trip via hexfloat; used by model and LM files.
std::string fmt_hex(double x);
double parse_hex(const std::string& s);

}  // namespace st

#endif  // ST_IO_H_
