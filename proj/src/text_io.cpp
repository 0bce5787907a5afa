// Copyright 2026 The Banglakit Authors
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

#include "banglakit/text_io.hpp"

#include <fstream>
#include <istream>
#include <sstream>

#include "banglakit/error.hpp"
#include "banglakit/unicode.hpp"

namespace banglakit {
namespace {

std::vector<std::string> split_validate(const std::string& content,
                                        const std::string& name) {
  std::u32string decoded;
  std::size_t bad = 0;
  if (!uni::try_decode_utf8(content, &decoded, &bad)) {
    throw DataError(name + ": invalid UTF-8 at byte offset " +
                    std::to_string(bad));
  }
  std::vector<std::string> lines;
  std::string line;
  for (std::size_t i = 0; i < content.size(); ++i) {
    const char c = content[i];
    if (c == '\n') {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      lines.push_back(uni::nfc(line));
      line.clear();
    } else {
      line.push_back(c);
    }
  }
  if (!line.empty()) {
    if (line.back() == '\r') line.pop_back();
    lines.push_back(uni::nfc(line));
  }
  return lines;
}

}  // namespace

std::vector<std::string> read_text_lines(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return split_validate(buf.str(), path);
}

std::vector<std::string> read_text_lines(std::istream& in,
                                         const std::string& name) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return split_validate(buf.str(), name);
}

std::string clean_text(const std::string& text, const std::string& name) {
  std::u32string decoded;
  std::size_t bad = 0;
  if (!uni::try_decode_utf8(text, &decoded, &bad)) {
    throw DataError(name + ": invalid UTF-8 at byte offset " +
                    std::to_string(bad));
  }
  return uni::encode_utf8(uni::nfc(decoded));
}

}  // namespace banglakit
