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

#ifndef BANGLAKIT_TEXT_IO_HPP_
#define BANGLAKIT_TEXT_IO_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace banglakit {

// Reads a whole UTF-8 text file.  Rejects invalid UTF-8 with the byte
// offset; NFC-normalizes.  Trailing '\r' of CRLF lines is stripped.
std::vector<std::string> read_text_lines(const std::string& path);

// Same validation and normalization for an already-open stream (stdin).
std::vector<std::string> read_text_lines(std::istream& in,
                                         const std::string& name);

// Validates and NFC-normalizes a single in-memory string.
std::string clean_text(const std::string& text, const std::string& name);

}  // namespace banglakit

#endif  // BANGLAKIT_TEXT_IO_HPP_
