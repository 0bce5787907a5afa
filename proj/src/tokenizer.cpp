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

#include "banglakit/tokenizer.hpp"

#include "banglakit/error.hpp"
#include "banglakit/unicode.hpp"

namespace banglakit {
namespace {

std::u32string trim(std::u32string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && uni::is_space(s[b])) ++b;
  while (e > b && uni::is_space(s[e - 1])) --e;
  return std::u32string(s.substr(b, e - b));
}

}  // namespace

TokenizerRules::TokenizerRules(std::u32string splitting,
                               std::u32string terminators) {
  for (char32_t cp : splitting) splitting_.insert(cp);
  for (char32_t cp : terminators) {
    if (splitting_.count(cp) == 0) {
      throw UsageError(
          "sentence terminator is not in the splitting set: " +
          uni::encode_utf8(cp));
    }
    terminators_.insert(cp);
  }
}

const TokenizerRules& TokenizerRules::defaults() {
  static const TokenizerRules rules(
      U".,;:!?()[]{}\"'-।॥৽", U"।॥?!.");
  return rules;
}

std::vector<std::string> basic_tokenize(std::string_view text) {
  return basic_tokenize(text, TokenizerRules::defaults());
}

std::vector<std::string> basic_tokenize(std::string_view text,
                                        const TokenizerRules& rules) {
  const std::u32string cps = uni::decode_utf8(text);
  std::vector<std::string> tokens;
  std::string current;
  const auto flush = [&] {
    if (!current.empty()) {
      tokens.push_back(current);
      current.clear();
    }
  };
  for (char32_t cp : cps) {
    if (uni::is_space(cp)) {
      flush();
    } else if (rules.splits(cp)) {
      flush();
      tokens.push_back(uni::encode_utf8(cp));
    } else {
      uni::append_utf8(&current, cp);
    }
  }
  flush();
  return tokens;
}

std::vector<std::string> sentence_tokenize(std::string_view text) {
  return sentence_tokenize(text, TokenizerRules::defaults());
}

std::vector<std::string> sentence_tokenize(std::string_view text,
                                           const TokenizerRules& rules) {
  const std::u32string cps = uni::decode_utf8(text);
  std::vector<std::string> sentences;
  std::u32string current;
  const auto flush = [&] {
    const std::u32string trimmed = trim(current);
    if (!trimmed.empty()) sentences.push_back(uni::encode_utf8(trimmed));
    current.clear();
  };
  for (char32_t cp : cps) {
    current.push_back(cp);
    if (rules.terminates(cp)) flush();
  }
  flush();
  return sentences;
}

}  // namespace banglakit
