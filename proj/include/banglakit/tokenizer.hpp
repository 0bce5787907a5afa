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

#ifndef BANGLAKIT_TOKENIZER_HPP_
#define BANGLAKIT_TOKENIZER_HPP_

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace banglakit {

// Character sets driving the rule tokenizer.  The splitting set holds the
// characters that always become single-character tokens; the terminator set
// (a subset of it) ends sentences.
class TokenizerRules {
 public:
  // Danda, double danda, ASCII .,;:!?()[]{}"'- and the Bengali abbreviation
  // sign U+09FD; sentence terminators danda, double danda, '?', '!', '.'.
  static const TokenizerRules& defaults();

  TokenizerRules(std::u32string splitting, std::u32string terminators);

  bool splits(char32_t cp) const { return splitting_.count(cp) != 0; }
  bool terminates(char32_t cp) const { return terminators_.count(cp) != 0; }

 private:
  std::unordered_set<char32_t> splitting_;
  std::unordered_set<char32_t> terminators_;
};

// Splits on Unicode whitespace and isolates every splitting-punctuation
// character as its own token.  Never returns empty tokens.
std::vector<std::string> basic_tokenize(std::string_view text);
std::vector<std::string> basic_tokenize(std::string_view text,
                                        const TokenizerRules& rules);

// Splits after every sentence terminator; the terminator stays at the end
// of its sentence and surrounding whitespace is trimmed.  Text without a
// terminator is a single sentence.  Never returns empty sentences.
std::vector<std::string> sentence_tokenize(std::string_view text);
std::vector<std::string> sentence_tokenize(std::string_view text,
                                           const TokenizerRules& rules);

}  // namespace banglakit

#endif  // BANGLAKIT_TOKENIZER_HPP_
