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

#ifndef BANGLAKIT_LEXICON_HPP_
#define BANGLAKIT_LEXICON_HPP_

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace banglakit {

enum class LexiconKind { kStopwords, kLetters, kPunctuation };

std::string_view lexicon_kind_name(LexiconKind kind);

// A named set of Bengali strings with set-membership lookup.  Entries are
// NFC-normalized, deduplicated, nonempty, and keep file order.
class Lexicon {
 public:
  Lexicon(LexiconKind kind, std::vector<std::string> entries);

  LexiconKind kind() const { return kind_; }
  const std::vector<std::string>& entries() const { return entries_; }
  bool contains(std::string_view entry) const;
  std::size_t size() const { return entries_.size(); }

 private:
  LexiconKind kind_;
  std::vector<std::string> entries_;
  std::unordered_set<std::string> index_;
};

// Loads the lexicon shipped under the toolkit's data directory
// (data/stopwords.txt, data/letters.txt, data/punctuation.txt).  The
// directory is resolved from $BANGLAKIT_DATA if set, else the build-time
// default.  File format: one entry per line, UTF-8, '#' comment lines and
// blank lines ignored.
Lexicon load_lexicon(LexiconKind kind);

// Loads a lexicon from an explicit file.
Lexicon load_lexicon_file(LexiconKind kind, const std::string& path);

// Order-preserving filter dropping tokens found in the stopword lexicon.
// Requires lex.kind() == kStopwords.
std::vector<std::string> remove_stopwords(const std::vector<std::string>& tokens,
                                          const Lexicon& lex);

// Order-preserving filter dropping tokens made up entirely of punctuation
// characters from the lexicon.  Mixed tokens such as "ভাত?" are kept;
// splitting is the tokenizer's job.  Requires lex.kind() == kPunctuation.
std::vector<std::string> remove_punctuation(
    const std::vector<std::string>& tokens, const Lexicon& lex);

// Keeps a token iff every alphabetic character in it lies in the Bengali
// block U+0980..U+09FF.  Digits (Bengali or ASCII) and punctuation are
// permitted inside kept tokens.
std::vector<std::string> remove_foreign_words(
    const std::vector<std::string>& tokens);

}  // namespace banglakit

#endif  // BANGLAKIT_LEXICON_HPP_
