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

#include "banglakit/lexicon.hpp"

#include <cstdlib>

#include "banglakit/error.hpp"
#include "banglakit/text_io.hpp"
#include "banglakit/unicode.hpp"

#ifndef BANGLAKIT_DATA_DIR
#define BANGLAKIT_DATA_DIR "data"
#endif

namespace banglakit {
namespace {

std::string data_dir() {
  if (const char* env = std::getenv("BANGLAKIT_DATA")) return env;
  return BANGLAKIT_DATA_DIR;
}

const char* file_name(LexiconKind kind) {
  switch (kind) {
    case LexiconKind::kStopwords:
      return "stopwords.txt";
    case LexiconKind::kLetters:
      return "letters.txt";
    case LexiconKind::kPunctuation:
      return "punctuation.txt";
  }
  return "";
}

void require_kind(const Lexicon& lex, LexiconKind kind, const char* op) {
  if (lex.kind() != kind) {
    throw UsageError(std::string(op) + " requires a " +
                     std::string(lexicon_kind_name(kind)) +
                     " lexicon, got " +
                     std::string(lexicon_kind_name(lex.kind())));
  }
}

}  // namespace

std::string_view lexicon_kind_name(LexiconKind kind) {
  switch (kind) {
    case LexiconKind::kStopwords:
      return "stopwords";
    case LexiconKind::kLetters:
      return "letters";
    case LexiconKind::kPunctuation:
      return "punctuation";
  }
  return "?";
}

Lexicon::Lexicon(LexiconKind kind, std::vector<std::string> entries)
    : kind_(kind) {
  entries_.reserve(entries.size());
  for (std::string& e : entries) {
    std::string norm = uni::nfc(e);
    if (norm.empty()) continue;
    if (index_.insert(norm).second) entries_.push_back(std::move(norm));
  }
}

bool Lexicon::contains(std::string_view entry) const {
  return index_.count(std::string(entry)) != 0;
}

Lexicon load_lexicon_file(LexiconKind kind, const std::string& path) {
  std::vector<std::string> lines;
  try {
    lines = read_text_lines(path);
  } catch (const DataError& e) {
    throw DataError("lexicon " + std::string(lexicon_kind_name(kind)) + ": " +
                    e.what());
  }
  std::vector<std::string> entries;
  for (const std::string& line : lines) {
    if (line.empty() || line[0] == '#') continue;
    entries.push_back(line);
  }
  Lexicon lex(kind, std::move(entries));
  if (lex.size() == 0) {
    throw DataError("lexicon file " + path + " has no entries");
  }
  if (kind == LexiconKind::kLetters) {
    for (const std::string& e : lex.entries()) {
      for (char32_t cp : uni::decode_utf8(e)) {
        if (!uni::is_bengali(cp)) {
          throw DataError("lexicon file " + path +
                          ": letters entry outside the Bengali block: " + e);
        }
      }
    }
  }
  return lex;
}

Lexicon load_lexicon(LexiconKind kind) {
  return load_lexicon_file(kind, data_dir() + "/" + file_name(kind));
}

std::vector<std::string> remove_stopwords(const std::vector<std::string>& tokens,
                                          const Lexicon& lex) {
  require_kind(lex, LexiconKind::kStopwords, "remove_stopwords");
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const std::string& t : tokens) {
    if (!lex.contains(t)) out.push_back(t);
  }
  return out;
}

std::vector<std::string> remove_punctuation(
    const std::vector<std::string>& tokens, const Lexicon& lex) {
  require_kind(lex, LexiconKind::kPunctuation, "remove_punctuation");
  // Single-code-point lexicon entries define the punctuation alphabet; a
  // token is dropped when all of its characters are in that alphabet.
  std::unordered_set<char32_t> alphabet;
  for (const std::string& e : lex.entries()) {
    const std::u32string cps = uni::decode_utf8(e);
    if (cps.size() == 1) alphabet.insert(cps[0]);
  }
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const std::string& t : tokens) {
    if (t.empty() || lex.contains(t)) continue;
    bool all_punct = true;
    for (char32_t cp : uni::decode_utf8(t)) {
      if (alphabet.count(cp) == 0) {
        all_punct = false;
        break;
      }
    }
    if (!all_punct) out.push_back(t);
  }
  return out;
}

std::vector<std::string> remove_foreign_words(
    const std::vector<std::string>& tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const std::string& t : tokens) {
    bool keep = true;
    for (char32_t cp : uni::decode_utf8(t)) {
      if (uni::is_alpha(cp) && !uni::is_bengali(cp)) {
        keep = false;
        break;
      }
    }
    if (keep) out.push_back(t);
  }
  return out;
}

}  // namespace banglakit
