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

#ifndef BANGLAKIT_CORPUS_HPP_
#define BANGLAKIT_CORPUS_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace banglakit {

struct CorpusStats {
  std::uint64_t documents = 0;
  std::uint64_t sentences = 0;
  std::uint64_t tokens = 0;
};

// Counts documents, sentences (sentence_tokenize), and tokens
// (basic_tokenize), summed across documents.
CorpusStats corpus_stats(const std::vector<std::string>& documents);

// File variant: every nonblank line is one document.  Invalid UTF-8 is
// rejected with its byte offset.
CorpusStats corpus_stats_file(const std::string& path);

}  // namespace banglakit

#endif  // BANGLAKIT_CORPUS_HPP_
