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

#include "banglakit/corpus.hpp"

#include "banglakit/text_io.hpp"
#include "banglakit/tokenizer.hpp"

namespace banglakit {

CorpusStats corpus_stats(const std::vector<std::string>& documents) {
  CorpusStats stats;
  for (const std::string& doc : documents) {
    ++stats.documents;
    stats.sentences += sentence_tokenize(doc).size();
    stats.tokens += basic_tokenize(doc).size();
  }
  return stats;
}

CorpusStats corpus_stats_file(const std::string& path) {
  std::vector<std::string> documents;
  for (std::string& line : read_text_lines(path)) {
    if (!line.empty()) documents.push_back(std::move(line));
  }
  return corpus_stats(documents);
}

}  // namespace banglakit
