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

#ifndef BANGLAKIT_SUBWORD_HPP_
#define BANGLAKIT_SUBWORD_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace banglakit {
namespace subword {

// Word-boundary marker prefixed to word-initial pieces (U+2581).
inline constexpr char32_t kMetaSymbol = U'▁';
inline constexpr std::string_view kMetaSymbolUtf8 = "\xE2\x96\x81";

struct SubwordTrainConfig {
  std::size_t vocab_size = 50000;
  std::size_t seed_size = 0;       // 0 means 8 * vocab_size
  double shrink_factor = 0.75;     // fraction of multi-char pieces kept per round
  std::size_t max_piece_len = 16;  // in code points
  int em_iters_per_round = 2;

  std::size_t effective_seed_size() const {
    return seed_size == 0 ? 8 * vocab_size : seed_size;
  }
};

// Piece table of the unigram language model.  Piece probabilities sum to 1;
// ids are list positions; the id one past the last piece is the unknown
// sentinel used by encode for uncovered characters.
class SubwordVocab {
 public:
  using Piece = std::pair<std::string, double>;  // piece, logp

  SubwordVocab() = default;
  explicit SubwordVocab(std::vector<Piece> pieces);

  std::size_t size() const { return pieces_.size(); }
  const std::vector<Piece>& pieces() const { return pieces_; }
  const std::string& piece(std::size_t id) const { return pieces_[id].first; }
  double logp(std::size_t id) const { return pieces_[id].second; }

  // Piece id, or -1 if absent.
  int find(std::string_view piece) const;
  int unk_id() const { return static_cast<int>(pieces_.size()); }

  // Longest piece in code points.
  std::size_t max_piece_cps() const { return max_piece_cps_; }

  // Score assigned to unknown single-character nodes: 10 below the
  // smallest piece log-probability.
  double unk_logp() const;

  double prob_sum() const;

  // Text format: header "#unigram v1 vocab_size=<n>", then one
  // "piece<TAB>logp" line per piece in id order.  Bit-exact round trip.
  void save(const std::string& path) const;
  static SubwordVocab load(const std::string& path);

 private:
  std::vector<Piece> pieces_;
  std::unordered_map<std::string, int> index_;
  std::size_t max_piece_cps_ = 0;
};

// Seeds training candidates: all substrings of the meta-annotated corpus
// words up to max_piece_len code points, ranked by frequency*length and
// truncated to seed_size, unioned with every corpus character.  Initial
// probabilities are proportional to substring frequency.
SubwordVocab seed_vocab(const std::vector<std::string>& corpus,
                        const SubwordTrainConfig& cfg);

// One EM iteration over the segmentation lattices of the corpus words.
// Returns the re-estimated vocab and the corpus log-likelihood computed
// under the input vocab.  Corpus sentences are split on whitespace; every
// character must be covered by the vocab.
std::pair<SubwordVocab, double> em_step(const SubwordVocab& vocab,
                                        const std::vector<std::string>& corpus);

// Drops the lowest-value multi-character pieces: for each one, the corpus
// log-likelihood loss of removing it (re-segmenting its mass with the
// remaining pieces) is computed exactly; single characters are always kept.
// Returns the input unchanged when already within vocab_size.
SubwordVocab prune(const SubwordVocab& vocab,
                   const std::vector<std::string>& corpus,
                   const SubwordTrainConfig& cfg);

// Full pipeline: seed, then alternate EM and pruning until the target size
// is reached, then one final EM pass.  Pieces are ordered by descending
// log-probability in the result.
SubwordVocab train_unigram(const std::vector<std::string>& corpus,
                           const SubwordTrainConfig& cfg);

// Viterbi segmentation.  Whitespace runs are replaced by the meta symbol
// prefixed to the following word; ties are broken toward fewer pieces, then
// toward the longer piece at the leftmost difference.  Unknown characters
// become single-character pieces with id unk_id().
std::vector<std::string> encode(const SubwordVocab& vocab,
                                std::string_view text);
std::vector<int> encode_ids(const SubwordVocab& vocab, std::string_view text);

// Concatenates pieces, turns each meta symbol into a space, trims the
// leading space.
std::string decode(const std::vector<std::string>& pieces);

// Sum over corpus words of freq * log P(word); same lattice semantics as
// em_step.
double corpus_log_likelihood(const SubwordVocab& vocab,
                             const std::vector<std::string>& corpus);

}  // namespace subword
}  // namespace banglakit

#endif  // BANGLAKIT_SUBWORD_HPP_
