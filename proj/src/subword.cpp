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

#include "banglakit/subword.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "banglakit/error.hpp"
#include "banglakit/unicode.hpp"

namespace banglakit {
namespace subword {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kUnkPenalty = 10.0;
constexpr double kCountFloor = 1e-12;

double log_add(double x, double y) {
  if (x == kNegInf) return y;
  if (y == kNegInf) return x;
  const double hi = std::max(x, y);
  const double lo = std::min(x, y);
  return hi + std::log1p(std::exp(lo - hi));
}

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

// Unique corpus words with frequencies, first-occurrence order.
struct WordCounts {
  std::vector<std::u32string> words;
  std::vector<std::uint64_t> freqs;
};

WordCounts split_words(const std::vector<std::string>& corpus,
                       bool add_meta_prefix) {
  WordCounts wc;
  std::unordered_map<std::u32string, std::size_t> seen;
  for (const std::string& sentence : corpus) {
    const std::u32string cps = uni::decode_utf8(sentence);
    std::u32string word;
    const auto flush = [&] {
      if (word.empty()) return;
      std::u32string key =
          add_meta_prefix ? std::u32string(1, kMetaSymbol) + word : word;
      auto [it, inserted] = seen.emplace(std::move(key), wc.words.size());
      if (inserted) {
        wc.words.push_back(it->first);
        wc.freqs.push_back(1);
      } else {
        ++wc.freqs[it->second];
      }
      word.clear();
    };
    for (char32_t cp : cps) {
      if (uni::is_space(cp)) {
        flush();
      } else {
        word.push_back(cp);
      }
    }
    flush();
  }
  return wc;
}

struct Node {
  int len;     // piece length in code points
  int id;      // piece id, or unk id
  double lp;   // log-probability (or unknown score)
};

// All vocabulary pieces matching at each start position, plus a
// single-character unknown node where nothing covers the position.
class Lattice {
 public:
  Lattice(const SubwordVocab& vocab,
          const std::unordered_map<std::u32string, int>& index,
          const std::u32string& word, bool allow_unk)
      : n_(static_cast<int>(word.size())), matches_(word.size()) {
    const double unk_lp = vocab.unk_logp();
    for (int i = 0; i < n_; ++i) {
      const int max_len = static_cast<int>(
          std::min<std::size_t>(vocab.max_piece_cps(), word.size() - i));
      bool has_single = false;
      for (int len = 1; len <= max_len; ++len) {
        const auto it = index.find(word.substr(i, len));
        if (it == index.end()) continue;
        matches_[i].push_back({len, it->second, vocab.logp(it->second)});
        if (len == 1) has_single = true;
      }
      if (!has_single) {
        if (!allow_unk) {
          throw TrainError("character not covered by vocab: " +
                           uni::encode_utf8(word[i]));
        }
        matches_[i].push_back({1, vocab.unk_id(), unk_lp});
      }
    }
  }

  int size() const { return n_; }
  const std::vector<Node>& at(int pos) const { return matches_[pos]; }

  // Forward pass; mask_id >= 0 removes that piece from the lattice.
  std::vector<double> forward(int mask_id = -1) const {
    std::vector<double> alpha(n_ + 1, kNegInf);
    alpha[0] = 0.0;
    for (int i = 0; i < n_; ++i) {
      if (alpha[i] == kNegInf) continue;
      for (const Node& node : matches_[i]) {
        if (node.id == mask_id) continue;
        alpha[i + node.len] = log_add(alpha[i + node.len], alpha[i] + node.lp);
      }
    }
    return alpha;
  }

  std::vector<double> backward() const {
    std::vector<double> beta(n_ + 1, kNegInf);
    beta[n_] = 0.0;
    for (int i = n_ - 1; i >= 0; --i) {
      for (const Node& node : matches_[i]) {
        beta[i] = log_add(beta[i], node.lp + beta[i + node.len]);
      }
    }
    return beta;
  }

  // Highest-scoring segmentation.  Suffix DP so ties resolve to fewer
  // pieces, then to the longer piece at the leftmost difference.
  std::vector<Node> viterbi() const {
    std::vector<double> score(n_ + 1, kNegInf);
    std::vector<int> count(n_ + 1, 0);
    std::vector<const Node*> choice(n_, nullptr);
    score[n_] = 0.0;
    for (int i = n_ - 1; i >= 0; --i) {
      for (const Node& node : matches_[i]) {
        if (score[i + node.len] == kNegInf) continue;
        const double s = node.lp + score[i + node.len];
        const int c = 1 + count[i + node.len];
        const Node* cur = choice[i];
        bool better = false;
        if (cur == nullptr || s > score[i]) {
          better = true;
        } else if (s == score[i]) {
          if (c < count[i]) {
            better = true;
          } else if (c == count[i] && node.len > cur->len) {
            better = true;
          }
        }
        if (better) {
          score[i] = s;
          count[i] = c;
          choice[i] = &node;
        }
      }
    }
    std::vector<Node> path;
    for (int i = 0; i < n_;) {
      path.push_back(*choice[i]);
      i += choice[i]->len;
    }
    return path;
  }

 private:
  int n_;
  std::vector<std::vector<Node>> matches_;
};

class VocabIndex {
 public:
  explicit VocabIndex(const SubwordVocab& vocab) {
    for (std::size_t id = 0; id < vocab.size(); ++id) {
      index_.emplace(uni::decode_utf8(vocab.piece(id)), static_cast<int>(id));
    }
  }
  const std::unordered_map<std::u32string, int>& map() const { return index_; }

 private:
  std::unordered_map<std::u32string, int> index_;
};

struct EStepResult {
  std::vector<double> counts;
  double loglik = 0.0;
};

EStepResult e_step(const SubwordVocab& vocab, const WordCounts& wc) {
  const VocabIndex index(vocab);
  EStepResult res;
  res.counts.assign(vocab.size(), 0.0);
  for (std::size_t w = 0; w < wc.words.size(); ++w) {
    const Lattice lattice(vocab, index.map(), wc.words[w], /*allow_unk=*/false);
    const auto alpha = lattice.forward();
    const auto beta = lattice.backward();
    const double log_z = alpha[lattice.size()];
    const double freq = static_cast<double>(wc.freqs[w]);
    res.loglik += freq * log_z;
    for (int i = 0; i < lattice.size(); ++i) {
      for (const Node& node : lattice.at(i)) {
        const double post =
            std::exp(alpha[i] + node.lp + beta[i + node.len] - log_z);
        res.counts[node.id] += freq * post;
      }
    }
  }
  return res;
}

SubwordVocab m_step(const SubwordVocab& vocab, const std::vector<double>& counts) {
  double total = 0.0;
  std::vector<double> floored(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    floored[i] = std::max(counts[i], kCountFloor);
    total += floored[i];
  }
  std::vector<SubwordVocab::Piece> pieces;
  pieces.reserve(vocab.size());
  const double log_total = std::log(total);
  for (std::size_t i = 0; i < vocab.size(); ++i) {
    pieces.emplace_back(vocab.piece(i), std::log(floored[i]) - log_total);
  }
  return SubwordVocab(std::move(pieces));
}

std::pair<SubwordVocab, double> em_step_impl(const SubwordVocab& vocab,
                                             const WordCounts& wc) {
  EStepResult res = e_step(vocab, wc);
  return {m_step(vocab, res.counts), res.loglik};
}

double log_likelihood_impl(const SubwordVocab& vocab, const WordCounts& wc) {
  const VocabIndex index(vocab);
  double ll = 0.0;
  for (std::size_t w = 0; w < wc.words.size(); ++w) {
    const Lattice lattice(vocab, index.map(), wc.words[w], /*allow_unk=*/false);
    ll += static_cast<double>(wc.freqs[w]) * lattice.forward()[lattice.size()];
  }
  return ll;
}

SubwordVocab prune_impl(const SubwordVocab& vocab, const WordCounts& wc,
                        const SubwordTrainConfig& cfg) {
  if (vocab.size() <= cfg.vocab_size) return vocab;

  std::vector<bool> is_single(vocab.size());
  std::size_t n_singles = 0;
  for (std::size_t id = 0; id < vocab.size(); ++id) {
    is_single[id] = uni::code_point_count(vocab.piece(id)) == 1;
    if (is_single[id]) ++n_singles;
  }

  // Exact removal loss: for every multi-character piece appearing in a
  // word's lattice, redo the forward pass with the piece masked.
  const VocabIndex index(vocab);
  std::vector<double> loss(vocab.size(), 0.0);
  for (std::size_t w = 0; w < wc.words.size(); ++w) {
    const Lattice lattice(vocab, index.map(), wc.words[w], /*allow_unk=*/false);
    const double log_z = lattice.forward()[lattice.size()];
    const double freq = static_cast<double>(wc.freqs[w]);
    std::set<int> present;
    for (int i = 0; i < lattice.size(); ++i) {
      for (const Node& node : lattice.at(i)) {
        if (!is_single[node.id]) present.insert(node.id);
      }
    }
    for (int id : present) {
      const double masked = lattice.forward(id)[lattice.size()];
      loss[id] += freq * (log_z - masked);
    }
  }

  std::vector<int> multi;
  for (std::size_t id = 0; id < vocab.size(); ++id) {
    if (!is_single[id]) multi.push_back(static_cast<int>(id));
  }
  std::sort(multi.begin(), multi.end(), [&](int a, int b) {
    if (loss[a] != loss[b]) return loss[a] > loss[b];
    return vocab.piece(a) < vocab.piece(b);
  });

  const std::size_t target_multi =
      cfg.vocab_size > n_singles ? cfg.vocab_size - n_singles : 0;
  std::size_t keep = std::max(
      target_multi,
      static_cast<std::size_t>(cfg.shrink_factor *
                               static_cast<double>(multi.size())));
  keep = std::min(keep, multi.size());

  std::vector<bool> kept(vocab.size(), false);
  for (std::size_t id = 0; id < vocab.size(); ++id) kept[id] = is_single[id];
  for (std::size_t r = 0; r < keep; ++r) kept[multi[r]] = true;

  double log_norm = kNegInf;
  for (std::size_t id = 0; id < vocab.size(); ++id) {
    if (kept[id]) log_norm = log_add(log_norm, vocab.logp(id));
  }
  std::vector<SubwordVocab::Piece> pieces;
  for (std::size_t id = 0; id < vocab.size(); ++id) {
    if (kept[id]) pieces.emplace_back(vocab.piece(id), vocab.logp(id) - log_norm);
  }
  return SubwordVocab(std::move(pieces));
}

SubwordVocab seed_impl(const WordCounts& wc, const SubwordTrainConfig& cfg) {
  if (wc.words.empty()) throw TrainError("empty corpus");

  std::unordered_map<std::u32string, std::uint64_t> freq;
  for (std::size_t w = 0; w < wc.words.size(); ++w) {
    const std::u32string& word = wc.words[w];
    const std::uint64_t f = wc.freqs[w];
    for (std::size_t i = 0; i < word.size(); ++i) {
      const std::size_t max_len =
          std::min(cfg.max_piece_len, word.size() - i);
      for (std::size_t len = 1; len <= max_len; ++len) {
        freq[word.substr(i, len)] += f;
      }
    }
  }

  std::vector<const std::pair<const std::u32string, std::uint64_t>*> ranked;
  ranked.reserve(freq.size());
  for (const auto& kv : freq) ranked.push_back(&kv);
  std::sort(ranked.begin(), ranked.end(), [](const auto* a, const auto* b) {
    const auto score_a = a->second * a->first.size();
    const auto score_b = b->second * b->first.size();
    if (score_a != score_b) return score_a > score_b;
    return a->first < b->first;
  });
  if (ranked.size() > cfg.effective_seed_size()) {
    ranked.resize(cfg.effective_seed_size());
  }

  std::unordered_map<std::u32string, std::uint64_t> selected;
  std::vector<std::u32string> order;
  for (const auto* kv : ranked) {
    selected.emplace(kv->first, kv->second);
    order.push_back(kv->first);
  }
  // Every corpus character must stay encodable.
  std::set<char32_t> charset;
  for (const std::u32string& word : wc.words) {
    for (char32_t cp : word) charset.insert(cp);
  }
  for (char32_t cp : charset) {
    const std::u32string single(1, cp);
    if (selected.count(single)) continue;
    selected.emplace(single, freq.at(single));
    order.push_back(single);
  }

  double total = 0.0;
  for (const std::u32string& p : order) {
    total += static_cast<double>(selected.at(p));
  }
  const double log_total = std::log(total);
  std::vector<SubwordVocab::Piece> pieces;
  pieces.reserve(order.size());
  for (const std::u32string& p : order) {
    pieces.emplace_back(
        uni::encode_utf8(p),
        std::log(static_cast<double>(selected.at(p))) - log_total);
  }
  return SubwordVocab(std::move(pieces));
}

// Encode-side meta handling: each whitespace run becomes a meta symbol
// prefixed to the following word; a leading run marks the first word, a
// trailing run disappears.
std::u32string annotate_for_encode(std::string_view text) {
  const std::u32string cps = uni::decode_utf8(std::string(text));
  std::u32string out;
  out.reserve(cps.size());
  bool pending_space = false;
  for (char32_t cp : cps) {
    if (uni::is_space(cp)) {
      pending_space = true;
      continue;
    }
    if (pending_space) {
      out.push_back(kMetaSymbol);
      pending_space = false;
    }
    out.push_back(cp);
  }
  return out;
}

std::vector<std::pair<std::string, int>> encode_impl(const SubwordVocab& vocab,
                                                     std::string_view text) {
  const std::u32string annotated = annotate_for_encode(text);
  if (annotated.empty()) return {};
  const VocabIndex index(vocab);
  const Lattice lattice(vocab, index.map(), annotated, /*allow_unk=*/true);
  std::vector<std::pair<std::string, int>> out;
  int pos = 0;
  for (const Node& node : lattice.viterbi()) {
    out.emplace_back(uni::encode_utf8(annotated.substr(pos, node.len)),
                     node.id);
    pos += node.len;
  }
  return out;
}

}  // namespace

SubwordVocab::SubwordVocab(std::vector<Piece> pieces)
    : pieces_(std::move(pieces)) {
  index_.reserve(pieces_.size());
  for (std::size_t id = 0; id < pieces_.size(); ++id) {
    const std::string& p = pieces_[id].first;
    if (p.empty()) throw UsageError("empty subword piece");
    if (p.find('\t') != std::string::npos ||
        p.find('\n') != std::string::npos) {
      throw UsageError("subword piece contains tab or newline");
    }
    if (!index_.emplace(p, static_cast<int>(id)).second) {
      throw UsageError("duplicate subword piece: " + p);
    }
    max_piece_cps_ = std::max(max_piece_cps_, uni::code_point_count(p));
  }
}

int SubwordVocab::find(std::string_view piece) const {
  const auto it = index_.find(std::string(piece));
  return it == index_.end() ? -1 : it->second;
}

double SubwordVocab::unk_logp() const {
  double min_lp = 0.0;
  for (const Piece& p : pieces_) min_lp = std::min(min_lp, p.second);
  return min_lp - kUnkPenalty;
}

double SubwordVocab::prob_sum() const {
  double sum = 0.0;
  for (const Piece& p : pieces_) sum += std::exp(p.second);
  return sum;
}

void SubwordVocab::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path);
  out << "#unigram v1 vocab_size=" << pieces_.size() << "\n";
  for (const Piece& p : pieces_) {
    out << p.first << "\t" << format_double(p.second) << "\n";
  }
  if (!out) throw DataError("write failed: " + path);
}

SubwordVocab SubwordVocab::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path);
  std::string header;
  if (!std::getline(in, header)) throw DataError(path + ": empty vocab file");
  std::size_t n = 0;
  if (std::sscanf(header.c_str(), "#unigram v1 vocab_size=%zu", &n) != 1) {
    throw DataError(path + ": bad vocab header: " + header);
  }
  std::vector<Piece> pieces;
  pieces.reserve(n);
  std::string line;
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::getline(in, line)) {
      throw DataError(path + ": truncated vocab file");
    }
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      throw DataError(path + ": malformed vocab line " + std::to_string(i + 2));
    }
    double lp = 0.0;
    const char* begin = line.data() + tab + 1;
    const char* end = line.data() + line.size();
    const auto [ptr, ec] = std::from_chars(begin, end, lp);
    if (ec != std::errc() || ptr != end) {
      throw DataError(path + ": bad log-probability on line " +
                      std::to_string(i + 2));
    }
    pieces.emplace_back(line.substr(0, tab), lp);
  }
  return SubwordVocab(std::move(pieces));
}

SubwordVocab seed_vocab(const std::vector<std::string>& corpus,
                        const SubwordTrainConfig& cfg) {
  return seed_impl(split_words(corpus, /*add_meta_prefix=*/true), cfg);
}

std::pair<SubwordVocab, double> em_step(const SubwordVocab& vocab,
                                        const std::vector<std::string>& corpus) {
  return em_step_impl(vocab, split_words(corpus, /*add_meta_prefix=*/false));
}

SubwordVocab prune(const SubwordVocab& vocab,
                   const std::vector<std::string>& corpus,
                   const SubwordTrainConfig& cfg) {
  return prune_impl(vocab, split_words(corpus, /*add_meta_prefix=*/false), cfg);
}

double corpus_log_likelihood(const SubwordVocab& vocab,
                             const std::vector<std::string>& corpus) {
  return log_likelihood_impl(vocab,
                             split_words(corpus, /*add_meta_prefix=*/false));
}

SubwordVocab train_unigram(const std::vector<std::string>& corpus,
                           const SubwordTrainConfig& cfg) {
  if (cfg.vocab_size == 0) throw TrainError("vocab_size must be positive");
  if (cfg.shrink_factor <= 0.0 || cfg.shrink_factor >= 1.0) {
    throw TrainError("shrink_factor must be in (0, 1)");
  }
  if (cfg.max_piece_len == 0) throw TrainError("max_piece_len must be positive");
  if (cfg.em_iters_per_round < 1) {
    throw TrainError("em_iters_per_round must be positive");
  }

  const WordCounts wc = split_words(corpus, /*add_meta_prefix=*/true);
  if (wc.words.empty()) throw TrainError("empty corpus");

  std::set<char32_t> charset;
  for (const std::u32string& word : wc.words) {
    for (char32_t cp : word) charset.insert(cp);
  }
  if (cfg.vocab_size < charset.size()) {
    throw TrainError("vocab_size " + std::to_string(cfg.vocab_size) +
                     " is below the number of distinct corpus characters " +
                     std::to_string(charset.size()));
  }

  SubwordVocab vocab = seed_impl(wc, cfg);
  while (vocab.size() > cfg.vocab_size) {
    for (int k = 0; k < cfg.em_iters_per_round; ++k) {
      vocab = em_step_impl(vocab, wc).first;
    }
    vocab = prune_impl(vocab, wc, cfg);
  }
  vocab = em_step_impl(vocab, wc).first;

  std::vector<SubwordVocab::Piece> pieces = vocab.pieces();
  std::sort(pieces.begin(), pieces.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  return SubwordVocab(std::move(pieces));
}

std::vector<std::string> encode(const SubwordVocab& vocab,
                                std::string_view text) {
  std::vector<std::string> out;
  for (auto& [piece, id] : encode_impl(vocab, text)) {
    out.push_back(std::move(piece));
  }
  return out;
}

std::vector<int> encode_ids(const SubwordVocab& vocab, std::string_view text) {
  std::vector<int> out;
  for (const auto& [piece, id] : encode_impl(vocab, text)) out.push_back(id);
  return out;
}

std::string decode(const std::vector<std::string>& pieces) {
  std::u32string all;
  for (const std::string& p : pieces) {
    const std::u32string cps = uni::decode_utf8(p);
    all.insert(all.end(), cps.begin(), cps.end());
  }
  std::u32string mapped;
  mapped.reserve(all.size());
  for (char32_t cp : all) mapped.push_back(cp == kMetaSymbol ? U' ' : cp);
  std::size_t start = 0;
  while (start < mapped.size() && mapped[start] == U' ') ++start;
  return uni::encode_utf8(mapped.substr(start));
}

}  // namespace subword
}  // namespace banglakit
