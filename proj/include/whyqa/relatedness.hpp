#ifndef WHYQA_RELATEDNESS_HPP_
#define WHYQA_RELATEDNESS_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "whyqa/textprep.hpp"

namespace whyqa {

using Bigram = std::pair<Token, Token>;

/// Document-frequency tables over a reference corpus, filtered by the
/// within-document "occurs at least twice" rule. All adjacency is counted
/// within sentences, in either order for `adj` (the word graph is
/// undirected) and as written for `big`.
struct PmiStats {
  std::uint64_t n_docs = 0;
  std::uint32_t tokenizer_version = kTokenizerVersion;
  std::uint32_t min_occurrence = 2;

  std::map<Token, std::uint64_t> uni;                          // token occurs >= 2
  std::map<std::pair<Token, Token>, std::uint64_t> adj;        // unordered, first <= second
  std::map<Bigram, std::uint64_t> big;                         // ordered bigram occurs >= 2
  std::map<std::pair<Bigram, Bigram>, std::uint64_t> bigpair;  // unordered pair of bigrams

  std::uint64_t uni_count(const Token& t) const;
  std::uint64_t adj_count(const Token& a, const Token& b) const;
  std::uint64_t big_count(const Bigram& b) const;
  std::uint64_t bigpair_count(const Bigram& a, const Bigram& b) const;

  /// True when the bigram passed the reference-corpus frequency filter.
  bool has_bigram(const Bigram& b) const { return big.count(b) > 0; }
};

/// Counts PmiStats tables over a reference corpus (any supported corpus
/// format). Documents are partitioned across workers and the per-worker
/// counts merged by summation. Throws on an empty corpus.
PmiStats build_stats(const std::string& reference_corpus_path);

/// Tables contributed by a single document; exposed for testing.
PmiStats count_document(const std::string& text);

/// log2(N * CW(t_i,t_j) / (CW(t_i) * CW(t_j))), or nullopt when any count
/// involved is zero. Symmetric in its arguments.
std::optional<double> semantic_pmi(const PmiStats& stats, const Token& t_i,
                                   const Token& t_j);

/// log2(N * CW(B_1,B_2) / (CW(B_1) * CW(B_2))), or nullopt when any count
/// involved is zero. Symmetric in its arguments.
std::optional<double> topical_pmi(const PmiStats& stats, const Bigram& b1,
                                  const Bigram& b2);

/// Stats file round-trip. The file is versioned and bit-exact: saving the
/// loaded stats again reproduces the same bytes.
void save_stats(const PmiStats& stats, const std::string& path);
PmiStats load_stats(const std::string& path);

}  // namespace whyqa

#endif  // WHYQA_RELATEDNESS_HPP_
