#ifndef WHYQA_GRAPH_HPP_
#define WHYQA_GRAPH_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "whyqa/relatedness.hpp"
#include "whyqa/textprep.hpp"

namespace whyqa {

enum EdgeOrigin : std::uint8_t {
  kOriginAdjacency = 1,
  kOriginBoost = 2,
  kOriginTopical = 4,
};

struct Edge {
  std::uint32_t multiplicity = 0;  // #links: adjacency plus boost links
  double weight = 0.0;
  std::uint8_t origin = 0;  // EdgeOrigin bits
};

/// Undirected multigraph over the distinct words of one document. One record
/// per unordered node pair; no self loops.
class WordGraph {
 public:
  using NodeId = std::uint32_t;
  using EdgeKey = std::pair<NodeId, NodeId>;  // first < second

  const std::vector<Token>& nodes() const { return nodes_; }
  std::size_t num_nodes() const { return nodes_.size(); }
  const std::map<EdgeKey, Edge>& edges() const { return edges_; }

  std::optional<NodeId> node_id(const Token& t) const;
  const Token& token(NodeId id) const { return nodes_[id]; }

  const Edge* find_edge(NodeId u, NodeId v) const;
  const Edge* find_edge(const Token& u, const Token& v) const;
  bool has_edge(const Token& u, const Token& v) const;

  /// Adds `count` links to the unordered pair; creates the edge on first use.
  void add_links(NodeId u, NodeId v, std::uint32_t count, std::uint8_t origin);
  /// Adds topical weight: merges into the existing edge or creates one.
  void add_topical_weight(NodeId u, NodeId v, double weight);
  void set_weight(const EdgeKey& key, double weight);

  /// Sum of weights incident to each node, indexed by NodeId.
  std::vector<double> weighted_degrees() const;

  /// Plain-text edge list "u v multiplicity weight origin", one line per
  /// edge, sorted lexicographically. Weights use 12 significant digits.
  std::string dump() const;

  static WordGraph with_nodes(std::vector<Token> sorted_nodes);

 private:
  std::vector<Token> nodes_;  // sorted, so NodeId order is lexicographic
  std::map<Token, NodeId> index_;
  std::map<EdgeKey, Edge> edges_;
};

/// Per-document bigram frequencies; entries ordered by first occurrence.
struct DocumentBigramEntry {
  Bigram bigram;
  std::uint32_t frequency = 0;
  std::size_t first_position = 0;  // token offset within the document
};

struct DocumentBigramTable {
  std::vector<DocumentBigramEntry> entries;  // strictly increasing first_position
};

/// One node per distinct token; one link per within-sentence adjacent token
/// pair. Bigrams never cross sentence boundaries. Throws on a tokenless
/// document.
WordGraph build_word_graph(const SentenceList& doc);

/// Ordered bigram frequencies of the document (same adjacency rule as the
/// graph).
DocumentBigramTable build_bigram_table(const SentenceList& doc);

/// Adds boost links for every adjacent question-token pair that already has
/// an adjacency edge in the graph, one link per question occurrence.
void boost_question_bigrams(WordGraph& g, const std::vector<Token>& question_tokens);

/// Edge weight = multiplicity * PMI. Undefined or non-positive PMI falls
/// back to epsilon_pmi, keeping every weight strictly positive.
void apply_semantic_weights(WordGraph& g, const PmiStats& stats, double epsilon_pmi);

/// Edge weight = multiplicity (the PMI-free variant).
void apply_unit_weights(WordGraph& g);

/// Bridges topically related, non-adjacent bigram pairs: for pairs with
/// defined topical PMI strictly above the per-document average (and above
/// zero), links the second word of the earlier bigram to the first word of
/// the later one with weight PMI * min(f(B1), f(B2)).
void add_topical_edges(WordGraph& g, const DocumentBigramTable& table,
                       const PmiStats& stats);

}  // namespace whyqa

#endif  // WHYQA_GRAPH_HPP_
