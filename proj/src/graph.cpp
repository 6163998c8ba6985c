#include "whyqa/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>

namespace whyqa {

namespace {

WordGraph::EdgeKey make_key(WordGraph::NodeId u, WordGraph::NodeId v) {
  return u < v ? std::make_pair(u, v) : std::make_pair(v, u);
}

std::string origin_string(std::uint8_t origin) {
  std::string s;
  auto append = [&s](const char* part) {
    if (!s.empty()) s += '+';
    s += part;
  };
  if (origin & kOriginAdjacency) append("adjacency");
  if (origin & kOriginBoost) append("boost");
  if (origin & kOriginTopical) append("topical");
  return s;
}

}  // namespace

WordGraph WordGraph::with_nodes(std::vector<Token> sorted_nodes) {
  WordGraph g;
  g.nodes_ = std::move(sorted_nodes);
  for (NodeId i = 0; i < g.nodes_.size(); ++i) g.index_[g.nodes_[i]] = i;
  return g;
}

std::optional<WordGraph::NodeId> WordGraph::node_id(const Token& t) const {
  auto it = index_.find(t);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const Edge* WordGraph::find_edge(NodeId u, NodeId v) const {
  auto it = edges_.find(make_key(u, v));
  return it == edges_.end() ? nullptr : &it->second;
}

const Edge* WordGraph::find_edge(const Token& u, const Token& v) const {
  auto ui = node_id(u);
  auto vi = node_id(v);
  if (!ui || !vi) return nullptr;
  return find_edge(*ui, *vi);
}

bool WordGraph::has_edge(const Token& u, const Token& v) const {
  return find_edge(u, v) != nullptr;
}

void WordGraph::add_links(NodeId u, NodeId v, std::uint32_t count, std::uint8_t origin) {
  if (u == v) throw std::logic_error("self loops are not allowed");
  Edge& edge = edges_[make_key(u, v)];
  edge.multiplicity += count;
  edge.origin |= origin;
}

void WordGraph::add_topical_weight(NodeId u, NodeId v, double weight) {
  if (u == v) throw std::logic_error("self loops are not allowed");
  Edge& edge = edges_[make_key(u, v)];
  edge.weight += weight;
  edge.origin |= kOriginTopical;
}

void WordGraph::set_weight(const EdgeKey& key, double weight) {
  edges_.at(key).weight = weight;
}

std::vector<double> WordGraph::weighted_degrees() const {
  std::vector<double> degree(nodes_.size(), 0.0);
  for (const auto& [key, edge] : edges_) {
    degree[key.first] += edge.weight;
    degree[key.second] += edge.weight;
  }
  return degree;
}

std::string WordGraph::dump() const {
  std::ostringstream out;
  char weight_buf[64];
  for (const auto& [key, edge] : edges_) {
    std::snprintf(weight_buf, sizeof weight_buf, "%.12g", edge.weight);
    out << nodes_[key.first] << ' ' << nodes_[key.second] << ' '
        << edge.multiplicity << ' ' << weight_buf << ' '
        << origin_string(edge.origin) << '\n';
  }
  return out.str();
}

WordGraph build_word_graph(const SentenceList& doc) {
  std::set<Token> vocab = doc.vocabulary();
  if (vocab.empty()) throw std::runtime_error("empty document");

  WordGraph g = WordGraph::with_nodes({vocab.begin(), vocab.end()});
  for (const auto& sentence : doc.sentences) {
    for (std::size_t i = 0; i + 1 < sentence.size(); ++i) {
      if (sentence[i] == sentence[i + 1]) continue;  // no self loops
      g.add_links(*g.node_id(sentence[i]), *g.node_id(sentence[i + 1]), 1,
                  kOriginAdjacency);
    }
  }
  return g;
}

DocumentBigramTable build_bigram_table(const SentenceList& doc) {
  std::map<Bigram, DocumentBigramEntry> by_bigram;
  std::size_t position = 0;
  for (const auto& sentence : doc.sentences) {
    for (std::size_t i = 0; i + 1 < sentence.size(); ++i, ++position) {
      Bigram bigram{sentence[i], sentence[i + 1]};
      auto [it, inserted] = by_bigram.try_emplace(bigram);
      if (inserted) {
        it->second.bigram = bigram;
        it->second.first_position = position;
      }
      ++it->second.frequency;
    }
    if (!sentence.empty()) ++position;  // last token of the sentence
  }

  DocumentBigramTable table;
  table.entries.reserve(by_bigram.size());
  for (auto& [bigram, entry] : by_bigram) table.entries.push_back(entry);
  std::sort(table.entries.begin(), table.entries.end(),
            [](const DocumentBigramEntry& a, const DocumentBigramEntry& b) {
              return a.first_position < b.first_position;
            });
  return table;
}

void boost_question_bigrams(WordGraph& g, const std::vector<Token>& question_tokens) {
  std::map<WordGraph::EdgeKey, std::uint32_t> matches;
  for (std::size_t i = 0; i + 1 < question_tokens.size(); ++i) {
    if (question_tokens[i] == question_tokens[i + 1]) continue;
    auto u = g.node_id(question_tokens[i]);
    auto v = g.node_id(question_tokens[i + 1]);
    if (!u || !v) continue;
    if (const Edge* edge = g.find_edge(*u, *v); edge && edge->multiplicity > 0)
      ++matches[make_key(*u, *v)];
  }
  for (const auto& [key, count] : matches)
    g.add_links(key.first, key.second, count, kOriginBoost);
}

void apply_semantic_weights(WordGraph& g, const PmiStats& stats, double epsilon_pmi) {
  for (const auto& [key, edge] : g.edges()) {
    if (edge.multiplicity == 0) continue;
    auto pmi = semantic_pmi(stats, g.token(key.first), g.token(key.second));
    double effective = pmi ? std::max(*pmi, epsilon_pmi) : epsilon_pmi;
    g.set_weight(key, edge.multiplicity * effective);
  }
}

void apply_unit_weights(WordGraph& g) {
  for (const auto& [key, edge] : g.edges()) {
    if (edge.multiplicity == 0) continue;
    g.set_weight(key, static_cast<double>(edge.multiplicity));
  }
}

namespace {

bool share_token(const Bigram& a, const Bigram& b) {
  return a.first == b.first || a.first == b.second || a.second == b.first ||
         a.second == b.second;
}

bool directly_linked(const WordGraph& g, const Bigram& a, const Bigram& b) {
  return g.has_edge(a.first, b.first) || g.has_edge(a.first, b.second) ||
         g.has_edge(a.second, b.first) || g.has_edge(a.second, b.second);
}

}  // namespace

void add_topical_edges(WordGraph& g, const DocumentBigramTable& table,
                       const PmiStats& stats) {
  struct Candidate {
    std::size_t earlier;
    std::size_t later;
    double pmi;
  };

  // Eligibility is decided against the graph as it stands on entry; edges
  // added below never make later pairs ineligible.
  std::vector<Candidate> candidates;
  double pmi_sum = 0.0;
  const auto& entries = table.entries;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = i + 1; j < entries.size(); ++j) {
      const Bigram& earlier = entries[i].bigram;
      const Bigram& later = entries[j].bigram;
      if (share_token(earlier, later)) continue;
      if (directly_linked(g, earlier, later)) continue;
      auto pmi = topical_pmi(stats, earlier, later);
      if (!pmi) continue;
      candidates.push_back({i, j, *pmi});
      pmi_sum += *pmi;
    }
  }
  if (candidates.empty()) return;

  const double average = pmi_sum / static_cast<double>(candidates.size());
  for (const Candidate& c : candidates) {
    if (c.pmi <= average || c.pmi <= 0.0) continue;
    const DocumentBigramEntry& earlier = entries[c.earlier];
    const DocumentBigramEntry& later = entries[c.later];
    const Token& from = earlier.bigram.second;  // second word of earlier bigram
    const Token& to = later.bigram.first;       // first word of later bigram
    if (from == to) continue;
    double weight = c.pmi * std::min(earlier.frequency, later.frequency);
    g.add_topical_weight(*g.node_id(from), *g.node_id(to), weight);
  }
}

}  // namespace whyqa
