#ifndef WHYQA_RANKING_HPP_
#define WHYQA_RANKING_HPP_

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "whyqa/graph.hpp"
#include "whyqa/textprep.hpp"

namespace whyqa {

struct RankingConfig {
  double beta = 0.70;  // back probability: chance of jumping to the prior
  double tolerance = 1e-8;
  int max_iterations = 100;
};

/// Prior bias over graph nodes: 1/|R| on each root word, 0 elsewhere.
struct PriorVector {
  std::vector<double> mass;  // indexed by WordGraph::NodeId
};

/// Row-stochastic random-walk structure. Nodes without incident edges
/// (dangling) follow the prior distribution instead.
struct Transition {
  // Outgoing (target, probability) per source node, normalized by the
  // source's total incident weight.
  std::vector<std::vector<std::pair<std::uint32_t, double>>> rows;
  std::vector<std::uint32_t> dangling;
};

struct RankVector {
  std::vector<double> scores;  // indexed by WordGraph::NodeId, sums to 1
  int iterations_used = 0;
  bool converged = false;
};

/// Throws "no root words" for an empty root set. Roots must be graph nodes.
PriorVector compute_priors(const std::set<Token>& roots, const WordGraph& g);

/// Requires strictly positive edge weights.
Transition make_transition(const WordGraph& g, const PriorVector& priors);

/// Synchronous iteration of the ranking-with-prior update, starting from the
/// priors, until the L1 change drops below tolerance or max_iterations is
/// reached. When iteration_sums is given, the score total after every
/// iteration is appended to it.
RankVector rank_with_prior(const Transition& transition, const PriorVector& priors,
                           const RankingConfig& cfg,
                           std::vector<double>* iteration_sums = nullptr);

/// "token score" lines, descending by score (ties by token), 12 significant
/// digits; for golden-file comparisons.
std::string dump_scores(const WordGraph& g, const RankVector& rr);

}  // namespace whyqa

#endif  // WHYQA_RANKING_HPP_
