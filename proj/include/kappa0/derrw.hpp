#pragma once

#include <cstdint>
#include <vector>

#include "kappa0/graph.hpp"

namespace kappa0 {

// Exact probability that a directed-edge-reinforced walk follows the
// given vertex path: at each step the walk picks an outgoing edge with
// probability proportional to weight, and every traversed edge's weight
// grows by 1. The empty or single-vertex path has probability 1.
Rat path_probability_derrw(const GraphSpec& spec, const Weights& weights,
                           const std::vector<int>& path);

// Annealed probability of the same path when each site draws its
// transition vector once from a Dirichlet distribution with the weights
// as parameters: a product of rising-factorial moments per site. Agrees
// exactly with the reinforced law.
Rat path_probability_annealed(const GraphSpec& spec, const Weights& weights,
                              const std::vector<int>& path);

struct VisitStats {
  std::vector<std::uint64_t> samples;  // visits to 0 before first exit, one per walk
  std::uint64_t cap = 0;               // step budget per walk
  std::uint64_t censored = 0;          // walks that hit the cap before exiting
};

// Runs independent reinforced walks from 0 and records how often each
// one visits 0 before first leaving S (the start counts). Each walk
// draws its randomness from a substream of (seed, walk index), so the
// result does not depend on scheduling. Honors KAPPA0_THREADS.
VisitStats estimate_visits(const GraphSpec& spec, const Weights& weights, const VertexSet& set,
                           std::uint64_t n_walks, std::uint64_t cap, std::uint64_t seed);

struct SurvivalReport {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> survival;  // (k, #{N > k})
  double slope = 0.0;  // log-log regression slope over the nonzero survival counts
  double mean = 0.0;
};

// Survival counts at k = 2^4 .. 2^12 and the slope of log count against
// log k. Tail index beta_S < 1 shows up as slope above -1 (infinite
// expected visits), beta_S > 1 as slope below -1.
SurvivalReport survival_report(const VisitStats& stats);

}  // namespace kappa0
