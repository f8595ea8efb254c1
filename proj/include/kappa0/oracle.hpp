#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "kappa0/antichain.hpp"
#include "kappa0/graph.hpp"

namespace kappa0 {

// The oracle enumerates canonical strongly connected sets up to a
// diameter bound and minimizes by brute force. It never extrapolates
// beyond the bound; results are exact for the restricted family only.
struct EnumerationBudget {
  int max_diameter = 0;  // sets satisfy max(S) <= max_diameter, min(S) = 0
  std::optional<std::uint64_t> max_sets;
};

struct EnumerationStats {
  std::uint64_t yielded = 0;
  bool budget_exhausted = false;  // max_sets hit before the family was complete
};

// Yields every canonical strongly connected set with max(S) <= D exactly
// once, ordered by max(S) and then lexicographically by membership.
// The visitor returns false to stop early. Requires max_diameter <= 63
// (sets are packed into 64-bit masks).
EnumerationStats enumerate_sc_sets(const GraphSpec& spec, const EnumerationBudget& budget,
                                   const std::function<bool(const VertexSet&)>& visit);

// Exit-count vectors of the enumerated family without materializing the
// sets; the buffer handed to the visitor is reused between calls.
EnumerationStats enumerate_exit_counts(const GraphSpec& spec, const EnumerationBudget& budget,
                                       const std::function<bool(const CountVec&)>& visit);

struct OracleValue {
  Rat value;
  VertexSet witness;
  std::uint64_t sets_seen = 0;
  bool budget_exhausted = false;
  int diameter_bound = 0;
};

// Minimum of beta over the enumerated family and its first witness in
// enumeration order. Throws when the family is empty under the budget.
OracleValue oracle_kappa0(const GraphSpec& spec, const Weights& weights,
                          const EnumerationBudget& budget);

// Depth-first variant that prunes on partial exit weight and local
// degree feasibility; reaches diameter bounds where the flat
// enumeration is too slow. Same value and tie-breaking as
// oracle_kappa0 wherever both are feasible.
OracleValue oracle_kappa0_dfs(const GraphSpec& spec, const Weights& weights, int max_diameter);

struct FrontElement {
  ExitVector vector;
  VertexSet witness;
};

// Antichain of exit vectors under componentwise dominance, each with a
// canonical strongly connected witness realizing it.
struct ParetoFront {
  std::vector<FrontElement> elements;  // sorted lexicographically by counts

  std::vector<CountVec> count_vectors() const;
};

struct OracleFront {
  ParetoFront front;
  std::uint64_t sets_seen = 0;
  bool budget_exhausted = false;
  int diameter_bound = 0;
};

// Dominance-filtered exit vectors of the whole enumerated family: the
// candidate front at the given diameter bound.
OracleFront oracle_pareto(const GraphSpec& spec, const EnumerationBudget& budget);

}  // namespace kappa0
