#pragma once

#include <cstdint>
#include <optional>

#include "kappa0/graph.hpp"
#include "kappa0/oracle.hpp"

namespace kappa0 {

// The solver scans candidate sets left to right and abstracts every
// partially decided set into a finite frontier state: window membership
// over the last max(L, R) positions, the reachability relation among
// window members through decided vertices, and retirement obligations
// for members that left the window. Exit weight is charged the moment
// both endpoints of an exit edge are decided, so accrued cost never
// decreases and best-first search is exact. Termination needs no
// diameter bound: equal states are merged, and in symbolic mode the
// per-state label antichains must stabilize.
struct SolveOptions {
  // Numeric mode: cap on distinct frontier states; symbolic mode: cap
  // on stored cost labels. On overflow the solver reports its best
  // bound instead of failing.
  std::uint64_t max_states = 4'000'000;
};

struct NumericResult {
  Rat value;           // exact kappa0, or the best upper bound when inexact
  VertexSet witness;   // canonical set attaining `value`
  bool exact = true;
  std::uint64_t states_explored = 0;
  std::optional<Rat> gap;  // value minus the proven lower bound, when inexact
};

NumericResult solve_numeric(const GraphSpec& spec, const Weights& weights,
                            const SolveOptions& options = {});

struct SymbolicResult {
  ParetoFront front;  // complete when exact
  bool exact = true;
  std::uint64_t states_explored = 0;
};

// All Pareto-minimal exit vectors realizable by finite strongly
// connected sets, independent of any weight assignment.
SymbolicResult solve_symbolic(const GraphSpec& spec, const SolveOptions& options = {});

// c_plus + c_minus: the weight exiting the rightmost and leftmost
// points; never above solve_numeric's value.
Rat lower_bound(const GraphSpec& spec, const Weights& weights);

}  // namespace kappa0
