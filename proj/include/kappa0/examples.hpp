#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kappa0/graph.hpp"
#include "kappa0/oracle.hpp"

namespace kappa0::examples {

// Built-in example instances exercised by `verify-examples`. Each one
// has a known closed form for kappa0, which the suite checks against
// the solver with exact arithmetic.

GraphSpec example1_spec();            // L = R = 1
GraphSpec example2_spec();            // L = 2, R = 3, support {-2, 3}
GraphSpec example3_spec(int right);   // L = 1, support {-1, 1, R}
GraphSpec example4_spec();            // L = R = 2, full support without 0
GraphSpec example5_spec();            // L = 6, R = 3, support {-6, 2, 3}
GraphSpec example6_spec();            // L = 16, R = 5, support {-16, 2, 5}
GraphSpec example7_spec();            // self-loop: L = R = 2, full support
GraphSpec example9_spec();            // L = R = 2, support {-2, 1, 2}
GraphSpec footnote_spec();            // L = 5, R = 4, support {-5, 3, 4}

Weights example6_weights();           // (1/67, 15/67, 5/67)
Weights example9_weights();           // (1/9, 1/2, 1/9)
Weights footnote_weights();           // (5, 1/10, 5)

// The four candidate minimizers of the example6 instance.
std::vector<VertexSet> example6_candidate_sets();

struct ExampleCheck {
  std::string example;
  std::string check;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  std::string only;                 // id prefix filter, empty = everything
  int claims_diameter = 24;         // exhaustive bound for the example6 claims
  std::uint64_t draws = 100;        // random weight draws per formula identity
  std::uint64_t seed = 12345;
};

// Runs the whole golden suite (examples 1, 2, 3 for R in {2,3,4}, 4, 5,
// 7, 9, then 6) and reports one line per check.
std::vector<ExampleCheck> verify_examples(const VerifyOptions& options = {});

// Structural claims about every strongly connected set of the example6
// spec, checked exhaustively up to the diameter bound:
//   1: x(-16) >= 5                     3: x(5) >= 3
//   2: x(2) = 1  =>  x(-16) >= 8 and x(5) >= 9
//   4: x(5) = 3  =>  x(-16) >= 7 and x(2) >= 8
//   5: x(2) = 2  =>  x(5) >= 5
//   7: x(2) = 2  =>  x(5) + x(-16) >= 17 and x(-16) >= 9
//   8: beta_S >= min over the four candidate sets, any positive weights
//      (sampled); the claim numbering skips 6.
std::vector<ExampleCheck> check_example6_claims(int max_diameter, std::uint64_t weight_draws,
                                                std::uint64_t seed);

}  // namespace kappa0::examples
