#pragma once

#include <cstdint>
#include <vector>

#include "kappa0/graph.hpp"

namespace kappa0 {

using CountVec = std::vector<std::int64_t>;

// a <= b componentwise
bool leq(const CountVec& a, const CountVec& b);
// a <= b and a != b
bool strictly_dominates(const CountVec& a, const CountVec& b);

// Keeps exactly the elements that are not strictly dominated by any
// other element, collapsing duplicates. Output is sorted
// lexicographically, which makes the result independent of input order
// and the operation idempotent.
std::vector<CountVec> minimal_filter(std::vector<CountVec> vectors);
std::vector<ExitVector> minimal_filter(std::vector<ExitVector> vectors);

// Minimal-element store used by the label-correcting solver: insert
// keeps the payload set an antichain under componentwise dominance.
class AntichainStore {
 public:
  // Returns false when v is dominated by (or equal to) a stored vector.
  // Otherwise stores (v, payload) and drops everything v dominates.
  bool insert(const CountVec& v, std::uint64_t payload);

  const std::vector<CountVec>& vectors() const { return vectors_; }
  const std::vector<std::uint64_t>& payloads() const { return payloads_; }
  std::size_t size() const { return vectors_.size(); }

 private:
  std::vector<CountVec> vectors_;
  std::vector<std::uint64_t> payloads_;
};

}  // namespace kappa0
