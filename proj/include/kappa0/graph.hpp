#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kappa0/rational.hpp"

#include <nlohmann/json_fwd.hpp>

namespace kappa0 {

// Shift-invariant weighted digraph on the integers: there is an edge
// x -> x+i exactly for the offsets i in the support, and its weight
// alpha_i does not depend on x. L and R bound the jumps: the support
// lives in [-L, R] and always contains both -L and R.
class GraphSpec {
 public:
  GraphSpec(int max_left, int max_right, std::vector<int> support);

  int left() const { return left_; }
  int right() const { return right_; }
  const std::vector<int>& support() const { return support_; }
  std::size_t arity() const { return support_.size(); }

  bool has_offset(int i) const;
  // Index of offset i within support(), -1 if absent.
  int offset_index(int i) const;
  bool has_self_loop() const { return has_offset(0); }
  // Width of the scan window used by the solver and the simulator.
  int window_width() const { return left_ > right_ ? left_ : right_; }

  bool operator==(const GraphSpec&) const = default;

 private:
  int left_;
  int right_;
  std::vector<int> support_;  // sorted ascending
};

// Strictly positive weight per support offset.
class Weights {
 public:
  Weights(const GraphSpec& spec, std::vector<Rat> alpha);

  const std::vector<int>& support() const { return support_; }
  const std::vector<Rat>& alpha() const { return alpha_; }
  const Rat& alpha_at(std::size_t support_index) const { return alpha_[support_index]; }
  const Rat& alpha_for_offset(int offset) const;

 private:
  std::vector<int> support_;
  std::vector<Rat> alpha_;
};

// Finite set of integers, kept strictly increasing and nonempty.
class VertexSet {
 public:
  explicit VertexSet(std::vector<int> members);

  const std::vector<int>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  int min() const { return members_.front(); }
  int max() const { return members_.back(); }
  int diameter() const { return max() - min(); }
  bool contains(int v) const;
  bool is_canonical() const { return min() == 0; }
  // Translate so the leftmost vertex is 0.
  VertexSet canonical() const;
  VertexSet shifted(int delta) const;

  bool operator==(const VertexSet&) const = default;
  bool operator<(const VertexSet& other) const { return members_ < other.members_; }

 private:
  std::vector<int> members_;
};

// Exit counts x_i = #{z in S : z+i not in S}, one per support offset.
// x_0 is structurally zero: a self-loop never leaves the set.
struct ExitVector {
  std::vector<int> support;
  std::vector<std::int64_t> counts;

  std::int64_t count_for_offset(int offset) const;
  bool operator==(const ExitVector&) const = default;
};

struct HalfSums {
  Rat c_plus;   // sum of alpha_i over i > 0
  Rat c_minus;  // sum of alpha_i over i < 0
  Rat d_plus;   // sum of i * alpha_i over i > 0
  Rat d_minus;  // sum of |i| * alpha_i over i < 0
};

ExitVector exit_vector(const GraphSpec& spec, const VertexSet& set);

// Total weight of edges leaving the set: sum of counts[i] * alpha_i.
// Throws if the supports of weights and vector disagree.
Rat beta(const Weights& weights, const ExitVector& vector);
Rat beta_of_set(const GraphSpec& spec, const Weights& weights, const VertexSet& set);

// Every ordered pair of distinct vertices must be joined by a directed
// path inside the set; a singleton counts only when it has a self-loop.
bool is_strongly_connected(const GraphSpec& spec, const VertexSet& set);

HalfSums half_sums(const GraphSpec& spec, const Weights& weights);

// Graph-spec file format: {"L": int, "R": int, "alpha": {"<i>": value|null}}.
// Keys of "alpha" define the support; null values (or a mix of absent
// weights) make the spec symbolic-only.
struct SpecFile {
  GraphSpec spec;
  bool has_weights;
  std::vector<Rat> alpha;  // aligned with spec.support() when has_weights

  Weights weights() const;
};

SpecFile spec_from_json(const nlohmann::json& doc);
SpecFile load_spec_file(const std::string& path);
nlohmann::json spec_to_json(const GraphSpec& spec, const Weights* weights);

}  // namespace kappa0
