#include "kappa0/solver.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <queue>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "internal/scaled_weights.hpp"

namespace kappa0 {

namespace {

using Slots = std::uint32_t;

constexpr int kMaxWindow = 30;
constexpr std::uint32_t kGe2Flag = 1u << 31;
constexpr std::uint32_t kNoState = 0xffffffffu;

inline int lowest_bit(Slots m) { return std::countr_zero(m); }

// Encoded frontier state:
//   word 0          window membership bits (bit j = position frontier-j)
//                   plus the "set has at least two members" flag,
//   words 1..W      reach rows, row j = slots reachable from slot j,
//   then pairs      retirement obligations (reached-by, reaches).
using StateKey = std::vector<std::uint32_t>;

struct KeyHash {
  std::size_t operator()(const StateKey& k) const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (std::uint32_t w : k) {
      h ^= w;
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

// Transition machinery shared by the numeric and the symbolic search.
class FrontierMachine {
 public:
  explicit FrontierMachine(const GraphSpec& spec) : spec_(spec), width_(spec.window_width()) {
    if (width_ > kMaxWindow)
      throw std::invalid_argument("solver supports max(L, R) up to 30");
    for (std::size_t k = 0; k < spec.arity(); ++k) {
      int i = spec.support()[k];
      if (i < 0) negative_.push_back({k, -i});
      if (i > 0) positive_.push_back({k, i});
    }
  }

  int width() const { return width_; }
  const GraphSpec& spec() const { return spec_; }

  StateKey root(std::vector<std::uint8_t>& charges) const {
    charges.clear();
    for (auto [k, depth] : negative_) charges.push_back(static_cast<std::uint8_t>(k));
    StateKey key(1 + static_cast<std::size_t>(width_), 0);
    key[0] = 1u;  // position 0 is a member; no obligations yet
    return key;
  }

  struct Transition {
    bool dead = true;
    StateKey key;
    std::vector<std::uint8_t> charges;  // support indices, one charge each
  };

  // Decide the next position as member (true) or excluded (false).
  Transition apply(const StateKey& state, bool member) const {
    Transition out;
    const Slots old_window = state[0] & ~kGe2Flag;
    const bool ge2 = (state[0] & kGe2Flag) != 0;
    const int W = width_;

    // Workspace over W+1 slots: slot 0 is the newly decided position,
    // slot j+1 holds what used to be slot j.
    Slots members = (old_window << 1) | (member ? 1u : 0u);
    Slots rows[kMaxWindow + 1];
    rows[0] = 0;
    for (int j = 0; j < W; ++j) rows[j + 1] = state[1 + j] << 1;
    std::vector<std::pair<Slots, Slots>> obls;
    for (std::size_t t = 1 + static_cast<std::size_t>(W); t < state.size(); t += 2)
      obls.emplace_back(state[t] << 1, state[t + 1] << 1);

    if (member) {
      for (auto [k, depth] : negative_) {
        if ((members >> depth) & 1u) {
          rows[0] |= 1u << depth;  // edge new -> older member
        } else {
          out.charges.push_back(static_cast<std::uint8_t>(k));  // leftward exit, final now
        }
      }
      for (auto [k, depth] : positive_) {
        if ((members >> depth) & 1u) rows[depth] |= 1u;  // edge older member -> new
      }
    } else {
      for (auto [k, depth] : positive_) {
        if ((members >> depth) & 1u)
          out.charges.push_back(static_cast<std::uint8_t>(k));  // rightward exit, final now
      }
    }

    close_over(members, rows, obls);

    // Retire the slot that falls off the window.
    const Slots retiring = 1u << W;
    const Slots remaining = members & ~retiring;
    if (members & retiring) {
      Slots reached_by = 0;
      for (Slots m = remaining; m != 0; m &= m - 1) {
        int j = lowest_bit(m);
        if (rows[j] & retiring) reached_by |= 1u << j;
      }
      Slots reaches = rows[W] & remaining;
      if (reached_by == 0 || reaches == 0) return out;  // dead: can never rejoin a cycle
      if (reached_by != remaining || reaches != remaining)
        obls.emplace_back(reached_by, reaches);
      // both sides full: the retiree stays connected whenever the
      // surviving members do, so no obligation is recorded
    }
    if (remaining == 0) return out;  // nothing left for the future to attach to

    for (auto it = obls.begin(); it != obls.end();) {
      Slots in = it->first & remaining;
      Slots outm = it->second & remaining;
      if (in == 0 || outm == 0) return out;  // dead
      if (in == remaining && outm == remaining) {
        it = obls.erase(it);
      } else {
        *it = {in, outm};
        ++it;
      }
    }
    std::sort(obls.begin(), obls.end());
    obls.erase(std::unique(obls.begin(), obls.end()), obls.end());

    out.dead = false;
    out.key.resize(1 + static_cast<std::size_t>(W) + 2 * obls.size());
    out.key[0] = remaining | ((ge2 || member) ? kGe2Flag : 0u);
    for (int j = 0; j < W; ++j) out.key[1 + j] = rows[j] & remaining;
    std::size_t t = 1 + static_cast<std::size_t>(W);
    for (auto& [in, outm] : obls) {
      out.key[t++] = in;
      out.key[t++] = outm;
    }
    return out;
  }

  // A state may close exactly when the window members are pairwise
  // mutually reachable (every retired obligation is then wired through
  // them) and the set is not a loop-less singleton.
  bool closable(const StateKey& state) const {
    const Slots members = state[0] & ~kGe2Flag;
    const bool ge2 = (state[0] & kGe2Flag) != 0;
    if (!ge2 && !spec_.has_self_loop()) return false;
    for (Slots m = members; m != 0; m &= m - 1) {
      int j = lowest_bit(m);
      Slots others = members & ~(1u << j);
      if ((state[1 + j] & others) != others) return false;
    }
    return true;
  }

  // Rightward exits of the surviving members into undecided territory;
  // exactly what closing the set right now would charge.
  void flush_counts(const StateKey& state, CountVec& out) const {
    out.assign(spec_.arity(), 0);
    const Slots members = state[0] & ~kGe2Flag;
    for (Slots m = members; m != 0; m &= m - 1) {
      int j = lowest_bit(m);
      for (auto [k, depth] : positive_)
        if (depth > j) ++out[k];
    }
  }

 private:
  // Joint transitive closure: reach rows over member slots, obligation
  // profiles absorbed into them and extended by them, until stable.
  static void close_over(Slots members, Slots* rows, std::vector<std::pair<Slots, Slots>>& obls) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (Slots m = members; m != 0; m &= m - 1) {
        int j = lowest_bit(m);
        Slots grown = rows[j];
        for (Slots b = rows[j]; b != 0; b &= b - 1) grown |= rows[lowest_bit(b)];
        if (grown != rows[j]) {
          rows[j] = grown;
          changed = true;
        }
      }
      for (auto& [in, outm] : obls) {
        Slots nin = in & members;
        for (Slots m = members; m != 0; m &= m - 1) {
          int j = lowest_bit(m);
          if (rows[j] & nin) nin |= 1u << j;
        }
        Slots nout = outm & members;
        for (Slots b = nout; b != 0; b &= b - 1) nout |= rows[lowest_bit(b)] & members;
        for (Slots m = nin; m != 0; m &= m - 1) {
          int j = lowest_bit(m);
          if ((rows[j] | nout) != rows[j]) {
            rows[j] |= nout;
            changed = true;
          }
        }
        if (nin != in || nout != outm) changed = true;
        in = nin;
        outm = nout;
      }
    }
  }

  const GraphSpec& spec_;
  int width_;
  std::vector<std::pair<std::size_t, int>> negative_;  // (support index, |i|)
  std::vector<std::pair<std::size_t, int>> positive_;  // (support index, i)
};

// Interns state keys and hands out dense ids.
class StatePool {
 public:
  std::uint32_t intern(StateKey&& key, bool& created) {
    auto [it, inserted] = ids_.try_emplace(std::move(key), 0);
    if (inserted) {
      it->second = static_cast<std::uint32_t>(keys_.size());
      keys_.push_back(&it->first);
    }
    created = inserted;
    return it->second;
  }

  const StateKey& key(std::uint32_t id) const { return *keys_[id]; }
  std::size_t size() const { return keys_.size(); }

 private:
  std::unordered_map<StateKey, std::uint32_t, KeyHash> ids_;
  std::vector<const StateKey*> keys_;
};

// Decisions along the parent chain spell out the set: position 0 is a
// member, position k follows the k-th decision.
VertexSet reconstruct_witness(const std::vector<std::uint32_t>& parent,
                              const std::vector<std::uint8_t>& decision, std::uint32_t id) {
  std::vector<std::uint8_t> path;
  while (id != 0) {
    path.push_back(decision[id]);
    id = parent[id];
  }
  std::vector<int> members{0};
  int position = 0;
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    ++position;
    if (*it) members.push_back(position);
  }
  return VertexSet(std::move(members));
}

// Cheap strongly connected sets that seed the upper bound: the closed
// walk of L rightward then R leftward jumps always exists, and short
// intervals often beat it.
std::vector<VertexSet> seed_candidates(const GraphSpec& spec) {
  std::vector<VertexSet> out;
  std::vector<int> walk;
  for (int k = 0; k <= spec.left(); ++k) walk.push_back(k * spec.right());
  for (int k = 1; k < spec.right(); ++k)
    walk.push_back(spec.left() * spec.right() - k * spec.left());
  out.emplace_back(std::move(walk));
  if (spec.has_self_loop()) out.emplace_back(std::vector<int>{0});
  int W = spec.window_width();
  for (int n = W; n <= std::min(spec.left() + spec.right() + 2, W + 8); ++n) {
    std::vector<int> interval(static_cast<std::size_t>(n) + 1);
    for (int z = 0; z <= n; ++z) interval[static_cast<std::size_t>(z)] = z;
    VertexSet candidate(std::move(interval));
    if (is_strongly_connected(spec, candidate)) out.push_back(std::move(candidate));
  }
  return out;
}

// Cost arithmetic for the two numeric instantiations.
struct Int64Cost {
  using Value = std::int64_t;
  std::vector<std::int64_t> units;
  Value charge(const std::vector<std::uint8_t>& idxs) const {
    Value v = 0;
    for (auto k : idxs) v += units[k];
    return v;
  }
  Value flush(const CountVec& counts) const {
    Value v = 0;
    for (std::size_t k = 0; k < counts.size(); ++k) v += counts[k] * units[k];
    return v;
  }
};

struct RatCost {
  using Value = Rat;
  std::vector<Rat> units;
  Value charge(const std::vector<std::uint8_t>& idxs) const {
    Value v = 0;
    for (auto k : idxs) v += units[k];
    return v;
  }
  Value flush(const CountVec& counts) const {
    Value v = 0;
    for (std::size_t k = 0; k < counts.size(); ++k) v += Rat(counts[k]) * units[k];
    return v;
  }
};

template <typename Cost>
struct NumericSearchOutcome {
  bool found = false;        // optimum proven (first closable state popped)
  bool complete = false;     // search ran to exhaustion within budget
  typename Cost::Value best{};
  VertexSet witness{std::vector<int>{0}};
  std::uint64_t states_explored = 0;
  typename Cost::Value frontier_bound{};  // least f left unexplored, when aborted
  bool frontier_nonempty = false;
};

// Best-first search with f = accrued + close-flush. The flush term is
// consistent: a member decision grows f by at most the new vertex's own
// rightward mass, an exclusion moves charges from flush to accrued
// one-for-one. Hence the first closable state popped is optimal;
// draining equal-f pops collects the optimal witnesses the search tree
// retains, and the lexicographically smallest is kept.
template <typename Cost>
NumericSearchOutcome<Cost> run_numeric(const FrontierMachine& machine, const Cost& cost,
                                       typename Cost::Value upper_bound,
                                       const SolveOptions& options) {
  using Value = typename Cost::Value;
  NumericSearchOutcome<Cost> out;

  StatePool pool;
  std::vector<Value> g;
  std::vector<std::uint32_t> parent;
  std::vector<std::uint8_t> decision;
  std::vector<char> settled;
  std::vector<Value> flush_of;

  CountVec scratch_counts;

  struct Entry {
    Value f;
    std::uint64_t seq;
    std::uint32_t id;
    bool operator>(const Entry& other) const {
      if (f != other.f) return f > other.f;
      return seq > other.seq;
    }
  };
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> queue;
  std::uint64_t seq = 0;

  auto add_state = [&](StateKey&& key, Value value, std::uint32_t from, std::uint8_t dec) {
    bool created = false;
    std::uint32_t id = pool.intern(std::move(key), created);
    if (created) {
      g.push_back(value);
      parent.push_back(from);
      decision.push_back(dec);
      settled.push_back(0);
      machine.flush_counts(pool.key(id), scratch_counts);
      flush_of.push_back(cost.flush(scratch_counts));
    } else {
      if (settled[id] || !(value < g[id])) return;
      g[id] = value;
      parent[id] = from;
      decision[id] = dec;
    }
    Value f = value + flush_of[id];
    if (f > upper_bound) return;
    queue.push(Entry{f, seq++, id});
  };

  {
    std::vector<std::uint8_t> root_charges;
    StateKey root_key = machine.root(root_charges);
    add_state(std::move(root_key), cost.charge(root_charges), 0, 1);
  }

  Value best_f{};
  bool budget_hit = false;

  while (!queue.empty()) {
    Entry top = queue.top();
    if (out.found && top.f > best_f) break;
    queue.pop();
    std::uint32_t id = top.id;
    if (settled[id]) continue;
    if (!(top.f == g[id] + flush_of[id])) continue;  // stale entry
    settled[id] = 1;
    ++out.states_explored;

    if (machine.closable(pool.key(id))) {
      VertexSet witness = reconstruct_witness(parent, decision, id);
      if (!out.found) {
        out.found = true;
        best_f = top.f;
        out.best = top.f;
        out.witness = witness;
      } else if (top.f == best_f && witness.members() < out.witness.members()) {
        out.witness = witness;
      }
    }

    if (pool.size() >= options.max_states) {
      budget_hit = true;
      break;
    }
    for (int d = 1; d >= 0; --d) {
      auto tr = machine.apply(pool.key(id), d == 1);
      if (tr.dead) continue;
      add_state(std::move(tr.key), g[id] + cost.charge(tr.charges), id,
                static_cast<std::uint8_t>(d));
    }
  }

  out.complete = !budget_hit;
  if (budget_hit && !out.found) {
    while (!queue.empty()) {
      const Entry& top = queue.top();
      if (!settled[top.id] && top.f == g[top.id] + flush_of[top.id]) break;
      queue.pop();
    }
    if (!queue.empty()) {
      out.frontier_nonempty = true;
      out.frontier_bound = queue.top().f;
    }
  }
  return out;
}

}  // namespace

Rat lower_bound(const GraphSpec& spec, const Weights& weights) {
  HalfSums sums = half_sums(spec, weights);
  return sums.c_plus + sums.c_minus;
}

NumericResult solve_numeric(const GraphSpec& spec, const Weights& weights,
                            const SolveOptions& options) {
  FrontierMachine machine(spec);

  // Seed the upper bound with concrete strongly connected sets; the
  // search only ever improves on it, and it doubles as the reported
  // bound if the state budget trips before the optimum is proven.
  Rat seed_value;
  VertexSet seed_witness{std::vector<int>{0}};
  bool have_seed = false;
  for (const VertexSet& candidate : seed_candidates(spec)) {
    Rat b = beta_of_set(spec, weights, candidate);
    if (!have_seed || b < seed_value) {
      have_seed = true;
      seed_value = b;
      seed_witness = candidate;
    }
  }
  if (!have_seed) throw std::runtime_error("no strongly connected seed set found");

  internal::ScaledWeights scaled = internal::scale_weights(weights);
  NumericResult result{seed_value, seed_witness, true, 0, std::nullopt};
  auto finish = [&](const auto& outcome, auto to_rat) {
    result.states_explored = outcome.states_explored;
    if (outcome.found) {
      Rat found_value = to_rat(outcome.best);
      if (found_value <= result.value) {
        result.value = found_value;
        result.witness = outcome.witness;
      }
      result.exact = true;  // first pop proves the optimum even if ties were cut off
    } else {
      result.exact = outcome.complete;
      if (!result.exact) {
        Rat bound = outcome.frontier_nonempty
                        ? std::min(to_rat(outcome.frontier_bound), result.value)
                        : result.value;
        result.gap = result.value - bound;
      }
    }
  };

  if (scaled.fits64) {
    Int64Cost cost;
    cost.units = scaled.units;
    Rat scaled_ub = seed_value * Rat(scaled.denom);
    std::int64_t ub = boost::multiprecision::numerator(scaled_ub).convert_to<std::int64_t>();
    auto outcome = run_numeric(machine, cost, ub, options);
    finish(outcome, [&](std::int64_t v) { return scaled.to_rat(v); });
  } else {
    RatCost cost;
    cost.units = weights.alpha();
    auto outcome = run_numeric(machine, cost, seed_value, options);
    finish(outcome, [](const Rat& v) { return v; });
  }
  return result;
}

SymbolicResult solve_symbolic(const GraphSpec& spec, const SolveOptions& options) {
  FrontierMachine machine(spec);
  const std::size_t arity = spec.arity();

  StatePool pool;
  struct StateData {
    AntichainStore store;
    std::uint32_t succ[2] = {kNoState, kNoState};
    std::vector<std::uint8_t> charges[2];
    bool succ_ready = false;
    bool closable = false;
    CountVec flush;
  };
  std::vector<StateData> states;

  struct Label {
    std::uint32_t state;
    std::uint32_t parent;
    std::uint8_t dec;
  };
  std::vector<Label> labels;
  std::vector<CountVec> label_counts;

  AntichainStore front;
  std::deque<std::uint32_t> queue;
  bool budget_hit = false;

  auto ensure_state = [&](StateKey&& key) {
    bool created = false;
    std::uint32_t id = pool.intern(std::move(key), created);
    if (created) {
      states.emplace_back();
      states.back().closable = machine.closable(pool.key(id));
      machine.flush_counts(pool.key(id), states.back().flush);
    }
    return id;
  };

  auto push_label = [&](std::uint32_t state_id, CountVec&& counts, std::uint32_t parent_label,
                        std::uint8_t dec) {
    // A label dominated by a settled front element can never produce a
    // new minimal terminal.
    for (const CountVec& f : front.vectors())
      if (leq(f, counts)) return;
    std::uint32_t label_id = static_cast<std::uint32_t>(labels.size());
    if (!states[state_id].store.insert(counts, label_id)) return;
    labels.push_back(Label{state_id, parent_label, dec});
    label_counts.push_back(std::move(counts));
    queue.push_back(label_id);
  };

  {
    std::vector<std::uint8_t> root_charges;
    StateKey root_key = machine.root(root_charges);
    std::uint32_t root_id = ensure_state(std::move(root_key));
    CountVec counts(arity, 0);
    for (auto k : root_charges) ++counts[k];
    push_label(root_id, std::move(counts), 0, 1);
  }

  std::uint64_t processed = 0;
  while (!queue.empty()) {
    if (labels.size() >= options.max_states) {
      budget_hit = true;
      break;
    }
    std::uint32_t label_id = queue.front();
    queue.pop_front();
    const std::uint32_t state_id = labels[label_id].state;
    {
      // Skip labels a later, smaller label evicted from the store.
      const auto& payloads = states[state_id].store.payloads();
      if (std::find(payloads.begin(), payloads.end(), label_id) == payloads.end()) continue;
    }
    ++processed;

    if (states[state_id].closable) {
      CountVec final_counts = label_counts[label_id];
      for (std::size_t k = 0; k < arity; ++k) final_counts[k] += states[state_id].flush[k];
      front.insert(final_counts, label_id);
    }

    if (!states[state_id].succ_ready) {
      std::uint32_t succ_ids[2] = {kNoState, kNoState};
      std::vector<std::uint8_t> succ_charges[2];
      for (int d = 0; d < 2; ++d) {
        auto tr = machine.apply(pool.key(state_id), d == 1);
        if (!tr.dead) {
          succ_ids[d] = ensure_state(std::move(tr.key));  // may grow `states`
          succ_charges[d] = std::move(tr.charges);
        }
      }
      StateData& data = states[state_id];
      data.succ[0] = succ_ids[0];
      data.succ[1] = succ_ids[1];
      data.charges[0] = std::move(succ_charges[0]);
      data.charges[1] = std::move(succ_charges[1]);
      data.succ_ready = true;
    }
    for (int d = 1; d >= 0; --d) {
      std::uint32_t succ = states[state_id].succ[d];
      if (succ == kNoState) continue;
      CountVec next = label_counts[label_id];
      for (auto k : states[state_id].charges[d]) ++next[k];
      push_label(succ, std::move(next), label_id, static_cast<std::uint8_t>(d));
    }
  }

  SymbolicResult result;
  result.exact = !budget_hit;
  result.states_explored = processed;

  std::vector<std::pair<CountVec, std::uint64_t>> elements;
  for (std::size_t k = 0; k < front.size(); ++k)
    elements.emplace_back(front.vectors()[k], front.payloads()[k]);
  std::sort(elements.begin(), elements.end());
  std::vector<std::uint32_t> label_parent(labels.size());
  std::vector<std::uint8_t> label_dec(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    label_parent[i] = labels[i].parent;
    label_dec[i] = labels[i].dec;
  }
  for (auto& [counts, label_id] : elements) {
    VertexSet witness =
        reconstruct_witness(label_parent, label_dec, static_cast<std::uint32_t>(label_id));
    result.front.elements.push_back(
        FrontElement{ExitVector{spec.support(), counts}, std::move(witness)});
  }
  return result;
}

}  // namespace kappa0
