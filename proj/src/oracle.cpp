#include "kappa0/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "internal/scaled_weights.hpp"

namespace kappa0 {

namespace {

using Mask = std::uint64_t;

// Positions z (as bits) with z+i inside the mask. Offsets wider than the
// word can never land inside [0, 63].
Mask in_set_after_step(Mask mask, int i) {
  unsigned s = static_cast<unsigned>(i > 0 ? i : -i);
  if (s >= 64) return 0;
  return i > 0 ? (mask >> s) : (mask << s);
}

// Image of the positions in f under one +i step.
Mask step_image(Mask f, int i) {
  unsigned s = static_cast<unsigned>(i > 0 ? i : -i);
  if (s >= 64) return 0;
  return i > 0 ? (f << s) : (f >> s);
}

bool mask_degree_feasible(const GraphSpec& spec, Mask mask) {
  Mask has_out = 0, has_in = 0;
  for (int i : spec.support()) {
    if (i == 0) continue;
    has_out |= in_set_after_step(mask, i);
    has_in |= step_image(mask, i);
  }
  return (mask & ~has_out) == 0 && (mask & ~has_in) == 0;
}

bool mask_strongly_connected(const GraphSpec& spec, Mask mask) {
  if (std::popcount(mask) == 1) return spec.has_self_loop();
  if (!mask_degree_feasible(spec, mask)) return false;
  Mask fwd = mask & 1;
  for (;;) {
    Mask next = fwd;
    for (int i : spec.support()) {
      if (i == 0) continue;
      next |= step_image(fwd, i) & mask;
    }
    if (next == fwd) break;
    fwd = next;
  }
  if (fwd != mask) return false;
  Mask bwd = mask & 1;
  for (;;) {
    Mask next = bwd;
    for (int i : spec.support()) {
      if (i == 0) continue;
      next |= in_set_after_step(bwd, i) & mask;
    }
    if (next == bwd) break;
    bwd = next;
  }
  return bwd == mask;
}

void counts_from_mask(const GraphSpec& spec, Mask mask, CountVec& out) {
  out.assign(spec.arity(), 0);
  for (std::size_t k = 0; k < spec.arity(); ++k) {
    int i = spec.support()[k];
    if (i == 0) continue;
    out[k] = std::popcount(mask & ~in_set_after_step(mask, i));
  }
}

VertexSet mask_to_set(Mask mask) {
  std::vector<int> members;
  while (mask != 0) {
    int z = std::countr_zero(mask);
    members.push_back(z);
    mask &= mask - 1;
  }
  return VertexSet(std::move(members));
}

// Membership-list lexicographic order for two masks sharing a maximum:
// the mask containing the lowest differing position comes first.
bool mask_lex_less(Mask a, Mask b) {
  if (a == b) return false;
  int p = std::countr_zero(a ^ b);
  return (a >> p) & 1;
}

// (max, lexicographic) order used for all witness tie-breaking.
bool witness_before(Mask a, int max_a, Mask b, int max_b) {
  if (max_a != max_b) return max_a < max_b;
  return mask_lex_less(a, b);
}

void check_budget(const EnumerationBudget& budget) {
  if (budget.max_diameter < 0) throw std::invalid_argument("max diameter must be nonnegative");
  if (budget.max_diameter > 63)
    throw std::invalid_argument("oracle enumeration supports diameters up to 63");
  if (budget.max_sets && *budget.max_sets == 0)
    throw std::invalid_argument("max_sets must be positive");
}

// Visits every strongly connected mask, grouped by maximum. The inner
// iteration order is not the lexicographic one (callers that care
// tie-break with witness_before); the public stream reorders.
template <typename Fn>  // Fn: (Mask, int max) -> bool keep_going
EnumerationStats for_each_sc_mask(const GraphSpec& spec, const EnumerationBudget& budget,
                                  Fn&& visit) {
  check_budget(budget);
  EnumerationStats stats;
  auto yield = [&](Mask mask, int m) {
    if (budget.max_sets && stats.yielded == *budget.max_sets) {
      stats.budget_exhausted = true;
      return false;
    }
    ++stats.yielded;
    return visit(mask, m);
  };
  if (spec.has_self_loop()) {
    if (!yield(Mask{1}, 0)) return stats;
  }
  for (int m = 1; m <= budget.max_diameter; ++m) {
    const Mask base = Mask{1} | (Mask{1} << m);
    const Mask inner_count = Mask{1} << (m - 1);
    for (Mask k = 0; k < inner_count; ++k) {
      Mask mask = base | (k << 1);
      if (!mask_strongly_connected(spec, mask)) continue;
      if (!yield(mask, m)) return stats;
    }
  }
  return stats;
}

}  // namespace

EnumerationStats enumerate_sc_sets(const GraphSpec& spec, const EnumerationBudget& budget,
                                   const std::function<bool(const VertexSet&)>& visit) {
  check_budget(budget);
  EnumerationStats stats;
  auto yield = [&](Mask mask) {
    if (budget.max_sets && stats.yielded == *budget.max_sets) {
      stats.budget_exhausted = true;
      return false;
    }
    ++stats.yielded;
    return visit(mask_to_set(mask));
  };
  if (spec.has_self_loop()) {
    if (!yield(Mask{1})) return stats;
  }
  for (int m = 1; m <= budget.max_diameter; ++m) {
    const Mask base = Mask{1} | (Mask{1} << m);
    // Count down so position 1 acts as the most significant choice;
    // this yields membership lists in increasing lexicographic order.
    for (Mask k = Mask{1} << (m - 1); k-- > 0;) {
      Mask mask = base;
      for (int z = 1; z < m; ++z) {
        if ((k >> (m - 1 - z)) & 1) mask |= Mask{1} << z;
      }
      if (!mask_strongly_connected(spec, mask)) continue;
      if (!yield(mask)) return stats;
    }
  }
  return stats;
}

EnumerationStats enumerate_exit_counts(const GraphSpec& spec, const EnumerationBudget& budget,
                                       const std::function<bool(const CountVec&)>& visit) {
  CountVec counts;
  return for_each_sc_mask(spec, budget, [&](Mask mask, int) {
    counts_from_mask(spec, mask, counts);
    return visit(counts);
  });
}

OracleValue oracle_kappa0(const GraphSpec& spec, const Weights& weights,
                          const EnumerationBudget& budget) {
  internal::ScaledWeights scaled = internal::scale_weights(weights);
  CountVec counts;

  bool found = false;
  Mask best_mask = 0;
  int best_max = 0;
  std::int64_t best_scaled = std::numeric_limits<std::int64_t>::max();
  Rat best_rat;

  auto stats = for_each_sc_mask(spec, budget, [&](Mask mask, int m) {
    counts_from_mask(spec, mask, counts);
    if (scaled.fits64) {
      std::int64_t value = 0;
      for (std::size_t k = 0; k < counts.size(); ++k) value += counts[k] * scaled.units[k];
      if (!found || value < best_scaled ||
          (value == best_scaled && witness_before(mask, m, best_mask, best_max))) {
        found = true;
        best_scaled = value;
        best_mask = mask;
        best_max = m;
      }
    } else {
      Rat value = 0;
      for (std::size_t k = 0; k < counts.size(); ++k)
        value += Rat(counts[k]) * weights.alpha_at(k);
      if (!found || value < best_rat ||
          (value == best_rat && witness_before(mask, m, best_mask, best_max))) {
        found = true;
        best_rat = value;
        best_mask = mask;
        best_max = m;
      }
    }
    return true;
  });

  if (!found) throw std::runtime_error("no strongly connected set within the diameter bound");
  OracleValue out{scaled.fits64 ? scaled.to_rat(best_scaled) : best_rat, mask_to_set(best_mask),
                  stats.yielded, stats.budget_exhausted, budget.max_diameter};
  return out;
}

namespace {

struct CountVecHash {
  std::size_t operator()(const CountVec& v) const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (std::int64_t x : v) {
      h ^= static_cast<std::size_t>(x);
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

}  // namespace

std::vector<CountVec> ParetoFront::count_vectors() const {
  std::vector<CountVec> out;
  out.reserve(elements.size());
  for (const auto& e : elements) out.push_back(e.vector.counts);
  return out;
}

OracleFront oracle_pareto(const GraphSpec& spec, const EnumerationBudget& budget) {
  std::unordered_map<CountVec, std::pair<Mask, int>, CountVecHash> first_witness;
  CountVec counts;
  auto stats = for_each_sc_mask(spec, budget, [&](Mask mask, int m) {
    counts_from_mask(spec, mask, counts);
    auto [it, inserted] = first_witness.try_emplace(counts, mask, m);
    if (!inserted && witness_before(mask, m, it->second.first, it->second.second))
      it->second = {mask, m};
    return true;
  });

  std::vector<CountVec> all;
  all.reserve(first_witness.size());
  for (const auto& [v, w] : first_witness) all.push_back(v);
  OracleFront out;
  out.sets_seen = stats.yielded;
  out.budget_exhausted = stats.budget_exhausted;
  out.diameter_bound = budget.max_diameter;
  for (CountVec& v : minimal_filter(std::move(all))) {
    const auto& [mask, m] = first_witness.at(v);
    out.front.elements.push_back(
        FrontElement{ExitVector{spec.support(), std::move(v)}, mask_to_set(mask)});
  }
  return out;
}

namespace {

// DFS over membership decisions for positions 0..D with monotone partial
// cost. `accrued + pending` never exceeds the final exit weight of any
// completion, so both prune against the best candidate found so far.
struct DfsSearch {
  const GraphSpec& spec;
  const Weights& weights;
  const internal::ScaledWeights& scaled;
  int max_diameter;

  Mask members = 1;
  bool found = false;
  Mask best_mask = 0;
  int best_max = 0;
  std::int64_t best_value = std::numeric_limits<std::int64_t>::max();
  std::int64_t c_plus = 0;

  bool out_edge_into_set(Mask mask, int z) const {
    for (int i : spec.support()) {
      if (i == 0) continue;
      int t = z + i;
      if (t >= 0 && t < 64 && ((mask >> t) & 1)) return true;
    }
    return false;
  }
  bool in_edge_from_set(Mask mask, int z) const {
    for (int i : spec.support()) {
      if (i == 0) continue;
      int s = z - i;
      if (s >= 0 && s < 64 && ((mask >> s) & 1)) return true;
    }
    return false;
  }

  void consider_candidate(int max_member, std::int64_t accrued, std::int64_t pending) {
    std::int64_t value = accrued + pending;
    if (value > best_value) return;
    if (!mask_strongly_connected(spec, members)) return;
    if (!found || value < best_value ||
        (value == best_value && witness_before(members, max_member, best_mask, best_max))) {
      found = true;
      best_value = value;
      best_mask = members;
      best_max = max_member;
    }
  }

  // p: next undecided position; pending: exit weight the current members
  // will still be charged for their not-yet-decided rightward targets.
  void expand(int p, int max_member, std::int64_t accrued, std::int64_t pending) {
    if (p > max_diameter) return;
    if (accrued + pending > best_value) return;

    // A member all of whose potential out-edges (resp. in-edges) are
    // already decided must have found one inside the set.
    int z_out = p - 1 - spec.right();
    if (z_out >= 0 && ((members >> z_out) & 1) && !out_edge_into_set(members, z_out)) return;
    int z_in = p - 1 - spec.left();
    if (z_in >= 0 && ((members >> z_in) & 1) && !in_edge_from_set(members, z_in)) return;

    // Decide p as a member: charge its leftward exits, move its future
    // rightward exits into pending.
    {
      std::int64_t charge = 0;
      for (std::size_t k = 0; k < spec.arity(); ++k) {
        int i = spec.support()[k];
        if (i >= 0) continue;
        int t = p + i;
        if (t < 0 || !((members >> t) & 1)) charge += scaled.units[k];
      }
      std::int64_t recovered = 0;  // rightward exits into p that will never be charged
      for (std::size_t k = 0; k < spec.arity(); ++k) {
        int i = spec.support()[k];
        if (i <= 0) continue;
        int s = p - i;
        if (s >= 0 && ((members >> s) & 1)) recovered += scaled.units[k];
      }
      members |= Mask{1} << p;
      consider_candidate(p, accrued + charge, pending - recovered + c_plus);
      expand(p + 1, p, accrued + charge, pending - recovered + c_plus);
      members &= ~(Mask{1} << p);
    }

    // Decide p as excluded: rightward exits into p become final charges.
    {
      std::int64_t charge = 0;
      for (std::size_t k = 0; k < spec.arity(); ++k) {
        int i = spec.support()[k];
        if (i <= 0) continue;
        int s = p - i;
        if (s >= 0 && ((members >> s) & 1)) charge += scaled.units[k];
      }
      expand(p + 1, max_member, accrued + charge, pending - charge);
    }
  }
};

}  // namespace

OracleValue oracle_kappa0_dfs(const GraphSpec& spec, const Weights& weights, int max_diameter) {
  if (max_diameter < 0 || max_diameter > 63)
    throw std::invalid_argument("dfs oracle supports diameters 0..63");
  internal::ScaledWeights scaled = internal::scale_weights(weights);
  if (!scaled.fits64) {
    // Rare: weights too wide to rescale. The flat enumeration handles
    // exact rationals.
    return oracle_kappa0(spec, weights, EnumerationBudget{max_diameter, std::nullopt});
  }
  DfsSearch search{spec, weights, scaled, max_diameter};
  for (std::size_t k = 0; k < spec.arity(); ++k)
    if (spec.support()[k] > 0) search.c_plus += scaled.units[k];

  // Position 0 is a member: all its leftward targets are outside.
  std::int64_t accrued = 0;
  for (std::size_t k = 0; k < spec.arity(); ++k)
    if (spec.support()[k] < 0) accrued += scaled.units[k];
  search.consider_candidate(0, accrued, search.c_plus);
  search.expand(1, 0, accrued, search.c_plus);

  if (!search.found)
    throw std::runtime_error("no strongly connected set within the diameter bound");
  return OracleValue{scaled.to_rat(search.best_value), mask_to_set(search.best_mask), 0, false,
                     max_diameter};
}

}  // namespace kappa0
