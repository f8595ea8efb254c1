#include "kappa0/derrw.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>

namespace kappa0 {

Rat path_probability_derrw(const GraphSpec& spec, const Weights& weights,
                           const std::vector<int>& path) {
  if (path.size() <= 1) return Rat(1);
  Rat total_alpha = 0;
  for (const Rat& a : weights.alpha()) total_alpha += a;

  std::map<std::pair<int, int>, std::uint64_t> edge_count;  // (vertex, offset) -> traversals
  std::map<int, std::uint64_t> out_count;                   // vertex -> total departures
  Rat probability = 1;
  for (std::size_t s = 0; s + 1 < path.size(); ++s) {
    int x = path[s];
    int offset = path[s + 1] - x;
    if (!spec.has_offset(offset))
      throw std::invalid_argument("path step " + std::to_string(s) + " is not an edge");
    Rat weight = weights.alpha_for_offset(offset) + Rat(edge_count[{x, offset}]);
    Rat out_weight = total_alpha + Rat(out_count[x]);
    probability *= weight / out_weight;
    ++edge_count[{x, offset}];
    ++out_count[x];
  }
  return probability;
}

Rat path_probability_annealed(const GraphSpec& spec, const Weights& weights,
                              const std::vector<int>& path) {
  if (path.size() <= 1) return Rat(1);
  Rat total_alpha = 0;
  for (const Rat& a : weights.alpha()) total_alpha += a;

  std::map<std::pair<int, int>, std::uint64_t> edge_count;
  std::map<int, std::uint64_t> out_count;
  for (std::size_t s = 0; s + 1 < path.size(); ++s) {
    int x = path[s];
    int offset = path[s + 1] - x;
    if (!spec.has_offset(offset))
      throw std::invalid_argument("path step " + std::to_string(s) + " is not an edge");
    ++edge_count[{x, offset}];
    ++out_count[x];
  }

  // Dirichlet moment per site: prod_i alpha_i^(n_i rising) / (sum alpha)^(n rising)
  Rat probability = 1;
  for (const auto& [x, n] : out_count) {
    Rat denom = 1;
    for (std::uint64_t j = 0; j < n; ++j) denom *= total_alpha + Rat(j);
    probability /= denom;
  }
  for (const auto& [edge, n] : edge_count) {
    const Rat& a = weights.alpha_for_offset(edge.second);
    for (std::uint64_t j = 0; j < n; ++j) probability *= a + Rat(j);
  }
  return probability;
}

namespace {

// splitmix64: cheap counter-based substreams, one per walk.
struct SplitMix64 {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

struct WalkPlan {
  std::vector<int> members;               // sorted
  std::vector<double> alpha;              // per support offset
  std::vector<int> offsets;               // support offsets, self-loop included
  double total_alpha = 0.0;
};

// One reinforced walk; returns (visits to 0 before exit, hit_cap).
std::pair<std::uint64_t, bool> run_walk(const WalkPlan& plan, std::uint64_t cap,
                                        SplitMix64 rng) {
  const std::size_t degree = plan.offsets.size();
  // reinforcement counts per (member index, offset index)
  std::vector<std::uint32_t> counts(plan.members.size() * degree, 0);
  std::vector<std::uint32_t> out_total(plan.members.size(), 0);

  auto member_index = [&](int z) {
    auto it = std::lower_bound(plan.members.begin(), plan.members.end(), z);
    if (it == plan.members.end() || *it != z) return static_cast<std::ptrdiff_t>(-1);
    return it - plan.members.begin();
  };

  int position = 0;
  std::uint64_t visits = 1;  // the walk starts at 0
  for (std::uint64_t step = 0; step < cap; ++step) {
    std::ptrdiff_t idx = member_index(position);
    std::uint32_t* row = counts.data() + static_cast<std::size_t>(idx) * degree;
    double total = plan.total_alpha + static_cast<double>(out_total[idx]);
    double u = rng.uniform() * total;
    std::size_t chosen = degree - 1;
    double acc = 0.0;
    for (std::size_t k = 0; k < degree; ++k) {
      acc += plan.alpha[k] + static_cast<double>(row[k]);
      if (u < acc) {
        chosen = k;
        break;
      }
    }
    ++row[chosen];
    ++out_total[idx];
    position += plan.offsets[chosen];
    if (member_index(position) < 0) return {visits, false};  // left the set
    if (position == 0) ++visits;
  }
  return {visits, true};
}

unsigned thread_count_from_env() {
  const char* env = std::getenv("KAPPA0_THREADS");
  if (env == nullptr) return 1;
  long n = std::strtol(env, nullptr, 10);
  if (n <= 0) return 1;
  return static_cast<unsigned>(std::min<long>(n, 256));
}

}  // namespace

VisitStats estimate_visits(const GraphSpec& spec, const Weights& weights, const VertexSet& set,
                           std::uint64_t n_walks, std::uint64_t cap, std::uint64_t seed) {
  if (!set.contains(0)) throw std::invalid_argument("the walk set must contain 0");
  if (!is_strongly_connected(spec, set))
    throw std::invalid_argument("the walk set must be strongly connected");

  WalkPlan plan;
  plan.members = set.members();
  for (std::size_t k = 0; k < spec.arity(); ++k) {
    plan.offsets.push_back(spec.support()[k]);
    plan.alpha.push_back(rat_to_double(weights.alpha_at(k)));
    plan.total_alpha += plan.alpha.back();
  }

  VisitStats stats;
  stats.cap = cap;
  stats.samples.assign(n_walks, 0);
  std::vector<char> censored(n_walks, 0);

  auto run_range = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t w = begin; w < end; ++w) {
      SplitMix64 rng{seed * 0x9e3779b97f4a7c15ull + w * 0xda942042e4dd58b5ull + 1};
      auto [visits, hit_cap] = run_walk(plan, cap, rng);
      stats.samples[w] = visits;
      censored[w] = hit_cap ? 1 : 0;
    }
  };

  unsigned threads = std::min<std::uint64_t>(thread_count_from_env(), std::max<std::uint64_t>(n_walks, 1));
  if (threads <= 1) {
    run_range(0, n_walks);
  } else {
    std::vector<std::thread> pool;
    std::uint64_t chunk = (n_walks + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      std::uint64_t begin = t * chunk;
      std::uint64_t end = std::min<std::uint64_t>(begin + chunk, n_walks);
      if (begin >= end) break;
      pool.emplace_back(run_range, begin, end);
    }
    for (auto& th : pool) th.join();
  }

  for (char c : censored) stats.censored += c;
  return stats;
}

SurvivalReport survival_report(const VisitStats& stats) {
  SurvivalReport report;
  double sum = 0.0;
  for (std::uint64_t s : stats.samples) sum += static_cast<double>(s);
  report.mean = stats.samples.empty() ? 0.0 : sum / static_cast<double>(stats.samples.size());

  for (int e = 4; e <= 12; ++e) {
    std::uint64_t k = std::uint64_t{1} << e;
    std::uint64_t count = 0;
    for (std::uint64_t s : stats.samples)
      if (s > k) ++count;
    report.survival.emplace_back(k, count);
  }

  // Least squares on (log k, log count), nonzero counts only.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (const auto& [k, count] : report.survival) {
    if (count == 0) continue;
    double x = std::log(static_cast<double>(k));
    double y = std::log(static_cast<double>(count));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  if (n >= 2) {
    double denom = static_cast<double>(n) * sxx - sx * sx;
    if (denom != 0.0) report.slope = (static_cast<double>(n) * sxy - sx * sy) / denom;
  }
  return report;
}

}  // namespace kappa0
