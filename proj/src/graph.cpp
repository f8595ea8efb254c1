#include "kappa0/graph.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace kappa0 {

GraphSpec::GraphSpec(int max_left, int max_right, std::vector<int> support)
    : left_(max_left), right_(max_right), support_(std::move(support)) {
  if (left_ <= 0 || right_ <= 0)
    throw std::invalid_argument("L and R must be positive");
  std::sort(support_.begin(), support_.end());
  support_.erase(std::unique(support_.begin(), support_.end()), support_.end());
  if (support_.empty() || support_.front() != -left_ || support_.back() != right_)
    throw std::invalid_argument("support must contain -L and R");
  for (int i : support_) {
    if (i < -left_ || i > right_)
      throw std::invalid_argument("support offset outside [-L, R]");
  }
}

bool GraphSpec::has_offset(int i) const {
  return std::binary_search(support_.begin(), support_.end(), i);
}

int GraphSpec::offset_index(int i) const {
  auto it = std::lower_bound(support_.begin(), support_.end(), i);
  if (it == support_.end() || *it != i) return -1;
  return static_cast<int>(it - support_.begin());
}

Weights::Weights(const GraphSpec& spec, std::vector<Rat> alpha)
    : support_(spec.support()), alpha_(std::move(alpha)) {
  if (alpha_.size() != support_.size())
    throw std::invalid_argument("weights must cover the support exactly");
  for (const Rat& a : alpha_) {
    if (a <= 0) throw std::invalid_argument("weights must be strictly positive");
  }
}

const Rat& Weights::alpha_for_offset(int offset) const {
  auto it = std::lower_bound(support_.begin(), support_.end(), offset);
  if (it == support_.end() || *it != offset)
    throw std::invalid_argument("offset not in support");
  return alpha_[static_cast<std::size_t>(it - support_.begin())];
}

VertexSet::VertexSet(std::vector<int> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (members_.empty()) throw std::invalid_argument("vertex set must be nonempty");
}

bool VertexSet::contains(int v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

VertexSet VertexSet::canonical() const { return shifted(-min()); }

VertexSet VertexSet::shifted(int delta) const {
  std::vector<int> out(members_);
  for (int& v : out) v += delta;
  return VertexSet(std::move(out));
}

std::int64_t ExitVector::count_for_offset(int offset) const {
  auto it = std::lower_bound(support.begin(), support.end(), offset);
  if (it == support.end() || *it != offset)
    throw std::invalid_argument("offset not in support");
  return counts[static_cast<std::size_t>(it - support.begin())];
}

ExitVector exit_vector(const GraphSpec& spec, const VertexSet& set) {
  ExitVector out;
  out.support = spec.support();
  out.counts.assign(out.support.size(), 0);
  for (std::size_t k = 0; k < out.support.size(); ++k) {
    int i = out.support[k];
    if (i == 0) continue;
    std::int64_t c = 0;
    for (int z : set.members())
      if (!set.contains(z + i)) ++c;
    out.counts[k] = c;
  }
  return out;
}

Rat beta(const Weights& weights, const ExitVector& vector) {
  if (weights.support() != vector.support)
    throw std::invalid_argument("support mismatch between weights and exit vector");
  Rat total = 0;
  for (std::size_t k = 0; k < vector.counts.size(); ++k)
    total += Rat(vector.counts[k]) * weights.alpha_at(k);
  return total;
}

Rat beta_of_set(const GraphSpec& spec, const Weights& weights, const VertexSet& set) {
  return beta(weights, exit_vector(spec, set));
}

bool is_strongly_connected(const GraphSpec& spec, const VertexSet& set) {
  const auto& members = set.members();
  if (members.size() == 1) return spec.has_self_loop();

  // Mutual reachability with the leftmost vertex implies mutual
  // reachability of every pair.
  auto bfs = [&](bool forward) {
    std::vector<char> seen(members.size(), 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      std::size_t idx = stack.back();
      stack.pop_back();
      int z = members[idx];
      for (int i : spec.support()) {
        if (i == 0) continue;
        int target = forward ? z + i : z - i;
        auto it = std::lower_bound(members.begin(), members.end(), target);
        if (it == members.end() || *it != target) continue;
        std::size_t t = static_cast<std::size_t>(it - members.begin());
        if (!seen[t]) {
          seen[t] = 1;
          ++reached;
          stack.push_back(t);
        }
      }
    }
    return reached == members.size();
  };
  return bfs(true) && bfs(false);
}

HalfSums half_sums(const GraphSpec& spec, const Weights& weights) {
  HalfSums out{0, 0, 0, 0};
  for (std::size_t k = 0; k < spec.support().size(); ++k) {
    int i = spec.support()[k];
    const Rat& a = weights.alpha_at(k);
    if (i > 0) {
      out.c_plus += a;
      out.d_plus += Rat(i) * a;
    } else if (i < 0) {
      out.c_minus += a;
      out.d_minus += Rat(-i) * a;
    }
  }
  return out;
}

Weights SpecFile::weights() const {
  if (!has_weights) throw std::runtime_error("spec file carries no weights");
  return Weights(spec, alpha);
}

SpecFile spec_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw std::invalid_argument("spec must be a JSON object");
  if (!doc.contains("L") || !doc.contains("R") || !doc.contains("alpha"))
    throw std::invalid_argument("spec requires L, R and alpha");
  int L = doc.at("L").get<int>();
  int R = doc.at("R").get<int>();
  const auto& alpha_obj = doc.at("alpha");
  if (!alpha_obj.is_object()) throw std::invalid_argument("alpha must be an object");

  std::vector<std::pair<int, Rat>> entries;
  bool any_null = false, any_value = false;
  for (auto it = alpha_obj.begin(); it != alpha_obj.end(); ++it) {
    int offset = std::stoi(it.key());
    const auto& v = it.value();
    if (v.is_null()) {
      any_null = true;
      entries.emplace_back(offset, Rat(0));
    } else {
      any_value = true;
      Rat a;
      if (v.is_string()) {
        a = rat_from_string(v.get<std::string>());
      } else if (v.is_number_integer()) {
        a = Rat(v.get<long long>());
      } else if (v.is_number_unsigned()) {
        a = Rat(v.get<unsigned long long>());
      } else if (v.is_number_float()) {
        // Round-trip through the shortest decimal rendering so that a
        // literal like 0.1 means exactly 1/10.
        a = rat_from_string(nlohmann::json(v.get<double>()).dump());
      } else {
        throw std::invalid_argument("alpha values must be numbers, 'p/q' strings or null");
      }
      if (a <= 0) throw std::invalid_argument("alpha values must be positive");
      entries.emplace_back(offset, a);
    }
  }
  if (any_null && any_value)
    throw std::invalid_argument("alpha mixes weighted and weightless offsets");

  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<int> support;
  std::vector<Rat> alpha;
  for (auto& [offset, a] : entries) {
    support.push_back(offset);
    alpha.push_back(a);
  }
  SpecFile out{GraphSpec(L, R, support), any_value, {}};
  if (any_value) out.alpha = std::move(alpha);
  return out;
}

SpecFile load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open spec file: " + path);
  nlohmann::json doc;
  in >> doc;
  return spec_from_json(doc);
}

nlohmann::json spec_to_json(const GraphSpec& spec, const Weights* weights) {
  nlohmann::json alpha = nlohmann::json::object();
  for (std::size_t k = 0; k < spec.support().size(); ++k) {
    std::string key = std::to_string(spec.support()[k]);
    if (weights != nullptr) {
      alpha[key] = rat_to_string(weights->alpha_at(k));
    } else {
      alpha[key] = nullptr;
    }
  }
  return nlohmann::json{{"L", spec.left()}, {"R", spec.right()}, {"alpha", alpha}};
}

}  // namespace kappa0
