#include "kappa0/antichain.hpp"

#include <algorithm>
#include <stdexcept>

namespace kappa0 {

bool leq(const CountVec& a, const CountVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector arity mismatch");
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

bool strictly_dominates(const CountVec& a, const CountVec& b) {
  return a != b && leq(a, b);
}

std::vector<CountVec> minimal_filter(std::vector<CountVec> vectors) {
  std::sort(vectors.begin(), vectors.end());
  vectors.erase(std::unique(vectors.begin(), vectors.end()), vectors.end());
  std::vector<CountVec> kept;
  for (const CountVec& v : vectors) {
    bool dominated = false;
    // Lexicographic order already puts any dominator of v before it.
    for (const CountVec& k : kept) {
      if (leq(k, v)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(v);
  }
  return kept;
}

std::vector<ExitVector> minimal_filter(std::vector<ExitVector> vectors) {
  if (vectors.empty()) return vectors;
  const auto& support = vectors.front().support;
  std::vector<CountVec> raw;
  raw.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.support != support) throw std::invalid_argument("mixed supports in minimal_filter");
    raw.push_back(v.counts);
  }
  std::vector<ExitVector> out;
  for (CountVec& v : minimal_filter(std::move(raw)))
    out.push_back(ExitVector{support, std::move(v)});
  return out;
}

bool AntichainStore::insert(const CountVec& v, std::uint64_t payload) {
  for (const CountVec& kept : vectors_)
    if (leq(kept, v)) return false;
  std::size_t w = 0;
  for (std::size_t k = 0; k < vectors_.size(); ++k) {
    if (!leq(v, vectors_[k])) {
      if (w != k) {
        vectors_[w] = std::move(vectors_[k]);
        payloads_[w] = payloads_[k];
      }
      ++w;
    }
  }
  vectors_.resize(w);
  payloads_.resize(w);
  vectors_.push_back(v);
  payloads_.push_back(payload);
  return true;
}

}  // namespace kappa0
