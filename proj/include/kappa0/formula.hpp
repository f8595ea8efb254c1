#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kappa0/graph.hpp"
#include "kappa0/oracle.hpp"

namespace kappa0 {

// kappa0 written as a minimum of finitely many integer combinations of
// the weights: one term per Pareto-minimal exit vector.
struct FormulaTerm {
  CountVec counts;  // aligned with the support
  std::optional<VertexSet> witness;
};

class KappaFormula {
 public:
  KappaFormula(std::vector<int> support, std::vector<FormulaTerm> terms);
  static KappaFormula from_front(const GraphSpec& spec, const ParetoFront& front);

  const std::vector<int>& support() const { return support_; }
  const std::vector<FormulaTerm>& terms() const { return terms_; }

  bool operator==(const KappaFormula& other) const;

 private:
  std::vector<int> support_;
  std::vector<FormulaTerm> terms_;  // nonempty, sorted lexicographically
};

// Minimum over terms of the dot product with the weights.
Rat evaluate(const KappaFormula& formula, const Weights& weights);
// The term attaining the minimum (first in term order on ties).
std::size_t argmin_term(const KappaFormula& formula, const Weights& weights);

// Drops dominated terms; never changes evaluate() for positive weights.
KappaFormula simplify(const KappaFormula& formula);

enum class RenderFormat { text, latex, json };
RenderFormat render_format_from_string(const std::string& name);

std::string render(const KappaFormula& formula, RenderFormat format);
KappaFormula parse_formula_json(const std::string& text);

}  // namespace kappa0
