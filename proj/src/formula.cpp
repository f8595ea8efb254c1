#include "kappa0/formula.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "kappa0/antichain.hpp"

namespace kappa0 {

KappaFormula::KappaFormula(std::vector<int> support, std::vector<FormulaTerm> terms)
    : support_(std::move(support)), terms_(std::move(terms)) {
  if (terms_.empty()) throw std::invalid_argument("formula needs at least one term");
  for (const auto& t : terms_) {
    if (t.counts.size() != support_.size())
      throw std::invalid_argument("term arity does not match the support");
  }
  std::sort(terms_.begin(), terms_.end(),
            [](const FormulaTerm& a, const FormulaTerm& b) { return a.counts < b.counts; });
}

KappaFormula KappaFormula::from_front(const GraphSpec& spec, const ParetoFront& front) {
  std::vector<FormulaTerm> terms;
  for (const auto& e : front.elements)
    terms.push_back(FormulaTerm{e.vector.counts, e.witness});
  return KappaFormula(spec.support(), std::move(terms));
}

bool KappaFormula::operator==(const KappaFormula& other) const {
  if (support_ != other.support_ || terms_.size() != other.terms_.size()) return false;
  for (std::size_t k = 0; k < terms_.size(); ++k)
    if (terms_[k].counts != other.terms_[k].counts) return false;
  return true;
}

Rat evaluate(const KappaFormula& formula, const Weights& weights) {
  return beta(weights, ExitVector{formula.support(),
                                  formula.terms()[argmin_term(formula, weights)].counts});
}

std::size_t argmin_term(const KappaFormula& formula, const Weights& weights) {
  if (weights.support() != formula.support())
    throw std::invalid_argument("support mismatch between formula and weights");
  std::size_t best = 0;
  Rat best_value;
  for (std::size_t t = 0; t < formula.terms().size(); ++t) {
    Rat value = 0;
    const CountVec& counts = formula.terms()[t].counts;
    for (std::size_t k = 0; k < counts.size(); ++k)
      value += Rat(counts[k]) * weights.alpha_at(k);
    if (t == 0 || value < best_value) {
      best = t;
      best_value = value;
    }
  }
  return best;
}

KappaFormula simplify(const KappaFormula& formula) {
  std::vector<CountVec> raw;
  for (const auto& t : formula.terms()) raw.push_back(t.counts);
  std::vector<CountVec> kept = minimal_filter(std::move(raw));
  std::vector<FormulaTerm> terms;
  for (CountVec& v : kept) {
    std::optional<VertexSet> witness;
    for (const auto& t : formula.terms()) {
      if (t.counts == v) {
        witness = t.witness;
        break;
      }
    }
    terms.push_back(FormulaTerm{std::move(v), std::move(witness)});
  }
  return KappaFormula(formula.support(), std::move(terms));
}

RenderFormat render_format_from_string(const std::string& name) {
  if (name == "text") return RenderFormat::text;
  if (name == "latex") return RenderFormat::latex;
  if (name == "json") return RenderFormat::json;
  throw std::invalid_argument("unknown format: " + name);
}

namespace {

std::string term_text(const std::vector<int>& support, const CountVec& counts, bool latex) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < support.size(); ++k) {
    if (counts[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (counts[k] != 1) os << counts[k] << ' ';
    if (latex) {
      os << "\\alpha_{" << support[k] << '}';
    } else {
      os << "a(" << support[k] << ')';
    }
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace

std::string render(const KappaFormula& formula, RenderFormat format) {
  if (format == RenderFormat::json) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : formula.terms()) {
      nlohmann::json vector = nlohmann::json::object();
      for (std::size_t k = 0; k < formula.support().size(); ++k)
        vector[std::to_string(formula.support()[k])] = t.counts[k];
      nlohmann::json witness;
      if (t.witness) witness = t.witness->members();
      terms.push_back(nlohmann::json{{"vector", vector}, {"witness", witness}});
    }
    return nlohmann::json{{"support", formula.support()}, {"terms", terms}}.dump();
  }

  const bool latex = format == RenderFormat::latex;
  std::ostringstream os;
  os << (latex ? "\\kappa_0 = " : "kappa0 = ");
  if (formula.terms().size() == 1) {
    os << term_text(formula.support(), formula.terms()[0].counts, latex);
  } else {
    os << (latex ? "\\min(" : "min(");
    for (std::size_t t = 0; t < formula.terms().size(); ++t) {
      if (t != 0) os << ", ";
      os << term_text(formula.support(), formula.terms()[t].counts, latex);
    }
    os << ')';
  }
  return os.str();
}

KappaFormula parse_formula_json(const std::string& text) {
  nlohmann::json doc = nlohmann::json::parse(text);
  std::vector<int> support = doc.at("support").get<std::vector<int>>();
  std::vector<FormulaTerm> terms;
  for (const auto& t : doc.at("terms")) {
    CountVec counts(support.size(), 0);
    for (auto it = t.at("vector").begin(); it != t.at("vector").end(); ++it) {
      int offset = std::stoi(it.key());
      auto pos = std::lower_bound(support.begin(), support.end(), offset);
      if (pos == support.end() || *pos != offset)
        throw std::invalid_argument("term offset outside the support");
      counts[static_cast<std::size_t>(pos - support.begin())] = it.value().get<std::int64_t>();
    }
    std::optional<VertexSet> witness;
    if (t.contains("witness") && !t.at("witness").is_null())
      witness = VertexSet(t.at("witness").get<std::vector<int>>());
    terms.push_back(FormulaTerm{std::move(counts), std::move(witness)});
  }
  return KappaFormula(std::move(support), std::move(terms));
}

}  // namespace kappa0
