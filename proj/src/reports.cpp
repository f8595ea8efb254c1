#include "kappa0/reports.hpp"

#include "kappa0/formula.hpp"

namespace kappa0 {

namespace {

nlohmann::json vector_to_json(const GraphSpec& spec, const CountVec& counts) {
  nlohmann::json out = nlohmann::json::object();
  for (std::size_t k = 0; k < spec.arity(); ++k)
    out[std::to_string(spec.support()[k])] = counts[k];
  return out;
}

}  // namespace

nlohmann::json front_to_json(const GraphSpec& spec, const ParetoFront& front) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : front.elements) {
    out.push_back(nlohmann::json{{"vector", vector_to_json(spec, e.vector.counts)},
                                 {"witness", e.witness.members()}});
  }
  return out;
}

nlohmann::json beta_report(const GraphSpec& spec, const Weights& weights, const VertexSet& set) {
  ExitVector x = exit_vector(spec, set);
  return nlohmann::json{{"set", set.members()},
                        {"exit_vector", vector_to_json(spec, x.counts)},
                        {"beta", rat_to_string(beta(weights, x))},
                        {"strongly_connected", is_strongly_connected(spec, set)}};
}

nlohmann::json numeric_report(const NumericResult& result) {
  return nlohmann::json{{"kappa0", rat_to_string(result.value)},
                        {"witness", result.witness.members()},
                        {"exact", result.exact},
                        {"states_explored", result.states_explored},
                        {"gap", result.gap ? nlohmann::json(rat_to_string(*result.gap))
                                           : nlohmann::json(nullptr)}};
}

nlohmann::json symbolic_report(const GraphSpec& spec, const SymbolicResult& result,
                               const Weights* weights) {
  KappaFormula formula = KappaFormula::from_front(spec, result.front);
  nlohmann::json out{{"front", front_to_json(spec, result.front)},
                     {"formula", render(formula, RenderFormat::text)},
                     {"exact", result.exact},
                     {"states_explored", result.states_explored}};
  if (weights != nullptr) out["kappa0"] = rat_to_string(evaluate(formula, *weights));
  return out;
}

nlohmann::json oracle_value_report(const OracleValue& result) {
  return nlohmann::json{{"kappa0", rat_to_string(result.value)},
                        {"witness", result.witness.members()},
                        {"diameter_bound", result.diameter_bound},
                        {"sets_enumerated", result.sets_seen},
                        {"exact", false}};
}

nlohmann::json oracle_front_report(const GraphSpec& spec, const OracleFront& result) {
  return nlohmann::json{{"front", front_to_json(spec, result.front)},
                        {"diameter_bound", result.diameter_bound},
                        {"sets_enumerated", result.sets_seen},
                        {"exact", false}};
}

nlohmann::json simulate_report(const GraphSpec& spec, const Weights& weights,
                               const VertexSet& set, const VisitStats& stats) {
  SurvivalReport survival = survival_report(stats);
  nlohmann::json curve = nlohmann::json::array();
  for (const auto& [k, count] : survival.survival)
    curve.push_back(nlohmann::json::array({k, count}));
  return nlohmann::json{{"beta_S", rat_to_string(beta_of_set(spec, weights, set))},
                        {"n_walks", stats.samples.size()},
                        {"cap", stats.cap},
                        {"censored", stats.censored},
                        {"mean", survival.mean},
                        {"survival", curve},
                        {"slope", survival.slope}};
}

nlohmann::json verify_report(const std::vector<examples::ExampleCheck>& checks) {
  nlohmann::json rows = nlohmann::json::array();
  bool all = true;
  for (const auto& c : checks) {
    all = all && c.passed;
    rows.push_back(nlohmann::json{{"example", c.example},
                                  {"check", c.check},
                                  {"passed", c.passed},
                                  {"detail", c.detail}});
  }
  return nlohmann::json{{"checks", rows}, {"all_passed", all}};
}

}  // namespace kappa0
