#pragma once

#include <nlohmann/json.hpp>

#include "kappa0/derrw.hpp"
#include "kappa0/examples.hpp"
#include "kappa0/graph.hpp"
#include "kappa0/oracle.hpp"
#include "kappa0/solver.hpp"

namespace kappa0 {

// JSON report builders shared by the command line tool and the Python
// bindings; rationals are rendered as "p/q" strings.

nlohmann::json front_to_json(const GraphSpec& spec, const ParetoFront& front);

nlohmann::json beta_report(const GraphSpec& spec, const Weights& weights, const VertexSet& set);

nlohmann::json numeric_report(const NumericResult& result);
nlohmann::json symbolic_report(const GraphSpec& spec, const SymbolicResult& result,
                               const Weights* weights);
nlohmann::json oracle_value_report(const OracleValue& result);
nlohmann::json oracle_front_report(const GraphSpec& spec, const OracleFront& result);

nlohmann::json simulate_report(const GraphSpec& spec, const Weights& weights,
                               const VertexSet& set, const VisitStats& stats);

nlohmann::json verify_report(const std::vector<examples::ExampleCheck>& checks);

}  // namespace kappa0
