// Command line front end: exact kappa0 solvers, the brute-force oracle,
// the golden example suite and the reinforced-walk simulator.
//
// Exit codes: 0 success (exact), 2 inexact due to a budget, 1 error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "kappa0/examples.hpp"
#include "kappa0/formula.hpp"
#include "kappa0/reports.hpp"

namespace {

using namespace kappa0;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInexact = 2;

struct SpecArgs {
  std::string spec_path;
  std::vector<std::string> alpha_overrides;

  void attach(CLI::App* cmd, bool required = true) {
    auto* opt = cmd->add_option("--spec", spec_path, "graph spec JSON file");
    if (required) opt->required();
    cmd->add_option("--alpha", alpha_overrides,
                    "weight override i=p/q (repeatable; must stay positive)");
  }

  GraphSpec load(std::optional<Weights>& weights) const {
    SpecFile file = load_spec_file(spec_path);
    std::vector<std::optional<Rat>> alpha(file.spec.arity());
    if (file.has_weights) {
      for (std::size_t k = 0; k < alpha.size(); ++k) alpha[k] = file.alpha[k];
    }
    for (const std::string& text : alpha_overrides) {
      auto eq = text.find('=');
      if (eq == std::string::npos)
        throw std::invalid_argument("--alpha expects i=p/q, got: " + text);
      int offset = std::stoi(text.substr(0, eq));
      int index = file.spec.offset_index(offset);
      if (index < 0)
        throw std::invalid_argument("--alpha offset " + std::to_string(offset) +
                                    " is not in the support");
      Rat value = rat_from_string(text.substr(eq + 1));
      if (value <= 0) throw std::invalid_argument("--alpha values must be positive");
      alpha[static_cast<std::size_t>(index)] = value;
    }
    bool all = true, any = false;
    for (const auto& a : alpha) {
      all = all && a.has_value();
      any = any || a.has_value();
    }
    if (all) {
      std::vector<Rat> values;
      for (const auto& a : alpha) values.push_back(*a);
      weights = Weights(file.spec, values);
    } else if (any) {
      throw std::invalid_argument("weights cover only part of the support");
    }
    return file.spec;
  }
};

VertexSet parse_set(const std::string& text) {
  std::vector<int> members;
  std::string token;
  for (char c : text) {
    if (c == ',') {
      if (!token.empty()) members.push_back(std::stoi(token));
      token.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      token.push_back(c);
    }
  }
  if (!token.empty()) members.push_back(std::stoi(token));
  return VertexSet(std::move(members));
}

void emit(const nlohmann::json& report, const std::string& format) {
  if (format == "json") {
    std::cout << report.dump(2) << '\n';
    return;
  }
  // text: one "key: value" line per top-level field, keys already sorted
  for (auto it = report.begin(); it != report.end(); ++it) {
    std::cout << it.key() << ": "
              << (it.value().is_string() ? it.value().get<std::string>() : it.value().dump())
              << '\n';
  }
}

int run(int argc, char** argv) {
  CLI::App app{"exact minimal exit weight of strongly connected sets on shift-invariant "
               "weighted digraphs over the integers"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "output format: text, json or latex")
      ->check(CLI::IsMember({"text", "json", "latex"}));

  // beta
  auto* beta_cmd = app.add_subcommand("beta", "exit weight of one vertex set");
  SpecArgs beta_spec;
  beta_spec.attach(beta_cmd);
  std::string beta_set;
  beta_cmd->add_option("--set", beta_set, "comma separated vertex list")->required();

  // kappa0
  auto* kappa_cmd = app.add_subcommand("kappa0", "minimal exit weight");
  SpecArgs kappa_spec;
  kappa_spec.attach(kappa_cmd);
  std::string mode = "numeric";
  kappa_cmd->add_option("--mode", mode, "numeric, symbolic or oracle")
      ->check(CLI::IsMember({"numeric", "symbolic", "oracle"}));
  int max_diameter = 12;
  kappa_cmd->add_option("--max-diameter", max_diameter, "oracle diameter bound (default 12)");
  std::uint64_t max_states = SolveOptions{}.max_states;
  kappa_cmd->add_option("--max-states", max_states, "solver state budget");

  // verify-examples
  auto* verify_cmd = app.add_subcommand("verify-examples", "run the golden example suite");
  examples::VerifyOptions verify_options;
  verify_cmd->add_option("--only", verify_options.only, "restrict to one example id prefix");
  verify_cmd->add_option("--claims-diameter", verify_options.claims_diameter,
                         "exhaustive diameter for the example6 claims (default 24)");
  verify_cmd->add_option("--draws", verify_options.draws, "random weight draws per identity");
  verify_cmd->add_option("--seed", verify_options.seed, "seed for the random draws");

  // simulate
  auto* sim_cmd = app.add_subcommand("simulate", "reinforced random walk visit statistics");
  SpecArgs sim_spec;
  sim_spec.attach(sim_cmd);
  std::string sim_set;
  sim_cmd->add_option("--set", sim_set, "comma separated vertex list")->required();
  std::uint64_t n_walks = 10000, cap = 1000000, seed = 42;
  sim_cmd->add_option("--walks", n_walks, "number of walks (default 10000)");
  sim_cmd->add_option("--cap", cap, "step budget per walk (default 1e6)");
  sim_cmd->add_option("--seed", seed, "random seed (default 42)");

  CLI11_PARSE(app, argc, argv);

  if (beta_cmd->parsed()) {
    std::optional<Weights> weights;
    GraphSpec spec = beta_spec.load(weights);
    if (!weights) throw std::invalid_argument("beta requires weights");
    emit(beta_report(spec, *weights, parse_set(beta_set)), format);
    return kExitOk;
  }

  if (kappa_cmd->parsed()) {
    std::optional<Weights> weights;
    GraphSpec spec = kappa_spec.load(weights);
    if (mode == "numeric") {
      if (!weights) throw std::invalid_argument("numeric mode requires weights");
      NumericResult result = solve_numeric(spec, *weights, SolveOptions{max_states});
      emit(numeric_report(result), format);
      return result.exact ? kExitOk : kExitInexact;
    }
    if (mode == "symbolic") {
      SymbolicResult result = solve_symbolic(spec, SolveOptions{max_states});
      if (format == "latex") {
        std::cout << render(KappaFormula::from_front(spec, result.front), RenderFormat::latex)
                  << '\n';
      } else {
        emit(symbolic_report(spec, result, weights ? &*weights : nullptr), format);
      }
      return result.exact ? kExitOk : kExitInexact;
    }
    // oracle: value when weights are present, candidate front otherwise.
    EnumerationBudget budget{max_diameter, std::nullopt};
    if (weights) {
      emit(oracle_value_report(oracle_kappa0(spec, *weights, budget)), format);
    } else {
      emit(oracle_front_report(spec, oracle_pareto(spec, budget)), format);
    }
    return kExitInexact;  // oracle results are diameter-restricted by construction
  }

  if (verify_cmd->parsed()) {
    auto checks = examples::verify_examples(verify_options);
    nlohmann::json report = verify_report(checks);
    const bool all_passed = report.at("all_passed").get<bool>();
    if (format == "json") {
      std::cout << report.dump(2) << '\n';
    } else {
      for (const auto& c : checks) {
        std::cout << (c.passed ? "[PASS] " : "[FAIL] ") << c.example << ": " << c.check;
        if (!c.detail.empty()) std::cout << " -- " << c.detail;
        std::cout << '\n';
      }
      std::cout << (all_passed ? "all checks passed" : "FAILURES present") << '\n';
    }
    return all_passed ? kExitOk : kExitError;
  }

  if (sim_cmd->parsed()) {
    std::optional<Weights> weights;
    GraphSpec spec = sim_spec.load(weights);
    if (!weights) throw std::invalid_argument("simulate requires weights");
    VertexSet set = parse_set(sim_set);
    VisitStats stats = estimate_visits(spec, *weights, set, n_walks, cap, seed);
    emit(simulate_report(spec, *weights, set, stats), format);
    return kExitOk;
  }

  return kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
}
