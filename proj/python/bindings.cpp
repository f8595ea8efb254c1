#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "kappa0/examples.hpp"
#include "kappa0/formula.hpp"
#include "kappa0/reports.hpp"

namespace py = pybind11;
using namespace kappa0;

namespace {

py::object json_to_py(const nlohmann::json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it)
        out[py::str(it.key())] = json_to_py(it.value());
      return out;
    }
    case nlohmann::json::value_t::array: {
      py::list out;
      for (const auto& v : j) out.append(json_to_py(v));
      return out;
    }
    case nlohmann::json::value_t::string:
      return py::str(j.get<std::string>());
    case nlohmann::json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer:
      return py::int_(j.get<std::int64_t>());
    case nlohmann::json::value_t::number_unsigned:
      return py::int_(j.get<std::uint64_t>());
    case nlohmann::json::value_t::number_float:
      return py::float_(j.get<double>());
    default:
      return py::none();
  }
}

Rat rat_from_py(const py::handle& value) {
  if (py::isinstance<py::str>(value)) return rat_from_string(value.cast<std::string>());
  if (py::isinstance<py::int_>(value)) return Rat(value.cast<long long>());
  if (py::isinstance<py::float_>(value))
    return rat_from_string(nlohmann::json(value.cast<double>()).dump());
  throw py::type_error("weights must be 'p/q' strings, ints or floats");
}

Weights weights_from_dict(const GraphSpec& spec, const py::dict& alpha) {
  std::vector<Rat> values(spec.arity());
  std::vector<bool> seen(spec.arity(), false);
  for (auto item : alpha) {
    int offset = item.first.cast<int>();
    int index = spec.offset_index(offset);
    if (index < 0) throw py::value_error("offset not in the support");
    values[static_cast<std::size_t>(index)] = rat_from_py(item.second);
    seen[static_cast<std::size_t>(index)] = true;
  }
  for (bool s : seen)
    if (!s) throw py::value_error("weights must cover the whole support");
  return Weights(spec, values);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact minimal exit weight of finite strongly connected sets on "
            "shift-invariant weighted digraphs over the integers";

  py::class_<GraphSpec>(m, "GraphSpec")
      .def(py::init<int, int, std::vector<int>>(), py::arg("L"), py::arg("R"),
           py::arg("support"))
      .def_property_readonly("L", &GraphSpec::left)
      .def_property_readonly("R", &GraphSpec::right)
      .def_property_readonly("support",
                             [](const GraphSpec& s) { return s.support(); })
      .def("__repr__", [](const GraphSpec& s) {
        nlohmann::json j = spec_to_json(s, nullptr);
        return "GraphSpec(L=" + std::to_string(s.left()) + ", R=" + std::to_string(s.right()) +
               ", support=" + nlohmann::json(s.support()).dump() + ")";
      });

  m.def("exit_vector",
        [](const GraphSpec& spec, const std::vector<int>& members) {
          ExitVector x = exit_vector(spec, VertexSet(members));
          py::dict out;
          for (std::size_t k = 0; k < x.support.size(); ++k)
            out[py::int_(x.support[k])] = x.counts[k];
          return out;
        },
        py::arg("spec"), py::arg("members"),
        "per-offset exit counts x_i = #{z in S : z+i not in S}");

  m.def("beta",
        [](const GraphSpec& spec, const py::dict& alpha, const std::vector<int>& members) {
          Weights w = weights_from_dict(spec, alpha);
          return rat_to_string(beta_of_set(spec, w, VertexSet(members)));
        },
        py::arg("spec"), py::arg("alpha"), py::arg("members"),
        "total weight exiting the set, as an exact 'p/q' string");

  m.def("is_strongly_connected",
        [](const GraphSpec& spec, const std::vector<int>& members) {
          return is_strongly_connected(spec, VertexSet(members));
        },
        py::arg("spec"), py::arg("members"));

  m.def("half_sums",
        [](const GraphSpec& spec, const py::dict& alpha) {
          Weights w = weights_from_dict(spec, alpha);
          HalfSums sums = half_sums(spec, w);
          py::dict out;
          out["c_plus"] = rat_to_string(sums.c_plus);
          out["c_minus"] = rat_to_string(sums.c_minus);
          out["d_plus"] = rat_to_string(sums.d_plus);
          out["d_minus"] = rat_to_string(sums.d_minus);
          return out;
        },
        py::arg("spec"), py::arg("alpha"));

  m.def("lower_bound",
        [](const GraphSpec& spec, const py::dict& alpha) {
          return rat_to_string(lower_bound(spec, weights_from_dict(spec, alpha)));
        },
        py::arg("spec"), py::arg("alpha"), "c_plus + c_minus");

  m.def("solve_numeric",
        [](const GraphSpec& spec, const py::dict& alpha, std::uint64_t max_states) {
          Weights w = weights_from_dict(spec, alpha);
          return json_to_py(numeric_report(solve_numeric(spec, w, SolveOptions{max_states})));
        },
        py::arg("spec"), py::arg("alpha"), py::arg("max_states") = SolveOptions{}.max_states,
        "exact kappa0 with witness");

  m.def("solve_symbolic",
        [](const GraphSpec& spec, std::uint64_t max_states) {
          SymbolicResult result = solve_symbolic(spec, SolveOptions{max_states});
          return json_to_py(symbolic_report(spec, result, nullptr));
        },
        py::arg("spec"), py::arg("max_states") = SolveOptions{}.max_states,
        "Pareto-minimal exit vectors and the induced min formula");

  m.def("oracle_kappa0",
        [](const GraphSpec& spec, const py::dict& alpha, int max_diameter) {
          Weights w = weights_from_dict(spec, alpha);
          return json_to_py(
              oracle_value_report(oracle_kappa0(spec, w, EnumerationBudget{max_diameter, {}})));
        },
        py::arg("spec"), py::arg("alpha"), py::arg("max_diameter"),
        "brute-force minimum over sets of bounded diameter");

  m.def("oracle_pareto",
        [](const GraphSpec& spec, int max_diameter) {
          return json_to_py(
              oracle_front_report(spec, oracle_pareto(spec, EnumerationBudget{max_diameter, {}})));
        },
        py::arg("spec"), py::arg("max_diameter"));

  m.def("path_probability_derrw",
        [](const GraphSpec& spec, const py::dict& alpha, const std::vector<int>& path) {
          return rat_to_string(path_probability_derrw(spec, weights_from_dict(spec, alpha), path));
        },
        py::arg("spec"), py::arg("alpha"), py::arg("path"));

  m.def("path_probability_annealed",
        [](const GraphSpec& spec, const py::dict& alpha, const std::vector<int>& path) {
          return rat_to_string(
              path_probability_annealed(spec, weights_from_dict(spec, alpha), path));
        },
        py::arg("spec"), py::arg("alpha"), py::arg("path"));

  m.def("estimate_visits",
        [](const GraphSpec& spec, const py::dict& alpha, const std::vector<int>& members,
           std::uint64_t n_walks, std::uint64_t cap, std::uint64_t seed) {
          Weights w = weights_from_dict(spec, alpha);
          VertexSet set(members);
          VisitStats stats = estimate_visits(spec, w, set, n_walks, cap, seed);
          return json_to_py(simulate_report(spec, w, set, stats));
        },
        py::arg("spec"), py::arg("alpha"), py::arg("members"), py::arg("n_walks") = 10000,
        py::arg("cap") = 1000000, py::arg("seed") = 42,
        "reinforced-walk visit statistics with survival curve and tail slope");

  m.def("verify_examples",
        [](const std::string& only, int claims_diameter, std::uint64_t draws,
           std::uint64_t seed) {
          examples::VerifyOptions options;
          options.only = only;
          options.claims_diameter = claims_diameter;
          options.draws = draws;
          options.seed = seed;
          return json_to_py(verify_report(examples::verify_examples(options)));
        },
        py::arg("only") = "", py::arg("claims_diameter") = 24, py::arg("draws") = 100,
        py::arg("seed") = 12345, "run the golden example suite");
}
