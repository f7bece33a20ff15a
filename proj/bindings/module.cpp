#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wreath/selftest.hpp"

namespace py = pybind11;
using namespace wreath;

namespace {

PartitionTuple shape_from(const std::vector<std::vector<int>>& comps, int k) {
  std::vector<Partition> parts;
  for (const auto& c : comps) parts.push_back(Partition(c));
  while (static_cast<int>(parts.size()) < k) parts.push_back(Partition{});
  return PartitionTuple(k, parts);
}

std::vector<std::vector<int>> shape_to(const PartitionTuple& t) {
  std::vector<std::vector<int>> out;
  for (const auto& c : t.comps) out.push_back(c.parts);
  return out;
}

py::dict decomposition_to(const Decomposition& dec) {
  py::dict out;
  for (const auto& [gamma, mult] : dec.multiplicities) {
    if (mult.is_zero()) continue;
    out[py::cast(gamma.json_str())] = mult.str();
  }
  return out;
}

ColorRule named_rule(const std::string& name, int n, int k, int m, int d,
                     const std::vector<int>& mu, const std::vector<int>& caps,
                     const std::vector<std::vector<int>>& shape) {
  if (name == "defining") return defining_rule(n, k);
  if (name == "fxd" || name == "defining-power") return defining_power(n, k, m);
  if (name == "trivial") return trivial_rule(n, k);
  if (name == "tabloid") return tabloid_rule(n, Partition(mu));
  if (name == "natural") return natural_rule(n, k, d);
  if (name == "monomial") return monomial_rule(n, static_cast<int>(caps.size()), caps);
  if (name == "basis") return basis_rule(shape_from(shape, k));
  throw std::invalid_argument("unknown rule name: " + name);
}

HPolytope named_polytope(const std::string& spec) {
  if (spec == "segment") return HPolytope::segment();
  auto colon = spec.find(':');
  std::string kind = spec.substr(0, colon);
  int m = colon == std::string::npos ? 1 : std::stoi(spec.substr(colon + 1));
  if (kind == "simplex") return HPolytope::simplex(m);
  if (kind == "cross") return HPolytope::cross(m);
  if (kind == "cube") return HPolytope::cube(m);
  throw std::invalid_argument("unknown polytope: " + spec);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact class functions of Z_k wr S_n defined by color rules";

  py::register_exception<BudgetError>(m, "BudgetError");

  m.def("partitions", [](int n) {
    std::vector<std::vector<int>> out;
    for (const auto& p : enumerate_partitions(n)) out.push_back(p.parts);
    return out;
  });
  m.def("partition_tuples", [](int n, int k) {
    std::vector<std::vector<std::vector<int>>> out;
    for (const auto& t : enumerate_tuples(n, k)) out.push_back(shape_to(t));
    return out;
  });
  m.def("class_size", [](const std::vector<std::vector<int>>& lam, int k) {
    return class_size(shape_from(lam, k)).convert_to<long long>();
  });

  m.def("character_value",
        [](const std::vector<std::vector<int>>& gamma, const std::vector<std::vector<int>>& lam,
           int k) { return irreducible_value(shape_from(gamma, k), shape_from(lam, k)).str(); });
  m.def("character_table", [](int n, int k) {
    CharacterTable table(n, k);
    py::dict out;
    for (const auto& gamma : table.labels()) {
      py::dict row;
      for (const auto& lambda : table.labels())
        row[py::cast(lambda.json_str())] = table.value(gamma, lambda).str();
      out[py::cast(gamma.json_str())] = row;
    }
    return out;
  });

  m.def("decompose_rule",
        [](const std::string& name, int n, int k, int m, int d, const std::vector<int>& mu,
           const std::vector<int>& caps, const std::vector<std::vector<int>>& shape) {
          return decomposition_to(decompose(named_rule(name, n, k, m, d, mu, caps, shape)));
        },
        py::arg("name"), py::arg("n"), py::arg("k") = 1, py::arg("m") = 1, py::arg("d") = 0,
        py::arg("mu") = std::vector<int>{}, py::arg("caps") = std::vector<int>{},
        py::arg("shape") = std::vector<std::vector<int>>{});
  m.def("decompose_rule_json", [](const std::string& rule_json) {
    return decomposition_to(decompose(parse_color_rule_json(rule_json)));
  });
  m.def("evaluate_rule",
        [](const std::string& name, int n, int k, const std::vector<std::vector<int>>& lam, int m,
           int d, const std::vector<int>& mu, const std::vector<int>& caps,
           const std::vector<std::vector<int>>& shape) {
          return evaluate(named_rule(name, n, k, m, d, mu, caps, shape), shape_from(lam, k)).str();
        },
        py::arg("name"), py::arg("n"), py::arg("k"), py::arg("lam"), py::arg("m") = 1,
        py::arg("d") = 0, py::arg("mu") = std::vector<int>{},
        py::arg("caps") = std::vector<int>{}, py::arg("shape") = std::vector<std::vector<int>>{});
  m.def("tensor_support", [](const std::vector<std::vector<int>>& gamma, int k, int m) {
    return tensor_support(shape_from(gamma, k), m);
  });

  m.def("refined_ehrhart",
        [](const std::string& polytope, const std::vector<long long>& weight, int d) {
          return refined_ehrhart(named_polytope(polytope), weight, d).str();
        });
  m.def("q_binomial", [](int top, int bottom) { return q_binomial(top, bottom).str(); });
  m.def("frobenius_decompose",
        [](const std::string& polytope, int n, int k, const std::vector<long long>& weight,
           int tmax) {
          return decomposition_to(frobenius_decompose(named_polytope(polytope), n, k, weight, tmax));
        });

  m.def("wreath_stats",
        [](int n, int k, const std::vector<int>& images, const std::vector<int>& colors) {
          auto stats = wreath_stats_perm(ColoredPermutation(n, k, images, colors));
          return py::make_tuple(stats.wdes, stats.wcomaj);
        });
  m.def("colored_rsk",
        [](int n, int k, const std::vector<int>& images, const std::vector<int>& colors) {
          auto [p, q] = colored_rsk(ColoredPermutation(n, k, images, colors));
          return py::make_tuple(p.shape.json_str(), p.entries, q.entries);
        });
  m.def("cycles", [](int n, int k, const std::vector<int>& images, const std::vector<int>& colors) {
    return ColoredPermutation(n, k, images, colors).str();
  });
  m.def("class_type",
        [](int n, int k, const std::vector<int>& images, const std::vector<int>& colors) {
          return shape_to(class_type(ColoredPermutation(n, k, images, colors)));
        });

  m.def("verify_multischur", &verify_multischur);
  m.def("verify_euler_mahonian",
        [](const std::vector<std::vector<int>>& gamma, int k, int tmax) {
          auto report = verify_euler_mahonian(shape_from(gamma, k), tmax);
          py::dict out;
          out["ok"] = report.ok();
          out["numerator"] = report.numerator.str();
          return out;
        });

  m.def("run_acceptance", []() {
    py::list out;
    for (const auto& r : run_acceptance(nullptr)) {
      py::dict row;
      row["criterion"] = r.number;
      row["name"] = r.name;
      row["passed"] = r.passed;
      row["detail"] = r.detail;
      out.append(row);
    }
    return out;
  });
}
