#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "wreath/selftest.hpp"

using namespace wreath;
using nlohmann::json;

namespace {

constexpr const char* kSchema = "wreath-chars/1";
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

HPolytope parse_polytope(const std::string& spec) {
  if (spec == "segment") return HPolytope::segment();
  auto colon = spec.find(':');
  std::string kind = spec.substr(0, colon);
  int m = colon == std::string::npos ? 1 : std::stoi(spec.substr(colon + 1));
  if (kind == "simplex") return HPolytope::simplex(m);
  if (kind == "cross") return HPolytope::cross(m);
  if (kind == "cube") return HPolytope::cube(m);
  throw CLI::ValidationError("--polytope", "expected segment|simplex:m|cross:m|cube:m");
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::string cur;
  for (char ch : s + ",") {
    if (ch == ',') {
      if (!cur.empty()) out.push_back(std::stoi(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  return out;
}

PartitionTuple parse_shape_arg(const std::string& text, int k) {
  // accepts both the JSON form [[3,1],[2]] and a bare comma list 3,2
  if (!text.empty() && text[0] != '[') return parse_partition_tuple_json("[" + text + "]", k);
  return parse_partition_tuple_json(text, k);
}

json decomposition_json(const Decomposition& dec) {
  json multiplicities = json::object();
  for (const auto& [gamma, mult] : dec.multiplicities) {
    if (mult.is_zero()) continue;
    multiplicities[gamma.json_str()] = mult.str();
  }
  return {{"schema", kSchema}, {"n", dec.n}, {"k", dec.k}, {"multiplicities", multiplicities}};
}

void print_decomposition(const Decomposition& dec, bool as_json) {
  if (as_json) {
    std::cout << decomposition_json(dec).dump(2) << "\n";
    return;
  }
  for (const auto& [gamma, mult] : dec.multiplicities) {
    if (mult.is_zero()) continue;
    std::cout << gamma.json_str() << "  " << mult.str() << "\n";
  }
}

struct RuleOptions {
  std::string rule, rule_file, mu, dvec, shape_tuple;
  int n = 0, k = 1, m = 1, d = 0;

  ColorRule build() const {
    if (!rule_file.empty()) {
      std::ifstream in(rule_file);
      if (!in) throw CLI::ValidationError("--rule-file", "cannot open " + rule_file);
      std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
      return parse_color_rule_json(text);
    }
    if (rule == "defining") return defining_rule(n, k);
    if (rule == "fxd" || rule == "defining-power") return defining_power(n, k, m);
    if (rule == "trivial") return trivial_rule(n, k);
    if (rule == "tabloid") return tabloid_rule(n, Partition(parse_int_list(mu)));
    if (rule == "natural") return natural_rule(n, k, d);
    if (rule == "monomial") {
      auto caps = parse_int_list(dvec);
      return monomial_rule(n, static_cast<int>(caps.size()), caps);
    }
    if (rule == "basis")
      return basis_rule(parse_partition_tuple_json(shape_tuple, k));
    throw CLI::ValidationError(
        "--rule", "expected defining|fxd|defining-power|trivial|tabloid|natural|monomial|basis");
  }
};

int cmd_chartable(int n, int k, bool as_json) {
  CharacterTable table(n, k);
  const auto& labels = table.labels();
  if (as_json) {
    json rows = json::array();
    for (const auto& gamma : labels) {
      json values = json::array();
      for (const auto& lambda : labels) values.push_back(table.value(gamma, lambda).str());
      rows.push_back({{"label", gamma.json_str()}, {"values", values}});
    }
    json classes = json::array(), sizes = json::array();
    for (const auto& lambda : labels) {
      classes.push_back(lambda.json_str());
      sizes.push_back(class_size(lambda).convert_to<long long>());
    }
    json out = {{"schema", kSchema}, {"n", n},         {"k", k},
                {"classes", classes}, {"class_sizes", sizes}, {"rows", rows}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  size_t width = 10;
  for (const auto& gamma : labels)
    for (const auto& lambda : labels) width = std::max(width, table.value(gamma, lambda).str().size());
  size_t label_width = 0;
  for (const auto& gamma : labels) label_width = std::max(label_width, gamma.str().size());
  std::cout << std::string(label_width, ' ');
  for (const auto& lambda : labels) {
    std::string s = lambda.str();
    std::cout << "  " << s << std::string(width > s.size() ? width - s.size() : 0, ' ');
  }
  std::cout << "\n";
  std::cout << std::string(label_width, ' ');
  for (const auto& lambda : labels) {
    std::string s = "|C|=" + class_size(lambda).str();
    std::cout << "  " << s << std::string(width > s.size() ? width - s.size() : 0, ' ');
  }
  std::cout << "\n";
  for (const auto& gamma : labels) {
    std::string l = gamma.str();
    std::cout << l << std::string(label_width - l.size(), ' ');
    for (const auto& lambda : labels) {
      std::string s = table.value(gamma, lambda).str();
      std::cout << "  " << s << std::string(width > s.size() ? width - s.size() : 0, ' ');
    }
    std::cout << "\n";
  }
  return 0;
}

int cmd_defining(int n, int k, int m, bool as_json) {
  auto dec = decompose(defining_power(n, k, m));
  bool consistent = true;
  json rows = json::array();
  for (const auto& [gamma, mult] : dec.multiplicities) {
    bool support = tensor_support(gamma, m);
    bool nonzero = !mult.is_zero();
    consistent = consistent && support == nonzero;
    if (as_json) {
      rows.push_back({{"shape", gamma.json_str()},
                      {"N", N_of(gamma)},
                      {"supported", support},
                      {"multiplicity", mult.str()}});
    } else {
      std::cout << gamma.json_str() << "  N=" << N_of(gamma) << "  "
                << (support ? "supported" : "absent") << "  mult=" << mult.str() << "\n";
    }
  }
  if (as_json) {
    json out = {{"schema", kSchema}, {"n", n}, {"k", k}, {"m", m},
                {"consistent", consistent}, {"rows", rows}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << (consistent ? "support formula agrees with the decomposition"
                             : "MISMATCH between the support formula and the decomposition")
              << "\n";
  }
  return consistent ? 0 : kExitVerification;
}

int cmd_ehrhart(const std::string& polytope, const std::string& weight, int dmax, bool as_json) {
  auto p = parse_polytope(polytope);
  std::vector<long long> w(p.dim(), 1);
  if (!weight.empty()) {
    auto list = parse_int_list(weight);
    if (static_cast<int>(list.size()) != p.dim())
      throw CLI::ValidationError("--weight", "needs one entry per dimension");
    w.assign(list.begin(), list.end());
  }
  json rows = json::array();
  for (int d = 0; d <= dmax; ++d) {
    Laurent l = refined_ehrhart(p, w, d);
    if (as_json)
      rows.push_back({{"d", d}, {"L", l.str()},
                      {"points", lattice_points(p, d).size()}});
    else
      std::cout << "d=" << d << "  " << l.str() << "\n";
  }
  if (as_json) {
    json out = {{"schema", kSchema}, {"polytope", p.tag()}, {"rows", rows}};
    std::cout << out.dump(2) << "\n";
  }
  return 0;
}

int cmd_frobenius(const std::string& polytope, int n, int k, int tmax, const std::string& weight,
                  bool as_json) {
  auto p = parse_polytope(polytope);
  std::vector<long long> w(p.dim(), 1);
  if (!weight.empty()) {
    auto list = parse_int_list(weight);
    if (static_cast<int>(list.size()) != p.dim())
      throw CLI::ValidationError("--weight", "needs one entry per dimension");
    w.assign(list.begin(), list.end());
  }
  print_decomposition(frobenius_decompose(p, n, k, w, tmax), as_json);
  return 0;
}

int cmd_euler_mahonian(int n, int k, int tmax, const std::string& shape, bool as_json) {
  std::vector<PartitionTuple> shapes;
  if (shape.empty())
    shapes = enumerate_tuples(n, k);
  else
    shapes.push_back(parse_shape_arg(shape, k));
  bool all_ok = true;
  json rows = json::array();
  for (const auto& gamma : shapes) {
    auto report = verify_euler_mahonian(gamma, tmax);
    all_ok = all_ok && report.ok();
    if (as_json) {
      rows.push_back({{"shape", gamma.json_str()},
                      {"numerator", report.numerator.str()},
                      {"smoothing", report.smoothing_ok},
                      {"telescope", report.telescope_ok},
                      {"positive", report.positive}});
    } else {
      std::cout << gamma.json_str() << "  " << (report.ok() ? "ok" : "FAIL")
                << "  numerator: " << report.numerator.str() << "\n";
    }
  }
  if (as_json) {
    json out = {{"schema", kSchema}, {"n", n}, {"k", k}, {"tmax", tmax},
                {"verified", all_ok}, {"rows", rows}};
    std::cout << out.dump(2) << "\n";
  }
  return all_ok ? 0 : kExitVerification;
}

int cmd_stats(int n, int k, const std::string& perm, long long budget, bool as_json) {
  if (!perm.empty()) {
    auto sigma = parse_colored_permutation(perm, n, k);
    auto stats = wreath_stats_perm(sigma);
    if (as_json) {
      json out = {{"schema", kSchema},
                  {"element", sigma.json_str()},
                  {"cycles", sigma.str()},
                  {"class", class_type(sigma).json_str()},
                  {"wdes", stats.wdes},
                  {"wcomaj", stats.wcomaj}};
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "cycles: " << sigma.str() << "\nclass:  " << class_type(sigma).json_str()
                << "\nwdes=" << stats.wdes << " wcomaj=" << stats.wcomaj << "\n";
    }
    return 0;
  }
  Laurent dist(1, {"q", "t"});
  for (const auto& sigma : enumerate_group(n, k, budget)) {
    auto stats = wreath_stats_perm(sigma);
    dist += Laurent::monomial(1, {"q", "t"},
                              {static_cast<int>(stats.wcomaj), static_cast<int>(stats.wdes)},
                              Rational(1));
  }
  if (as_json) {
    json out = {{"schema", kSchema}, {"n", n}, {"k", k}, {"distribution", dist.str()}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << dist.str() << "\n";
  }
  return 0;
}

json tableau_json(const Tableau& t) {
  json rows = json::array();
  for (const auto& comp : t.entries) rows.push_back(comp);
  return rows;
}

int cmd_rsk(int n, int k, const std::string& perm, bool as_json) {
  auto sigma = parse_colored_permutation(perm, n, k);
  auto [P, Q] = colored_rsk(sigma);
  auto ps = wreath_stats_perm(sigma);
  auto qs = wreath_stats_tableau(Q);
  if (as_json) {
    json out = {{"schema", kSchema},
                {"element", sigma.json_str()},
                {"shape", P.shape.json_str()},
                {"P", tableau_json(P)},
                {"Q", tableau_json(Q)},
                {"wdes", ps.wdes},
                {"wcomaj", ps.wcomaj},
                {"Q_wdes", qs.wdes},
                {"Q_wcomaj", qs.wcomaj}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "shape: " << P.shape.json_str() << "\nP: " << P.str() << "\nQ: " << Q.str()
              << "\nwdes(sigma)=" << ps.wdes << " wcomaj(sigma)=" << ps.wcomaj
              << "  wdes(Q)=" << qs.wdes << " wcomaj(Q)=" << qs.wcomaj << "\n";
  }
  return ps.wdes == qs.wdes && ps.wcomaj == qs.wcomaj ? 0 : kExitVerification;
}

int cmd_involution_verify(int n, int k, long long budget, bool as_json) {
  Laurent one = Laurent::constant(k, {}, Rational(1));
  std::vector<ColorRule> rules = {
      defining_rule(n, k),
      ColorRule(n, k, {}, {ColorSpec("a", n, 1 % k, one)}),
      ColorRule(n, k, {},
                {ColorSpec("a", n, 0, one), ColorSpec("b", std::max(1, n - 1), k - 1, one)}),
  };
  Rational order(factorial(n) * int_pow(k, n));
  json failures = json::array();
  long long objects_seen = 0;
  for (size_t ri = 0; ri < rules.size(); ++ri) {
    const auto& rule = rules[ri];
    for (const auto& gamma : enumerate_tuples(n, k)) {
      Laurent total(rule.k, rule.vars), final_sum(rule.k, rule.vars);
      auto objects = enumerate_objects(gamma, rule, budget);
      objects_seen += static_cast<long long>(objects.size());
      for (const auto& obj : objects) {
        Laurent w = object_weight(obj, rule);
        total += w;
        auto image = psi(obj);
        if (!(psi(image) == obj) ||
            (!(image == obj) && !(object_weight(image, rule) == -w))) {
          failures.push_back({{"rule", ri},
                              {"shape", gamma.json_str()},
                              {"object", render_object(obj, rule)},
                              {"reason", "psi involution/sign failure"}});
          continue;
        }
        if (is_psi_fixed(obj) && is_psi_prime_fixed(obj, rule)) final_sum += w;
      }
      Laurent target = ssyt_k_sum(gamma, rule).scaled(order);
      if (!(total == target) || !(final_sum == target)) {
        failures.push_back({{"rule", ri},
                            {"shape", gamma.json_str()},
                            {"reason", "telescoping sum mismatch"},
                            {"total", total.str()},
                            {"final", final_sum.str()},
                            {"target", target.str()}});
      }
    }
  }
  bool ok = failures.empty();
  if (as_json) {
    json out = {{"schema", kSchema}, {"n", n},      {"k", k},
                {"objects", objects_seen}, {"verified", ok}, {"failures", failures}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "checked " << objects_seen << " objects: "
              << (ok ? "involution audit passed" : "involution audit FAILED") << "\n";
    if (!ok) std::cout << failures.dump(2) << "\n";
  }
  return ok ? 0 : kExitVerification;
}

int cmd_selftest(bool as_json) {
  auto results = run_acceptance(as_json ? nullptr : &std::cerr);
  if (as_json) {
    json rows = json::array();
    for (const auto& r : results)
      rows.push_back({{"criterion", r.number},
                      {"name", r.name},
                      {"passed", r.passed},
                      {"detail", r.detail},
                      {"seconds", r.seconds}});
    bool ok = true;
    for (const auto& r : results) ok = ok && r.passed;
    json out = {{"schema", kSchema}, {"passed", ok}, {"criteria", rows}};
    std::cout << out.dump(2) << "\n";
    return ok ? 0 : kExitVerification;
  }
  return print_acceptance_report(results, std::cout) == 0 ? 0 : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact class-function computations for Z_k wr S_n via color rules"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");
  long long budget = 1'000'000;
  app.add_option("--budget", budget, "largest group order that may be enumerated");

  int n = 2, k = 2, m = 1, dmax = 5, tmax = 6;
  std::string polytope = "segment", weight, shape, perm;
  RuleOptions ropts;

  auto* chartable = app.add_subcommand("chartable", "irreducible character table");
  chartable->add_option("--n", n)->required();
  chartable->add_option("--k", k)->required();

  auto* dec = app.add_subcommand("decompose", "irreducible decomposition of a color rule");
  dec->add_option("--rule", ropts.rule, "defining|fxd|trivial|tabloid|natural|monomial|basis");
  dec->add_option("--rule-file", ropts.rule_file, "ColorRule JSON file");
  dec->add_option("--n", ropts.n)->required();
  dec->add_option("--k", ropts.k);
  dec->add_option("--m", ropts.m, "tensor power for fxd/defining-power");
  dec->add_option("--d", ropts.d, "bound for the natural rule");
  dec->add_option("--mu", ropts.mu, "tabloid content, e.g. 3,2");
  dec->add_option("--dvec", ropts.dvec, "monomial caps, e.g. 2,1");
  dec->add_option("--shape-tuple", ropts.shape_tuple, "basis rule shape, e.g. [[2],[1]]");
  dec->add_option("--shape", shape, "report one shape only, e.g. [3,2] or [[2],[1]]");

  auto* def = app.add_subcommand("defining", "defining tensor powers and their support");
  def->add_option("--n", n)->required();
  def->add_option("--k", k)->required();
  def->add_option("--m", m)->required();

  auto* ehr = app.add_subcommand("ehrhart", "refined Ehrhart polynomials");
  ehr->add_option("--polytope", polytope, "segment|simplex:m|cross:m|cube:m")->required();
  ehr->add_option("--weight", weight, "weight vector, e.g. 1,2");
  ehr->add_option("--dmax", dmax);

  auto* frob = app.add_subcommand("frobenius", "bigraded decomposition of K[P^n]");
  frob->add_option("--polytope", polytope)->required();
  frob->add_option("--n", n)->required();
  frob->add_option("--k", k)->required();
  frob->add_option("--tmax", tmax);
  frob->add_option("--weight", weight);

  auto* em = app.add_subcommand("euler-mahonian", "verify the equivariant identities");
  em->add_option("--n", n)->required();
  em->add_option("--k", k)->required();
  em->add_option("--tmax", tmax);
  em->add_option("--shape", shape, "one shape only");

  auto* st = app.add_subcommand("stats", "wreath descent statistics");
  st->add_option("--n", n)->required();
  st->add_option("--k", k)->required();
  st->add_option("--perm", perm, "cycles 'u1 2 u0 1' or JSON element");

  auto* rsk = app.add_subcommand("rsk", "colored RSK correspondence");
  rsk->add_option("--n", n)->required();
  rsk->add_option("--k", k)->required();
  rsk->add_option("--perm", perm)->required();

  auto* inv = app.add_subcommand("involution-verify", "audit the cancellation proof");
  inv->add_option("--n", n)->required();
  inv->add_option("--k", k)->required();

  auto* self = app.add_subcommand("selftest", "run every acceptance criterion");
  (void)self;

  // global flags like --json may follow the subcommand name
  for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_name() == "CallForHelp" ? 0 : kExitUsage;
  }

  try {
    if (chartable->parsed()) return cmd_chartable(n, k, as_json);
    if (dec->parsed()) {
      auto rule = ropts.build();
      auto result = decompose(rule);
      if (!shape.empty()) {
        auto gamma = parse_shape_arg(shape, rule.k);
        const Laurent& mult = result.at(gamma);
        if (as_json) {
          json out = {{"schema", kSchema}, {"shape", gamma.json_str()},
                      {"multiplicity", mult.str()}};
          std::cout << out.dump(2) << "\n";
        } else {
          std::cout << mult.str() << "\n";
        }
        return 0;
      }
      print_decomposition(result, as_json);
      return 0;
    }
    if (def->parsed()) return cmd_defining(n, k, m, as_json);
    if (ehr->parsed()) return cmd_ehrhart(polytope, weight, dmax, as_json);
    if (frob->parsed()) return cmd_frobenius(polytope, n, k, tmax, weight, as_json);
    if (em->parsed()) return cmd_euler_mahonian(n, k, tmax, shape, as_json);
    if (st->parsed()) return cmd_stats(n, k, perm, budget, as_json);
    if (rsk->parsed()) return cmd_rsk(n, k, perm, as_json);
    if (inv->parsed()) return cmd_involution_verify(n, k, budget, as_json);
    if (self->parsed()) return cmd_selftest(as_json);
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "invalid parameters: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "invalid parameters: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
