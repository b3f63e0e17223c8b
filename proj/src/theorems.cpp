#include "forcekit/theorems.hpp"

#include <algorithm>
#include <sstream>

#include "forcekit/formulas.hpp"

namespace forcekit {

namespace {

std::string describe(const Graph& g, const std::string& label) {
  if (!label.empty()) return label;
  std::ostringstream out;
  out << "n=" << g.order() << " m=" << g.size();
  return out.str();
}

std::string flag(bool b) { return b ? "true" : "false"; }

// Biconditional: `property` is what the graph structure says, `value_side`
// what the computed parameter says.
TheoremReport iff(std::string theorem, std::string graph, bool property, bool value_side) {
  return {std::move(theorem), std::move(graph), flag(property), flag(value_side), property == value_side};
}

TheoremReport holds(std::string theorem, std::string graph, bool ok, const std::string& detail) {
  return {std::move(theorem), std::move(graph), "holds", ok ? "holds" : "violated: " + detail, ok};
}

TheoremReport equal(std::string theorem, std::string graph, long expected, long observed) {
  return {std::move(theorem), std::move(graph), std::to_string(expected), std::to_string(observed),
          expected == observed};
}

bool is_two_isolated(const Graph& g) { return g.order() == 2 && g.size() == 0; }

int min_part(const FamilySpec& spec) { return std::min(spec.param(0), spec.param(1)); }

bool single_table_family(const FamilySpec& spec) { return !spec.is_union() && in_table51(spec); }

}  // namespace

std::vector<TheoremReport> check_isolated_characterizations(const Graph& g, int F, int Fplus,
                                                            const std::string& label) {
  const std::string name = describe(g, label);
  const int n = g.order();
  const bool isolated = has_isolated_vertex(g);
  return {iff("Obs 3.4", name, isolated, F == n - 1), iff("Thm 4.2", name, isolated, Fplus == n - 1)};
}

std::vector<TheoremReport> check_module_characterizations(const Graph& g, int F, int Fplus,
                                                          const std::string& label) {
  if (!is_connected(g)) throw CheckError("module characterizations need a connected graph");
  const std::string name = describe(g, label);
  const int n = g.order();
  const auto modules = find_modules_order2(g);
  const bool any_adjacent =
      std::any_of(modules.begin(), modules.end(), [](const ModulePair& p) { return p.adjacent; });
  return {iff("Thm 3.5", name, !modules.empty(), F == n - 2), iff("Thm 4.12", name, any_adjacent, Fplus == n - 2)};
}

std::vector<TheoremReport> check_low_Fplus(const Graph& g, int Fplus, int Zplus, const std::string& label) {
  const std::string name = describe(g, label);
  return {
      iff("Thm 4.16", name, is_tree(g), Fplus == 0),
      iff("Cor 4.17", name, Zplus == 1, Fplus == 0),
      iff("Thm 4.18", name, is_cycle(g) || is_two_isolated(g), Fplus == 1),
  };
}

std::vector<TheoremReport> check_F_vs_Z(const Graph& g, int F, int Z, int Fplus, int Zplus,
                                        const std::string& label) {
  const std::string name = describe(g, label);
  const int n = g.order();
  auto sandwich = [n](int low, int mid) {
    std::ostringstream out;
    out << low - 1 << " <= " << mid << " <= " << n - 1;
    return out.str();
  };
  std::ostringstream dominance;
  dominance << Fplus << " <= " << F;
  return {
      holds("Obs 3.1", name, Z - 1 <= F && F <= n - 1, sandwich(Z, F)),
      holds("Prop 4.1", name, Zplus - 1 <= Fplus && Fplus <= n - 1, sandwich(Zplus, Fplus)),
      iff("Thm 5.1", name, is_complete(g) || is_edgeless(g), F < Z),
      holds("Thm 4.19", name, Fplus <= F, dominance.str()),
  };
}

TheoremReport check_module_lower_bound(const Graph& g, int Fplus, const std::string& label) {
  const std::string name = describe(g, label);
  const int n = g.order();
  if (n > 20) throw CheckError("module enumeration is limited to 20 vertices");
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 3; mask < total; ++mask) {
    const VertexSet x(mask);
    if (x.size() < 2) continue;
    bool internal_edge = false;
    for (int v : x) {
      if (g.neighbors(v).intersects(x)) {
        internal_edge = true;
        break;
      }
    }
    if (!internal_edge || !is_module(g, x)) continue;
    if (Fplus < n - x.size()) {
      std::ostringstream out;
      out << "module " << to_string(x) << " needs F+ >= " << n - x.size() << ", got " << Fplus;
      return holds("Prop 4.10", name, false, out.str());
    }
  }
  return holds("Prop 4.10", name, true, "");
}

std::vector<TheoremReport> check_structure(const Graph& g, int F, int Fplus, int Z, int Zplus,
                                           const std::string& label) {
  std::vector<TheoremReport> out;
  auto append = [&out](std::vector<TheoremReport> rs) { out.insert(out.end(), rs.begin(), rs.end()); };
  append(check_isolated_characterizations(g, F, Fplus, label));
  if (is_connected(g)) append(check_module_characterizations(g, F, Fplus, label));
  append(check_low_Fplus(g, Fplus, Zplus, label));
  append(check_F_vs_Z(g, F, Z, Fplus, Zplus, label));
  if (g.order() <= 16) out.push_back(check_module_lower_bound(g, Fplus, label));
  return out;
}

bool minrank_equality_expected(const FamilySpec& spec, Rule rule) {
  if (!single_table_family(spec)) throw CheckError(to_string(spec) + " is not covered by the minimum rank statements");
  const int a = spec.param(0);
  const bool standard = rule == Rule::Standard;
  switch (spec.kind) {
    case FamilyKind::Path: return a == 1;
    case FamilyKind::Cycle: return standard ? (a == 3 || a == 4) : a == 3;
    case FamilyKind::Complete: return a == 1 || a == 3;
    case FamilyKind::Hypercube: return standard ? a == 2 : a == 3;
    case FamilyKind::Wheel: return standard ? (a == 6 || a == 7) : (a == 5 || a == 6 || a == 7);
    case FamilyKind::Biclique:
      return standard ? spec.param(0) + spec.param(1) == 4 : min_part(spec) == 4;
    case FamilyKind::HalfGraph: return standard ? a == 3 : a == 4;
    default: break;
  }
  throw CheckError(to_string(spec) + " is not covered by the minimum rank statements");
}

std::vector<TheoremReport> check_minrank_equalities(const FamilySpec& spec, int F, int Fplus) {
  if (!single_table_family(spec)) throw CheckError(to_string(spec) + " is not covered by the minimum rank statements");
  const std::string name = to_string(spec);
  const long mr = table51_value(spec, Parameter::mr).value;
  const long mrplus = table51_value(spec, Parameter::mrplus).value;
  return {
      iff("Thm 5.7", name, minrank_equality_expected(spec, Rule::Standard), F == mr),
      iff("Thm 5.8", name, minrank_equality_expected(spec, Rule::PositiveSemidefinite), Fplus == mrplus),
  };
}

std::vector<TheoremReport> check_Fplus_lt_Zplus_cases(const FamilySpec& spec, int Fplus, int Zplus) {
  if (spec.is_union()) throw CheckError("no F+ < Z+ statement covers a union");
  const std::string name = to_string(spec);
  const int a = spec.param(0);
  const bool less = Fplus < Zplus;
  switch (spec.kind) {
    case FamilyKind::Path:
    case FamilyKind::Cycle:
    case FamilyKind::Complete:
    case FamilyKind::MaryTree:
    case FamilyKind::Empty:
      return {iff("Thm 5.2(1)", name, true, less)};
    case FamilyKind::Hypercube: return {iff("Thm 5.2(2)", name, a <= 2, less)};
    case FamilyKind::Wheel: return {iff("Thm 5.2(3)", name, a == 4 || a == 5, less)};
    case FamilyKind::Biclique: {
      const int b = spec.param(1);
      const bool listed = min_part(spec) == 1 || (a == 2 && b == 2) || (a == 3 && b == 3);
      return {iff("Thm 5.2(4)", name, listed, less)};
    }
    case FamilyKind::HalfGraph: return {iff("Thm 5.2(5)", name, a <= 3, less)};
    case FamilyKind::Union: break;
  }
  throw CheckError(name + " is not covered by the F+ < Z+ statement");
}

std::vector<TheoremReport> check_nullity_table(const FamilySpec& spec, int Z, int Zplus) {
  const std::string name = to_string(spec);
  const Prediction M = table51_value(spec, Parameter::M);
  const Prediction Mplus = table51_value(spec, Parameter::Mplus);
  std::ostringstream m_detail;
  m_detail << "M=" << M.value << " > Z=" << Z;
  std::ostringstream mplus_detail;
  mplus_detail << "M+=" << Mplus.value << " > Z+=" << Zplus;
  return {
      equal("Table 5.1 Z", name, table51_value(spec, Parameter::Z).value, Z),
      equal("Table 5.1 Z+", name, table51_value(spec, Parameter::Zplus).value, Zplus),
      holds("Thm 5.3", name, M.value <= Z, m_detail.str()),
      holds("Thm 5.4", name, Mplus.value <= Zplus, mplus_detail.str()),
  };
}

}  // namespace forcekit
