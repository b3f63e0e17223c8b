#include "forcekit/tables.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "forcekit/formulas.hpp"

namespace forcekit {

namespace {

struct Row {
  std::string results;
  std::string graph;
  std::string formula;
  std::string equality;
  std::function<bool(const FamilySpec&)> member;
};

bool kind_is(const FamilySpec& s, FamilyKind k) { return s.kind == k; }
int small_part(const FamilySpec& s) { return std::min(s.param(0), s.param(1)); }

auto exactly(FamilyKind k, int a) {
  return [k, a](const FamilySpec& s) { return kind_is(s, k) && s.param(0) == a; };
}
auto at_least(FamilyKind k, int a) {
  return [k, a](const FamilySpec& s) { return kind_is(s, k) && s.param(0) >= a; };
}
auto biclique_min(int lo, int hi) {
  return [lo, hi](const FamilySpec& s) {
    return kind_is(s, FamilyKind::Biclique) && small_part(s) >= lo && small_part(s) <= hi;
  };
}

std::vector<Row> table1_rows() {
  const std::string r = "Thm 3.6, Thm 5.7";
  return {
      {r, "P_n", "ceil((n-2)/2)", "iff n=1", at_least(FamilyKind::Path, 1)},
      {r, "C_n, n>=3", "floor(n/2)", "iff n=3,4", at_least(FamilyKind::Cycle, 3)},
      {r, "K_n, n>=2", "n-2", "iff n=3", at_least(FamilyKind::Complete, 2)},
      {r, "W_4", "2", "no", exactly(FamilyKind::Wheel, 4)},
      {r, "W_5", "3", "no", exactly(FamilyKind::Wheel, 5)},
      {r, "W_n, n>=6", "floor((2n-2)/3)", "iff n=6,7", at_least(FamilyKind::Wheel, 6)},
      {r, "K_{m,1}, m>=1", "m-1", "iff m=3", biclique_min(1, 1)},
      {r, "K_{m,2}, m>=2", "m", "iff m=2", biclique_min(2, 2)},
      {r, "K_{m,n}, m>=n>=2", "m+n-2", "iff m+n=4", biclique_min(2, 99)},
      {"Thm 3.7, Thm 5.7", "Q_1", "0", "no", exactly(FamilyKind::Hypercube, 1)},
      {"Thm 3.7, Thm 5.7", "Q_2", "2", "yes", exactly(FamilyKind::Hypercube, 2)},
      {"Thm 3.7, Thm 5.7", "Q_n, n>=3", ">= 2^n-n", "no", at_least(FamilyKind::Hypercube, 3)},
      {"Thm 3.8, Thm 5.7", "H_1", "0", "no", exactly(FamilyKind::HalfGraph, 1)},
      {"Thm 3.8, Thm 5.7", "H_s, s>=2", "2s-3", "iff s=3", at_least(FamilyKind::HalfGraph, 2)},
  };
}

// The K_{m,n} row starts at n=3 here: for n=2 the K_{m,2} row applies.
std::vector<Row> table2_rows() {
  return {
      {"Thm 4.5, Thm 5.8", "P_n", "0", "iff n=1", at_least(FamilyKind::Path, 1)},
      {"Thm 4.6, Thm 5.8", "C_n, n>=3", "1", "iff n=3", at_least(FamilyKind::Cycle, 3)},
      {"Cor 4.13, Thm 5.8", "K_n, n>=2", "n-2", "iff n=3", at_least(FamilyKind::Complete, 2)},
      {"Thm 4.20, Thm 5.8", "W_4", "2", "no", exactly(FamilyKind::Wheel, 4)},
      {"Thm 4.20, Thm 5.8", "W_5", "2", "yes", exactly(FamilyKind::Wheel, 5)},
      {"Thm 4.20, Thm 5.8", "W_n, n>=6", "floor((2n-2)/3)", "iff n=5,6,7", at_least(FamilyKind::Wheel, 6)},
      {"Thm 4.21, Thm 5.8", "K_{m,1}, m>=1", "0", "no", biclique_min(1, 1)},
      {"Thm 4.21, Thm 5.8", "K_{m,2}, m>=2", "m-1", "no", biclique_min(2, 2)},
      {"Thm 4.21, Thm 5.8", "K_{m,n}, m>=n>=3", "m+n-4", "iff n=4", biclique_min(3, 99)},
      {"Thm 4.22, Thm 5.8", "Q_1", "0", "no", exactly(FamilyKind::Hypercube, 1)},
      {"Thm 4.22, Thm 5.8", "Q_2", "1", "no", exactly(FamilyKind::Hypercube, 2)},
      {"Thm 4.22, Thm 5.8", "Q_n, n>=3", ">= 2^n-n-1", "iff n=3", at_least(FamilyKind::Hypercube, 3)},
      {"Thm 4.23, Thm 5.8", "H_1", "0", "no", exactly(FamilyKind::HalfGraph, 1)},
      {"Thm 4.23, Thm 5.8", "H_s, s>=2", "2s-4", "iff s=4", at_least(FamilyKind::HalfGraph, 2)},
  };
}

std::string join(const std::vector<std::string>& items) {
  if (items.empty()) return "-";
  std::string out;
  for (const std::string& s : items) out += (out.empty() ? "" : " ") + s;
  return out;
}

}  // namespace

std::string render_table(int which, const SuiteOptions& options) {
  if (which != 1 && which != 2) throw std::invalid_argument("table must be 1 or 2");
  const bool standard = which == 1;
  const Rule rule = standard ? Rule::Standard : Rule::PositiveSemidefinite;
  const Parameter bound_param = standard ? Parameter::mr : Parameter::mrplus;
  const auto rows = standard ? table1_rows() : table2_rows();
  const auto instances = default_family_instances(options.max_n);

  struct Outcome {
    bool agrees = false;
    bool equal_to_mr = false;
  };
  std::vector<Outcome> outcomes(instances.size());
  parallel_reports(instances.size(), options.jobs, [&](std::size_t i) {
    const FamilySpec& spec = instances[i];
    if (!in_table51(spec)) return SuiteReport{};
    const int value = failed_number(build_family(spec), rule, options.search).value;
    const Prediction p = standard ? predicted_F(spec) : predicted_Fplus(spec);
    outcomes[i] = {p.agrees_with(value), value == table51_value(spec, bound_param).value};
    return SuiteReport{};
  });

  std::ostringstream out;
  const std::string param = standard ? "F(G)" : "F+(G)";
  const std::string mr = standard ? "mr(G)" : "mr+(G)";
  out << "Result | G | " << param << " | " << param << " = " << mr << "? | computed match | observed " << param
      << " = " << mr << '\n';
  for (const Row& row : rows) {
    int checked = 0;
    int matched = 0;
    std::vector<std::string> equal_at;
    for (std::size_t i = 0; i < instances.size(); ++i) {
      if (!row.member(instances[i])) continue;
      ++checked;
      if (outcomes[i].agrees) ++matched;
      if (outcomes[i].equal_to_mr) equal_at.push_back(to_string(instances[i]));
    }
    out << row.results << " | " << row.graph << " | " << row.formula << " | " << row.equality << " | " << matched
        << '/' << checked << " | " << join(equal_at) << '\n';
  }
  return out.str();
}

}  // namespace forcekit
