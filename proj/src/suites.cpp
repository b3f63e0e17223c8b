#include "forcekit/suites.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <json.hpp>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "forcekit/formulas.hpp"
#include "forcekit/linalg.hpp"

namespace forcekit {

namespace {

using Work = std::function<SuiteReport(std::size_t)>;

struct Computed {
  int F = 0;
  int Fplus = 0;
  int Z = 0;
  int Zplus = 0;
};

Computed compute_all(const Graph& g, const SearchOptions& search) {
  return {
      failed_number(g, Rule::Standard, search).value,
      failed_number(g, Rule::PositiveSemidefinite, search).value,
      zero_forcing_number(g, Rule::Standard, search).value,
      zero_forcing_number(g, Rule::PositiveSemidefinite, search).value,
  };
}

TheoremReport prediction_report(const Prediction& p, const std::string& label, long observed) {
  if (p.exactness == Exactness::Exact) {
    return {p.source, label, std::to_string(p.value), std::to_string(observed), p.value == observed};
  }
  const std::string bound = ">= " + std::to_string(p.value);
  const bool ok = p.agrees_with(observed);
  return {p.source, label, bound, ok ? bound : std::to_string(observed), ok};
}

TheoremReport flag_report(std::string theorem, std::string label, bool ok, const std::string& detail) {
  return {std::move(theorem), std::move(label), "holds", ok ? "holds" : "violated: " + detail, ok};
}

TheoremReport select(const std::vector<TheoremReport>& reports, std::string_view theorem) {
  for (const TheoremReport& r : reports) {
    if (r.theorem == theorem) return r;
  }
  throw std::logic_error("missing report " + std::string(theorem));
}

SuiteReport named(std::string_view suite, const SuiteOptions& options, SuiteReport body) {
  body.suite = std::string(suite);
  body.seed = options.seed;
  return body;
}

int order_cap(const SuiteOptions& options, int fallback) { return options.max_n > 0 ? options.max_n : fallback; }

// The i-th graph on n vertices: bit k of `mask` selects the k-th pair in
// lexicographic order.
Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<Edge> edges;
  int k = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v, ++k) {
      if ((mask >> k) & 1U) edges.push_back({u, v});
    }
  }
  return Graph(n, edges);
}

std::vector<FamilySpec> union_instances() {
  return {
      FamilySpec::disjoint({FamilySpec::empty(1), FamilySpec::path(2)}),
      FamilySpec::disjoint({FamilySpec::cycle(3), FamilySpec::path(2)}),
      FamilySpec::disjoint({FamilySpec::cycle(4), FamilySpec::complete(3)}),
      FamilySpec::disjoint({FamilySpec::wheel(5), FamilySpec::biclique(2, 2)}),
  };
}

}  // namespace

void SuiteReport::add(const TheoremReport& r) {
  Tally& t = tallies[r.theorem];
  if (r.pass) {
    ++t.passed;
    return;
  }
  ++t.failed;
  ++failure_count;
  if (failures.size() < kFailureCap) failures.push_back(r);
}

void SuiteReport::add(const std::vector<TheoremReport>& rs) {
  for (const TheoremReport& r : rs) add(r);
}

void SuiteReport::merge(const SuiteReport& other) {
  for (const auto& [name, t] : other.tallies) {
    tallies[name].passed += t.passed;
    tallies[name].failed += t.failed;
  }
  for (const TheoremReport& r : other.failures) {
    if (failures.size() < kFailureCap) failures.push_back(r);
  }
  failure_count += other.failure_count;
}

std::uint64_t SuiteReport::checks() const {
  std::uint64_t total = 0;
  for (const auto& [name, t] : tallies) total += t.passed + t.failed;
  return total;
}

std::string suite_json(const SuiteReport& report) {
  nlohmann::ordered_json j;
  j["suite"] = report.suite;
  j["seed"] = report.seed;
  j["passed"] = report.passed();
  j["checks"] = report.checks();
  j["failure_count"] = report.failure_count;
  j["theorems"] = nlohmann::ordered_json::array();
  for (const auto& [name, t] : report.tallies) {
    j["theorems"].push_back({{"theorem", name}, {"passed", t.passed}, {"failed", t.failed}});
  }
  j["failures"] = nlohmann::ordered_json::array();
  for (const TheoremReport& r : report.failures) {
    j["failures"].push_back(
        {{"theorem", r.theorem}, {"graph", r.graph}, {"expected", r.expected}, {"observed", r.observed}});
  }
  j["failures_truncated"] = report.failure_count > report.failures.size();
  return j.dump(2) + "\n";
}

std::string suite_tsv(const SuiteReport& report) {
  std::ostringstream out;
  out << "theorem\tpassed\tfailed\n";
  for (const auto& [name, t] : report.tallies) out << name << '\t' << t.passed << '\t' << t.failed << '\n';
  for (const TheoremReport& r : report.failures) {
    out << "FAIL\t" << r.theorem << '\t' << r.graph << "\texpected " << r.expected << "\tobserved " << r.observed
        << '\n';
  }
  out << "total\t" << report.checks() - report.failure_count << '\t' << report.failure_count << '\n';
  return out.str();
}

SuiteReport parallel_reports(std::size_t count, int jobs, const Work& work) {
  std::vector<SuiteReport> parts(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        parts[i] = work(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::min<std::size_t>(std::max(jobs, 1), std::max<std::size_t>(count, 1));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }
  SuiteReport merged;
  for (std::size_t i = 0; i < count; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    merged.merge(parts[i]);
  }
  return merged;
}

std::vector<FamilySpec> default_family_instances(int max_n) {
  std::vector<FamilySpec> out;
  for (int n = 1; n <= 12; ++n) out.push_back(FamilySpec::path(n));
  for (int n = 3; n <= 12; ++n) out.push_back(FamilySpec::cycle(n));
  for (int n = 2; n <= 10; ++n) out.push_back(FamilySpec::complete(n));
  for (int n = 4; n <= 12; ++n) out.push_back(FamilySpec::wheel(n));
  for (int m = 1; m <= 5; ++m) {
    for (int n = 1; n <= m; ++n) out.push_back(FamilySpec::biclique(m, n));
  }
  for (int d = 1; d <= 4; ++d) out.push_back(FamilySpec::hypercube(d));
  for (int s = 1; s <= 5; ++s) out.push_back(FamilySpec::halfgraph(s));
  for (int m = 2; m <= 3; ++m) {
    for (int n = 1; n <= 13; ++n) out.push_back(FamilySpec::marytree(m, n));
  }
  for (int n = 1; n <= 8; ++n) out.push_back(FamilySpec::empty(n));
  if (max_n > 0) {
    std::erase_if(out, [max_n](const FamilySpec& s) { return family_order(s) > max_n; });
  }
  return out;
}

Graph random_graph(int n, double p, Rng& rng) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.unit() < p) edges.push_back({u, v});
    }
  }
  return Graph(n, edges);
}

Graph random_connected_graph(int n, double p, Rng& rng) {
  std::vector<Edge> edges;
  std::vector<bool> taken(static_cast<std::size_t>(n) * n);
  for (int v = 1; v < n; ++v) {
    const int parent = rng.index(v);
    edges.push_back({parent, v});
    taken[parent * n + v] = true;
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!taken[u * n + v] && rng.unit() < p) edges.push_back({u, v});
    }
  }
  return Graph(n, edges);
}

SuiteReport run_table1(const SuiteOptions& options) {
  const auto instances = default_family_instances(options.max_n);
  return named("table1", options, parallel_reports(instances.size(), options.jobs, [&](std::size_t i) {
                 const FamilySpec& spec = instances[i];
                 const std::string label = to_string(spec);
                 const Graph g = build_family(spec);
                 SuiteReport r;
                 const int F = failed_number(g, Rule::Standard, options.search).value;
                 r.add(prediction_report(predicted_F(spec), label, F));
                 if (in_table51(spec)) {
                   const int Fplus = failed_number(g, Rule::PositiveSemidefinite, options.search).value;
                   r.add(select(check_minrank_equalities(spec, F, Fplus), "Thm 5.7"));
                 }
                 return r;
               }));
}

SuiteReport run_table2(const SuiteOptions& options) {
  const auto instances = default_family_instances(options.max_n);
  return named("table2", options, parallel_reports(instances.size(), options.jobs, [&](std::size_t i) {
                 const FamilySpec& spec = instances[i];
                 const std::string label = to_string(spec);
                 const Graph g = build_family(spec);
                 SuiteReport r;
                 const int Fplus = failed_number(g, Rule::PositiveSemidefinite, options.search).value;
                 r.add(prediction_report(predicted_Fplus(spec), label, Fplus));
                 if (in_table51(spec)) {
                   const int F = failed_number(g, Rule::Standard, options.search).value;
                   r.add(select(check_minrank_equalities(spec, F, Fplus), "Thm 5.8"));
                 }
                 const int Zplus = zero_forcing_number(g, Rule::PositiveSemidefinite, options.search).value;
                 r.add(select(check_low_Fplus(g, Fplus, Zplus, label), "Thm 4.16"));
                 return r;
               }));
}

SuiteReport run_table51(const SuiteOptions& options) {
  const auto instances = default_family_instances(options.max_n);
  return named("table51", options, parallel_reports(instances.size(), options.jobs, [&](std::size_t i) {
                 const FamilySpec& spec = instances[i];
                 const Graph g = build_family(spec);
                 SuiteReport r;
                 const int Z = zero_forcing_number(g, Rule::Standard, options.search).value;
                 const int Zplus = zero_forcing_number(g, Rule::PositiveSemidefinite, options.search).value;
                 const int Fplus = failed_number(g, Rule::PositiveSemidefinite, options.search).value;
                 if (in_table51(spec)) r.add(check_nullity_table(spec, Z, Zplus));
                 r.add(check_Fplus_lt_Zplus_cases(spec, Fplus, Zplus));
                 return r;
               }));
}

SuiteReport run_characterizations(const SuiteOptions& options) {
  auto instances = default_family_instances(options.max_n);
  for (const FamilySpec& u : union_instances()) {
    if (options.max_n <= 0 || family_order(u) <= options.max_n) instances.push_back(u);
  }
  return named("characterizations", options, parallel_reports(instances.size(), options.jobs, [&](std::size_t i) {
                 const FamilySpec& spec = instances[i];
                 const Graph g = build_family(spec);
                 SuiteReport r;
                 const Computed c = compute_all(g, options.search);
                 r.add(check_structure(g, c.F, c.Fplus, c.Z, c.Zplus, to_string(spec)));
                 return r;
               }));
}

SuiteReport run_exhaustive(const SuiteOptions& options) {
  constexpr std::uint64_t kBlock = 2048;
  const int top = order_cap(options, 6);
  if (top > 7) throw std::invalid_argument("exhaustive enumeration is limited to 7 vertices");
  struct Block {
    int n;
    std::uint64_t begin;
    std::uint64_t end;
  };
  std::vector<Block> blocks;
  for (int n = 1; n <= top; ++n) {
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t b = 0; b < total; b += kBlock) blocks.push_back({n, b, std::min(total, b + kBlock)});
  }
  return named("exhaustive6", options, parallel_reports(blocks.size(), options.jobs, [&](std::size_t i) {
                 const Block& block = blocks[i];
                 SuiteReport r;
                 for (std::uint64_t mask = block.begin; mask < block.end; ++mask) {
                   const Graph g = graph_from_mask(block.n, mask);
                   const std::string label = "n=" + std::to_string(block.n) + " mask=" + std::to_string(mask);
                   const Computed c = compute_all(g, options.search);
                   r.add(check_structure(g, c.F, c.Fplus, c.Z, c.Zplus, label));
                   for (Rule rule : {Rule::Standard, Rule::PositiveSemidefinite}) {
                     const ExtremalResult fort = failed_number(g, rule, options.search);
                     const ExtremalResult brute = brute_failed_number(g, rule);
                     r.add({"fort oracle", label + " " + std::string(to_string(rule)), std::to_string(brute.value),
                            std::to_string(fort.value), brute.value == fort.value});
                     const bool stalled = is_stalled(g, fort.witness, rule) && is_stalled(g, brute.witness, rule);
                     r.add(flag_report("Obs 2.6", label + " " + std::string(to_string(rule)), stalled,
                                       "maximum failed witness is not stalled"));
                   }
                 }
                 return r;
               }));
}

SuiteReport run_disconnected(const SuiteOptions& options) {
  constexpr int kUnions = 200;
  constexpr int kConstructed = 100;
  const int cap = order_cap(options, 14);
  return named("disconnected", options, parallel_reports(kUnions + kConstructed, options.jobs, [&](std::size_t t) {
                 Rng rng(derive_seed(options.seed, t));
                 SuiteReport r;
                 if (t >= kUnions) {
                   // Random graph next to a path or cycle component.
                   const bool use_cycle = rng.unit() < 0.5;
                   const int k = use_cycle ? rng.between(3, 6) : rng.between(2, 6);
                   const int rest = rng.between(1, std::max(1, std::min(8, cap - k)));
                   const Graph g =
                       disjoint_union(random_graph(rest, rng.range(0.2, 0.8), rng), use_cycle ? cycle_graph(k) : path_graph(k));
                   const int n = g.order();
                   const int Fplus = failed_number(g, Rule::PositiveSemidefinite, options.search).value;
                   const int bound = use_cycle ? n - (k - 1) : n - k;
                   std::ostringstream label;
                   label << "random(" << rest << ")+" << (use_cycle ? "cycle:" : "path:") << k << " #" << t;
                   r.add(flag_report("Prop 4.3", label.str(), Fplus >= bound,
                                     "F+=" + std::to_string(Fplus) + " < " + std::to_string(bound)));
                   return r;
                 }
                 const int parts = rng.between(2, 3);
                 std::vector<Graph> components;
                 int used = 0;
                 for (int i = 0; i < parts; ++i) {
                   const int room = cap - used - (parts - i - 1);
                   const int size = rng.between(1, std::max(1, std::min(6, room)));
                   components.push_back(random_connected_graph(size, rng.range(0.1, 0.7), rng));
                   used += size;
                 }
                 Graph g = components[0];
                 for (std::size_t i = 1; i < components.size(); ++i) g = disjoint_union(g, components[i]);
                 const std::string label = "union #" + std::to_string(t) + " n=" + std::to_string(g.order());

                 for (Rule rule : {Rule::Standard, Rule::PositiveSemidefinite}) {
                   const bool standard = rule == Rule::Standard;
                   std::vector<ComponentValue> values;
                   std::vector<ExtremalResult> per_part;
                   for (const Graph& c : components) {
                     per_part.push_back(failed_number(c, rule, options.search));
                     values.push_back({c.order(), per_part.back().value});
                   }
                   const int direct = failed_number(g, rule, options.search).value;
                   const long composed = compose_disconnected(values);
                   r.add({standard ? "Cor 3.3" : "Cor 4.8", label, std::to_string(composed), std::to_string(direct),
                          composed == direct});

                   const auto maximal = enumerate_maximal_failed(g, rule);
                   int offset = 0;
                   for (std::size_t i = 0; i < components.size(); ++i) {
                     const VertexSet part(VertexSet::first(components[i].order()).bits() << offset);
                     const VertexSet witness(per_part[i].witness.bits() << offset);
                     const VertexSet built = g.vertices() - (part - witness);
                     const bool found = std::binary_search(maximal.begin(), maximal.end(), built,
                                                           [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); });
                     r.add(flag_report(standard ? "Prop 3.2" : "Prop 4.7", label, found,
                                       to_string(built) + " is not a maximal failed set"));
                     offset += components[i].order();
                   }
                 }
                 return r;
               }));
}

SuiteReport run_linalg(const SuiteOptions& options) {
  const auto instances = default_family_instances(order_cap(options, 12));
  const std::size_t per_rule = instances.size();
  return named("linalg", options, parallel_reports(2 * per_rule, options.jobs, [&](std::size_t i) {
                 const FamilySpec& spec = instances[i % per_rule];
                 const Rule rule = i < per_rule ? Rule::Standard : Rule::PositiveSemidefinite;
                 const Graph g = build_family(spec);
                 const std::uint64_t root = derive_seed(options.seed, i);
                 SuiteReport r;
                 for (int t = 0; t < options.trials; ++t) {
                   const PatternMatrix a = trial_matrix(g, rule, t, root);
                   const std::string label =
                       to_string(spec) + " " + std::string(to_string(rule)) + " trial " + std::to_string(t);
                   TheoremReport support = support_implies_failed(g, a, rule, 4, derive_seed(root, 1000 + t));
                   support.graph = label;
                   r.add(support);
                   if (in_table51(spec)) {
                     TheoremReport rank = rank_lower_bound_check(spec, a);
                     rank.graph = label;
                     r.add(rank);
                   }
                 }
                 return r;
               }));
}

SuiteReport run_oracle(const SuiteOptions& options) {
  constexpr int kRandom = 500;
  const int cap = std::min(order_cap(options, 8), kBruteForceMaxOrder);
  std::vector<FamilySpec> families = default_family_instances(cap);
  return named("oracle", options, parallel_reports(kRandom + families.size(), options.jobs, [&](std::size_t t) {
                 std::string label;
                 const Graph g = [&] {
                   if (t >= kRandom) {
                     label = to_string(families[t - kRandom]);
                     return build_family(families[t - kRandom]);
                   }
                   Rng rng(derive_seed(options.seed, t));
                   const int n = rng.between(1, cap);
                   label = "random #" + std::to_string(t) + " n=" + std::to_string(n);
                   return random_graph(n, rng.range(0.1, 0.9), rng);
                 }();
                 SuiteReport r;
                 for (Rule rule : {Rule::Standard, Rule::PositiveSemidefinite}) {
                   const int fort = failed_number(g, rule, options.search).value;
                   const int brute = brute_failed_number(g, rule).value;
                   r.add({"fort oracle", label + " " + std::string(to_string(rule)), std::to_string(brute),
                          std::to_string(fort), fort == brute});
                 }
                 return r;
               }));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"table1",       "table2",      "table51", "characterizations",
                                                 "exhaustive6", "disconnected", "linalg",  "oracle"};
  return names;
}

SuiteReport run_suite(std::string_view name, const SuiteOptions& options) {
  if (name == "table1") return run_table1(options);
  if (name == "table2") return run_table2(options);
  if (name == "table51") return run_table51(options);
  if (name == "characterizations") return run_characterizations(options);
  if (name == "exhaustive6") return run_exhaustive(options);
  if (name == "disconnected") return run_disconnected(options);
  if (name == "linalg") return run_linalg(options);
  if (name == "oracle") return run_oracle(options);
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

}  // namespace forcekit
