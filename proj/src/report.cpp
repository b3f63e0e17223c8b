#include "forcekit/report.hpp"

#include <chrono>
#include <iomanip>
#include <json.hpp>
#include <sstream>

namespace forcekit {

namespace {

Parameter parameter_for(ExtremalKind kind, Rule rule) {
  const bool standard = rule == Rule::Standard;
  if (kind == ExtremalKind::MinForcing) return standard ? Parameter::Z : Parameter::Zplus;
  return standard ? Parameter::F : Parameter::Fplus;
}

std::optional<Prediction> composed_prediction(const FamilySpec& spec, bool standard) {
  std::vector<ComponentValue> values;
  for (const FamilySpec& part : spec.parts) {
    const Prediction p = standard ? predicted_F(part) : predicted_Fplus(part);
    if (p.exactness != Exactness::Exact) return std::nullopt;
    values.push_back({family_order(part), static_cast<int>(p.value)});
  }
  return Prediction{standard ? Parameter::F : Parameter::Fplus, compose_disconnected(values), Exactness::Exact,
                    standard ? "Cor 3.3" : "Cor 4.8"};
}

std::vector<Prediction> predictions_for(const FamilySpec& spec, const AnalyzeOptions& options) {
  std::vector<Prediction> out;
  auto attempt = [&out](auto make) {
    try {
      if (auto p = make()) out.push_back(*p);
    } catch (const OutsideHypotheses&) {
    }
  };
  if (spec.is_union()) {
    if (options.failed && options.standard) attempt([&] { return composed_prediction(spec, true); });
    if (options.failed && options.psd) attempt([&] { return composed_prediction(spec, false); });
    return out;
  }
  if (options.failed && options.standard) attempt([&] { return std::optional(predicted_F(spec)); });
  if (options.failed && options.psd) attempt([&] { return std::optional(predicted_Fplus(spec)); });
  if (in_table51(spec)) {
    for (const Prediction& p : predicted_table51(spec)) out.push_back(p);
  }
  return out;
}

void check_consistency(ParamReport& r) {
  auto need = [&r](bool ok, const std::string& what) {
    if (!ok) r.inconsistencies.push_back(what);
  };
  const auto F = r.value(Parameter::F);
  const auto Fp = r.value(Parameter::Fplus);
  const auto Z = r.value(Parameter::Z);
  const auto Zp = r.value(Parameter::Zplus);
  if (F) need(*F <= r.n - 1, "F exceeds n-1");
  if (Fp) need(*Fp <= r.n - 1, "F+ exceeds n-1");
  if (F && Z) need(*Z - 1 <= *F, "F below Z-1");
  if (Fp && Zp) need(*Zp - 1 <= *Fp, "F+ below Z+-1");
  if (F && Fp) need(*Fp <= *F, "F+ exceeds F");
  if (Z && Zp) need(*Zp <= *Z, "Z+ exceeds Z");
}

std::string agreement(const ParamReport& r, const Prediction& p) {
  const auto observed = r.value(p.parameter);
  if (!observed) return "unchecked";
  return p.agrees_with(*observed) ? "agrees" : "disagrees";
}

}  // namespace

std::optional<int> ParamReport::value(Parameter p) const {
  for (const ComputedParam& c : computed) {
    if (c.parameter == p) return c.result.value;
  }
  return std::nullopt;
}

ParamReport analyze(const Graph& g, const std::string& description, const std::optional<FamilySpec>& family,
                    const AnalyzeOptions& options) {
  ParamReport r;
  r.graph = description;
  r.n = g.order();
  r.m = g.size();

  std::vector<Rule> rules;
  if (options.standard) rules.push_back(Rule::Standard);
  if (options.psd) rules.push_back(Rule::PositiveSemidefinite);
  for (Rule rule : rules) {
    auto timed = [&](auto run) {
      const auto start = std::chrono::steady_clock::now();
      ExtremalResult result = run();
      const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
      r.computed.push_back({parameter_for(result.kind, rule), result, took.count()});
    };
    if (options.zero_forcing) timed([&] { return zero_forcing_number(g, rule, options.search); });
    if (options.failed) timed([&] { return failed_number(g, rule, options.search); });
  }

  if (family) r.predictions = predictions_for(*family, options);

  const auto F = r.value(Parameter::F);
  const auto Fp = r.value(Parameter::Fplus);
  const auto Z = r.value(Parameter::Z);
  const auto Zp = r.value(Parameter::Zplus);
  if (F && Fp && Z && Zp) {
    auto append = [&r](const std::vector<TheoremReport>& rs) { r.theorems.insert(r.theorems.end(), rs.begin(), rs.end()); };
    append(check_structure(g, *F, *Fp, *Z, *Zp, description));
    if (family && !family->is_union()) {
      if (in_table51(*family)) {
        append(check_minrank_equalities(*family, *F, *Fp));
        append(check_nullity_table(*family, *Z, *Zp));
      }
      append(check_Fplus_lt_Zplus_cases(*family, *Fp, *Zp));
    }
  }
  check_consistency(r);
  return r;
}

std::string report_json(const ParamReport& r, bool timings) {
  nlohmann::ordered_json j;
  j["graph"] = r.graph;
  j["n"] = r.n;
  j["m"] = r.m;
  j["consistent"] = r.consistent();
  j["inconsistencies"] = r.inconsistencies;
  j["parameters"] = nlohmann::ordered_json::array();
  for (const ComputedParam& c : r.computed) {
    nlohmann::ordered_json p;
    p["name"] = to_string(c.parameter);
    p["rule"] = to_string(c.result.rule);
    p["value"] = c.result.value;
    p["witness"] = c.result.witness.members();
    p["method"] = to_string(c.result.method);
    p["nodes"] = c.result.nodes;
    if (timings) p["seconds"] = c.seconds;
    j["parameters"].push_back(p);
  }
  j["predictions"] = nlohmann::ordered_json::array();
  for (const Prediction& p : r.predictions) {
    j["predictions"].push_back({{"name", to_string(p.parameter)},
                                {"value", p.value},
                                {"exactness", to_string(p.exactness)},
                                {"source", p.source},
                                {"check", agreement(r, p)}});
  }
  j["theorems"] = nlohmann::ordered_json::array();
  for (const TheoremReport& t : r.theorems) {
    j["theorems"].push_back({{"theorem", t.theorem},
                             {"graph", t.graph},
                             {"expected", t.expected},
                             {"observed", t.observed},
                             {"pass", t.pass}});
  }
  return j.dump(2) + "\n";
}

std::string report_tsv(const ParamReport& r, bool timings) {
  std::ostringstream out;
  out << "graph\t" << r.graph << '\t' << r.n << '\t' << r.m << '\t' << (r.consistent() ? "consistent" : "inconsistent")
      << '\n';
  for (const ComputedParam& c : r.computed) {
    out << "param\t" << to_string(c.parameter) << '\t' << to_string(c.result.rule) << '\t' << c.result.value << '\t'
        << to_string(c.result.witness) << '\t' << to_string(c.result.method) << '\t' << c.result.nodes;
    if (timings) out << '\t' << std::fixed << std::setprecision(6) << c.seconds << std::defaultfloat;
    out << '\n';
  }
  for (const Prediction& p : r.predictions) {
    out << "prediction\t" << to_string(p.parameter) << '\t' << p.value << '\t' << to_string(p.exactness) << '\t'
        << p.source << '\t' << agreement(r, p) << '\n';
  }
  for (const TheoremReport& t : r.theorems) {
    out << "theorem\t" << t.theorem << '\t' << t.expected << '\t' << t.observed << '\t' << (t.pass ? "pass" : "FAIL")
        << '\n';
  }
  for (const std::string& s : r.inconsistencies) out << "inconsistent\t" << s << '\n';
  return out.str();
}

}  // namespace forcekit
