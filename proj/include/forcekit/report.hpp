#pragma once

#include <optional>
#include <string>
#include <vector>

#include "forcekit/extremal.hpp"
#include "forcekit/formulas.hpp"
#include "forcekit/theorems.hpp"

namespace forcekit {

struct ComputedParam {
  Parameter parameter = Parameter::F;
  ExtremalResult result;
  double seconds = 0.0;
};

struct AnalyzeOptions {
  bool standard = true;
  bool psd = true;
  bool zero_forcing = true;
  bool failed = true;
  SearchOptions search;
};

/// Everything `analyze` knows about one graph.
struct ParamReport {
  std::string graph;
  int n = 0;
  int m = 0;
  std::vector<ComputedParam> computed;
  std::vector<Prediction> predictions;
  std::vector<TheoremReport> theorems;
  /// Violations of Z-1 <= F <= n-1, Z+-1 <= F+ <= n-1, F+ <= F, Z+ <= Z.
  std::vector<std::string> inconsistencies;

  bool consistent() const { return inconsistencies.empty(); }
  std::optional<int> value(Parameter p) const;
};

/// Computes the requested parameters. Predictions are attached when `family`
/// names a recognized instance; unions get the composed prediction when
/// every part has an exact one. Theorem checks run when all four parameters
/// are available.
ParamReport analyze(const Graph& g, const std::string& description, const std::optional<FamilySpec>& family,
                    const AnalyzeOptions& options);

/// Fixed key order; `seconds` only when `timings` is set.
std::string report_json(const ParamReport& report, bool timings);

/// Tab-separated lines, first field is the record kind:
///   graph <description> <n> <m> <consistent>
///   param <name> <rule> <value> <witness> <method> <nodes> [seconds]
///   prediction <name> <value> <exactness> <source> <agrees|unchecked>
///   theorem <id> <expected> <observed> <pass|FAIL>
///   inconsistent <message>
std::string report_tsv(const ParamReport& report, bool timings);

}  // namespace forcekit
