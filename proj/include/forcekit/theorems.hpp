#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "forcekit/family.hpp"
#include "forcekit/forcing.hpp"

namespace forcekit {

/// One evaluated statement on one graph. `pass` holds exactly when
/// `expected == observed`.
struct TheoremReport {
  std::string theorem;
  std::string graph;
  std::string expected;
  std::string observed;
  bool pass = false;
};

/// Input violates a precondition of the check (disconnected graph, family
/// outside the statement).
class CheckError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// F = n-1 iff an isolated vertex exists; F+ = n-1 iff an isolated vertex exists.
std::vector<TheoremReport> check_isolated_characterizations(const Graph& g, int F, int Fplus,
                                                            const std::string& label = "");

/// F = n-2 iff some module of order 2 exists; F+ = n-2 iff some such module is
/// an adjacent pair. Connected graphs only.
std::vector<TheoremReport> check_module_characterizations(const Graph& g, int F, int Fplus,
                                                          const std::string& label = "");

/// F+ = 0 iff tree; F+ = 0 iff Z+ = 1; F+ = 1 iff cycle or two isolated vertices.
std::vector<TheoremReport> check_low_Fplus(const Graph& g, int Fplus, int Zplus, const std::string& label = "");

/// Z-1 <= F <= n-1, Z+-1 <= F+ <= n-1, F < Z iff complete or edgeless, F+ <= F.
std::vector<TheoremReport> check_F_vs_Z(const Graph& g, int F, int Z, int Fplus, int Zplus,
                                        const std::string& label = "");

/// Every module X of order k >= 2 with an internal edge gives F+ >= n-k.
/// Enumerates all vertex subsets, so limited to small graphs.
TheoremReport check_module_lower_bound(const Graph& g, int Fplus, const std::string& label = "");

/// Isolated-vertex, module (connected graphs only), low F+ and F-vs-Z
/// checks, plus the module lower bound for graphs up to 16 vertices.
std::vector<TheoremReport> check_structure(const Graph& g, int F, int Fplus, int Z, int Zplus,
                                           const std::string& label = "");

/// Whether F = mr (standard) or F+ = mr+ (psd) is expected for the instance.
bool minrank_equality_expected(const FamilySpec& spec, Rule rule);

/// F = mr and F+ = mr+ exactly on the expected instances, with mr and mr+
/// read from the maximum nullity table.
std::vector<TheoremReport> check_minrank_equalities(const FamilySpec& spec, int F, int Fplus);

/// F+ < Z+ exactly on the listed instances of path, cycle, complete, tree,
/// edgeless, hypercube, wheel, biclique and halfgraph families.
std::vector<TheoremReport> check_Fplus_lt_Zplus_cases(const FamilySpec& spec, int Fplus, int Zplus);

/// M <= Z and M+ <= Z+ with M, M+ from the table; also the table's Z and Z+
/// against the computed ones.
std::vector<TheoremReport> check_nullity_table(const FamilySpec& spec, int Z, int Zplus);

}  // namespace forcekit
