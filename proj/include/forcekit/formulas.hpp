#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "forcekit/family.hpp"

namespace forcekit {

enum class Parameter { F, Fplus, Z, Zplus, M, Mplus, mr, mrplus };
enum class Exactness { Exact, LowerBound };

std::string_view to_string(Parameter p);
std::string_view to_string(Exactness e);

/// A closed-form value for a family instance with the result it comes from.
struct Prediction {
  Parameter parameter = Parameter::F;
  long value = 0;
  Exactness exactness = Exactness::Exact;
  std::string source;

  /// Exact predictions must equal `observed`; lower bounds must not exceed it.
  bool agrees_with(long observed) const {
    return exactness == Exactness::Exact ? observed == value : observed >= value;
  }
};

/// The family lies outside the hypotheses of every available result.
class OutsideHypotheses : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Failed zero forcing number under the standard rule.
///
/// Instances that are themselves paths (K_1, marytree(m, n) with maximum
/// degree <= 2) use the path formula.
Prediction predicted_F(const FamilySpec& spec);

/// Failed positive semidefinite zero forcing number.
Prediction predicted_Fplus(const FamilySpec& spec);

/// Row of the maximum nullity / zero forcing table: M, Z, M+, Z+, mr, mr+,
/// with mr = |G| - M and mr+ = |G| - M+. Covers path, cycle, complete,
/// hypercube, wheel, biclique and halfgraph. K_1 is read from the path row
/// and K_{1,1} from the K_2 row.
std::vector<Prediction> predicted_table51(const FamilySpec& spec);

/// Single entry of predicted_table51.
Prediction table51_value(const FamilySpec& spec, Parameter parameter);

bool in_table51(const FamilySpec& spec);

struct ComponentValue {
  int order = 0;
  int failed = 0;
};

/// |G| - min_i (|G_i| - F(G_i)); the same composition holds for F+.
long compose_disconnected(std::span<const ComponentValue> components);

}  // namespace forcekit
