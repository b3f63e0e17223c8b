#include "forcekit/formulas.hpp"

#include <algorithm>
#include <limits>

namespace forcekit {

namespace {

Prediction exact(Parameter p, long value, std::string source) {
  return {p, value, Exactness::Exact, std::move(source)};
}

Prediction lower_bound(Parameter p, long value, std::string source) {
  return {p, value, Exactness::LowerBound, std::move(source)};
}

[[noreturn]] void outside(const FamilySpec& spec, std::string_view what) {
  throw OutsideHypotheses(to_string(spec) + ": no closed form for " + std::string(what));
}

bool is_path_shaped(const Graph& g) {
  if (!is_tree(g)) return false;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) > 2) return false;
  }
  return true;
}

// Instances whose family hypothesis excludes them but which are paths.
bool falls_back_to_path(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::Complete: return spec.param(0) == 1;
    case FamilyKind::MaryTree: return is_path_shaped(build_family(spec));
    default: return false;
  }
}

long path_F(int n) { return (n - 1) / 2; }  // ceil((n-2)/2) for n >= 1

}  // namespace

std::string_view to_string(Parameter p) {
  switch (p) {
    case Parameter::F: return "F";
    case Parameter::Fplus: return "Fplus";
    case Parameter::Z: return "Z";
    case Parameter::Zplus: return "Zplus";
    case Parameter::M: return "M";
    case Parameter::Mplus: return "Mplus";
    case Parameter::mr: return "mr";
    case Parameter::mrplus: return "mrplus";
  }
  return "?";
}

std::string_view to_string(Exactness e) { return e == Exactness::Exact ? "exact" : "lower-bound"; }

Prediction predicted_F(const FamilySpec& spec) {
  if (spec.is_union()) outside(spec, "F of a union; use compose_disconnected");
  const int n = family_order(spec);
  const auto F = Parameter::F;
  if (falls_back_to_path(spec)) return exact(F, path_F(n), "Thm 3.6");
  const int a = spec.param(0);
  switch (spec.kind) {
    case FamilyKind::Path: return exact(F, path_F(a), "Thm 3.6");
    case FamilyKind::Cycle: return exact(F, a / 2, "Thm 3.6");
    case FamilyKind::Complete: return exact(F, a - 2, "Thm 3.6");
    case FamilyKind::MaryTree:
      if (a < 2) outside(spec, "F of a non-path tree with arity < 2");
      return exact(F, n - 2, "Thm 3.6");
    case FamilyKind::Wheel: return exact(F, a == 5 ? 3 : (2 * a - 2) / 3, "Thm 3.6");
    case FamilyKind::Biclique: return exact(F, a + spec.param(1) - 2, "Thm 3.6");
    case FamilyKind::Hypercube:
      if (a == 1) return exact(F, 0, "Thm 3.7");
      if (a == 2) return exact(F, 2, "Thm 3.7");
      return lower_bound(F, (1L << a) - a, "Thm 3.7");
    case FamilyKind::HalfGraph: return exact(F, a == 1 ? 0 : 2L * a - 3, "Thm 3.8");
    case FamilyKind::Empty: return exact(F, a - 1, "Obs 3.4");
    case FamilyKind::Union: break;
  }
  outside(spec, "F");
}

Prediction predicted_Fplus(const FamilySpec& spec) {
  if (spec.is_union()) outside(spec, "F+ of a union; use compose_disconnected");
  const auto Fp = Parameter::Fplus;
  const int a = spec.param(0);
  switch (spec.kind) {
    case FamilyKind::Path: return exact(Fp, 0, "Thm 4.5");
    case FamilyKind::MaryTree: return exact(Fp, 0, "Thm 4.16");
    case FamilyKind::Cycle: return exact(Fp, 1, "Thm 4.6");
    case FamilyKind::Complete:
      if (a == 1) return exact(Fp, 0, "Thm 4.16");
      return exact(Fp, a - 2, "Cor 4.13");
    case FamilyKind::Wheel: return exact(Fp, (2 * a - 2) / 3, "Thm 4.20");
    case FamilyKind::Biclique: {
      const int m = a;
      const int n = spec.param(1);
      const int p = std::min(m, n);
      if (p == 1) return exact(Fp, 0, "Thm 4.21");
      if (p == 2) return exact(Fp, m + n - 3, "Thm 4.21");
      return exact(Fp, m + n - 4, "Thm 4.21");
    }
    case FamilyKind::Hypercube:
      if (a == 1) return exact(Fp, 0, "Thm 4.22");
      if (a == 2) return exact(Fp, 1, "Thm 4.22");
      return lower_bound(Fp, (1L << a) - a - 1, "Thm 4.22");
    case FamilyKind::HalfGraph: return exact(Fp, a == 1 ? 0 : 2L * a - 4, "Thm 4.23");
    case FamilyKind::Empty: return exact(Fp, a - 1, "Thm 4.2");
    case FamilyKind::Union: break;
  }
  outside(spec, "F+");
}

bool in_table51(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::Path:
    case FamilyKind::Cycle:
    case FamilyKind::Complete:
    case FamilyKind::Hypercube:
    case FamilyKind::Wheel:
    case FamilyKind::Biclique:
    case FamilyKind::HalfGraph:
      return true;
    default:
      return false;
  }
}

std::vector<Prediction> predicted_table51(const FamilySpec& spec) {
  if (spec.is_union() || !in_table51(spec)) outside(spec, "the maximum nullity table");
  const long order = family_order(spec);
  const int a = spec.param(0);
  long nullity = 0;       // M = Z
  long psd_nullity = 0;   // M+ = Z+
  std::string source = "Table 5.1";
  switch (spec.kind) {
    case FamilyKind::Path: nullity = psd_nullity = 1; break;
    case FamilyKind::Cycle: nullity = psd_nullity = 2; break;
    case FamilyKind::Complete:
      if (a == 1) {
        nullity = psd_nullity = 1;
        source = "Table 5.1 (P_1 row)";
      } else {
        nullity = psd_nullity = a - 1;
      }
      break;
    case FamilyKind::Hypercube: nullity = psd_nullity = 1L << (a - 1); break;
    case FamilyKind::Wheel: nullity = psd_nullity = 3; break;
    case FamilyKind::Biclique: {
      const int big = std::max(a, spec.param(1));
      const int small = std::min(a, spec.param(1));
      if (big == 1) {
        nullity = psd_nullity = 1;
        source = "Table 5.1 (K_2 row)";
      } else {
        nullity = big + small - 2;
        psd_nullity = small;
      }
      break;
    }
    case FamilyKind::HalfGraph: nullity = psd_nullity = a; break;
    default: outside(spec, "the maximum nullity table");
  }
  return {
      exact(Parameter::M, nullity, source),
      exact(Parameter::Z, nullity, source),
      exact(Parameter::Mplus, psd_nullity, source),
      exact(Parameter::Zplus, psd_nullity, source),
      exact(Parameter::mr, order - nullity, source),
      exact(Parameter::mrplus, order - psd_nullity, source),
  };
}

Prediction table51_value(const FamilySpec& spec, Parameter parameter) {
  for (Prediction& p : predicted_table51(spec)) {
    if (p.parameter == parameter) return p;
  }
  outside(spec, to_string(parameter));
}

long compose_disconnected(std::span<const ComponentValue> components) {
  if (components.empty()) throw std::invalid_argument("compose_disconnected needs at least one component");
  long total = 0;
  long slack = std::numeric_limits<long>::max();
  for (const ComponentValue& c : components) {
    total += c.order;
    slack = std::min<long>(slack, c.order - c.failed);
  }
  return total - slack;
}

}  // namespace forcekit
