#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "forcekit/family.hpp"
#include "forcekit/forcing.hpp"
#include "forcekit/random.hpp"
#include "forcekit/theorems.hpp"

namespace forcekit {

inline constexpr double kKernelTolerance = 1e-9;
inline constexpr double kSupportTolerance = 1e-7;

/// Dense symmetric matrix whose off-diagonal nonzero pattern is `graph`.
struct PatternMatrix {
  Eigen::MatrixXd entries;
  Graph graph;
  bool psd = false;

  int n() const { return static_cast<int>(entries.rows()); }
};

class LinalgError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Edge entries uniform on [-2,-0.5] U [0.5,2], non-edges 0, diagonal uniform on [-2,2].
PatternMatrix sample_pattern_matrix(const Graph& g, std::uint64_t seed);

/// D - W with edge weights uniform on [0.5,2].
PatternMatrix weighted_laplacian(const Graph& g, std::uint64_t seed);
PatternMatrix unit_laplacian(const Graph& g);
PatternMatrix adjacency_matrix(const Graph& g);

/// A + shift*I; the pattern is unchanged. `psd` is recomputed.
PatternMatrix shifted(const PatternMatrix& a, double shift);

/// Ascending eigenvalues of the symmetric matrix.
Eigen::VectorXd eigenvalues(const Eigen::MatrixXd& a);

/// Graph on the off-diagonal entries with |a_ij| > threshold.
Graph graph_of(const Eigen::MatrixXd& a, double threshold = 0.0);

/// min eigenvalue >= -1e-10 * max |eigenvalue|.
bool is_numerically_psd(const Eigen::MatrixXd& a);

/// Orthonormal eigenvectors whose |eigenvalue| < tol * max |eigenvalue|.
/// The zero matrix has the whole space as kernel.
std::vector<Eigen::VectorXd> kernel_basis(const PatternMatrix& a, double tol = kKernelTolerance);

int numerical_rank(const PatternMatrix& a, double tol = kKernelTolerance);

/// {i : |x_i| <= tol * max |x_j|}.
VertexSet zero_set(const Eigen::VectorXd& x, double tol = kSupportTolerance);

/// For kernel basis vectors, random combinations of them, and combinations
/// made to vanish on random coordinates, the zero set of each vector must be
/// a failed set under `rule`.
TheoremReport support_implies_failed(const Graph& g, const PatternMatrix& a, Rule rule, int trials,
                                     std::uint64_t seed);

/// rank(A) >= mr of the family (and >= mr+ when A is PSD).
TheoremReport rank_lower_bound_check(const FamilySpec& spec, const PatternMatrix& a);

/// Deterministic matrix for trial `trial`. Standard rule cycles through
/// eigenvalue-shifted sampled, Laplacian and adjacency matrices; PSD rule
/// through Laplacians, lambda_max*I - L, A_adj - lambda_min*I and sampled
/// matrices shifted by their least eigenvalue.
PatternMatrix trial_matrix(const Graph& g, Rule rule, int trial, std::uint64_t seed);

/// Whitespace-separated dense rows, 17 significant digits.
void write_dense(std::ostream& out, const Eigen::MatrixXd& a);

}  // namespace forcekit
