#include "forcekit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "forcekit/formulas.hpp"

namespace forcekit {

namespace {

double edge_weight(Rng& rng) {
  const double magnitude = rng.range(0.5, 2.0);
  return rng.unit() < 0.5 ? -magnitude : magnitude;
}

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solve(const Eigen::MatrixXd& a) {
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(a, Eigen::ComputeEigenvectors);
}

PatternMatrix laplacian_from(const Graph& g, Rng* rng) {
  PatternMatrix m{Eigen::MatrixXd::Zero(g.order(), g.order()), g, true};
  for (const Edge& e : g.edges()) {
    const double w = rng ? rng->range(0.5, 2.0) : 1.0;
    m.entries(e.u, e.v) = m.entries(e.v, e.u) = -w;
    m.entries(e.u, e.u) += w;
    m.entries(e.v, e.v) += w;
  }
  return m;
}

void require_pattern(const Graph& g, const PatternMatrix& a) {
  if (a.n() != g.order() || graph_of(a.entries) != g) throw LinalgError("matrix pattern does not match the graph");
}

}  // namespace

PatternMatrix sample_pattern_matrix(const Graph& g, std::uint64_t seed) {
  Rng rng(seed);
  const int n = g.order();
  PatternMatrix m{Eigen::MatrixXd::Zero(n, n), g, false};
  for (int i = 0; i < n; ++i) m.entries(i, i) = rng.range(-2.0, 2.0);
  for (const Edge& e : g.edges()) m.entries(e.u, e.v) = m.entries(e.v, e.u) = edge_weight(rng);
  m.psd = is_numerically_psd(m.entries);
  return m;
}

PatternMatrix weighted_laplacian(const Graph& g, std::uint64_t seed) {
  Rng rng(seed);
  return laplacian_from(g, &rng);
}

PatternMatrix unit_laplacian(const Graph& g) { return laplacian_from(g, nullptr); }

PatternMatrix adjacency_matrix(const Graph& g) {
  PatternMatrix m{Eigen::MatrixXd::Zero(g.order(), g.order()), g, false};
  for (const Edge& e : g.edges()) m.entries(e.u, e.v) = m.entries(e.v, e.u) = 1.0;
  m.psd = is_numerically_psd(m.entries);
  return m;
}

PatternMatrix shifted(const PatternMatrix& a, double shift) {
  PatternMatrix m = a;
  m.entries.diagonal().array() += shift;
  m.psd = is_numerically_psd(m.entries);
  return m;
}

Eigen::VectorXd eigenvalues(const Eigen::MatrixXd& a) {
  if (a.rows() == 0) return {};
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(a, Eigen::EigenvaluesOnly).eigenvalues();
}

Graph graph_of(const Eigen::MatrixXd& a, double threshold) {
  const int n = static_cast<int>(a.rows());
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (std::abs(a(i, j)) > threshold) edges.push_back({i, j});
    }
  }
  return Graph(n, edges);
}

bool is_numerically_psd(const Eigen::MatrixXd& a) {
  if (a.rows() == 0) return true;
  const Eigen::VectorXd ev = eigenvalues(a);
  const double scale = ev.cwiseAbs().maxCoeff();
  return ev(0) >= -1e-10 * scale;
}

std::vector<Eigen::VectorXd> kernel_basis(const PatternMatrix& a, double tol) {
  std::vector<Eigen::VectorXd> basis;
  const int n = a.n();
  if (n == 0) return basis;
  const auto es = solve(a.entries);
  const double scale = es.eigenvalues().cwiseAbs().maxCoeff();
  for (int i = 0; i < n; ++i) {
    if (scale == 0.0 || std::abs(es.eigenvalues()(i)) < tol * scale) basis.push_back(es.eigenvectors().col(i));
  }
  return basis;
}

int numerical_rank(const PatternMatrix& a, double tol) {
  return a.n() - static_cast<int>(kernel_basis(a, tol).size());
}

VertexSet zero_set(const Eigen::VectorXd& x, double tol) {
  VertexSet zeros;
  if (x.size() == 0) return zeros;
  const double cutoff = tol * x.cwiseAbs().maxCoeff();
  for (int i = 0; i < x.size(); ++i) {
    if (std::abs(x(i)) <= cutoff) zeros = zeros.with(i);
  }
  return zeros;
}

TheoremReport support_implies_failed(const Graph& g, const PatternMatrix& a, Rule rule, int trials,
                                     std::uint64_t seed) {
  require_pattern(g, a);
  if (rule == Rule::PositiveSemidefinite && !a.psd) throw LinalgError("psd rule needs a positive semidefinite matrix");
  const std::string theorem = rule == Rule::Standard ? "Cor 2.10" : "Prop 2.12";
  std::ostringstream label;
  label << "n=" << g.order() << " m=" << g.size();

  const auto basis = kernel_basis(a);
  const int k = static_cast<int>(basis.size());
  const int n = a.n();
  Eigen::MatrixXd b(n, k);
  for (int j = 0; j < k; ++j) b.col(j) = basis[j];

  std::vector<Eigen::VectorXd> vectors(basis.begin(), basis.end());
  Rng rng(seed);
  for (int t = 0; k > 0 && t < trials; ++t) {
    Eigen::VectorXd c(k);
    for (int j = 0; j < k; ++j) c(j) = rng.range(-1.0, 1.0);
    vectors.push_back(b * c);
    if (k < 2) continue;
    // Vanish on r random coordinates, r < k, via the null space of those rows.
    const int r = 1 + rng.index(k - 1);
    std::vector<int> rows(n);
    for (int i = 0; i < n; ++i) rows[i] = i;
    for (int i = 0; i < r; ++i) std::swap(rows[i], rows[i + rng.index(n - i)]);
    Eigen::MatrixXd sub(r, k);
    for (int i = 0; i < r; ++i) sub.row(i) = b.row(rows[i]);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(sub, Eigen::ComputeFullV);
    vectors.push_back(b * svd.matrixV().col(k - 1));
  }

  for (const Eigen::VectorXd& x : vectors) {
    if (x.size() == 0 || x.cwiseAbs().maxCoeff() == 0.0) continue;
    const VertexSet s = zero_set(x);
    if (!is_failed_set(g, s, rule)) {
      return {theorem, label.str(), "holds", "violated: zero set " + to_string(s) + " forces", false};
    }
  }
  return {theorem, label.str(), "holds", "holds", true};
}

TheoremReport rank_lower_bound_check(const FamilySpec& spec, const PatternMatrix& a) {
  require_pattern(build_family(spec), a);
  const long mr = table51_value(spec, Parameter::mr).value;
  const long mrplus = table51_value(spec, Parameter::mrplus).value;
  const long bound = a.psd ? std::max(mr, mrplus) : mr;
  const int rank = numerical_rank(a);
  std::ostringstream observed;
  observed << "rank " << rank << " >= " << bound;
  const bool ok = rank >= bound;
  return {"mr bound", to_string(spec), "holds", ok ? "holds" : "violated: " + observed.str(), ok};
}

PatternMatrix trial_matrix(const Graph& g, Rule rule, int trial, std::uint64_t seed) {
  const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(trial));
  Rng pick(derive_seed(s, 1));
  auto eigen_shift = [&](const PatternMatrix& m) {
    if (m.n() == 0) return m;
    const Eigen::VectorXd ev = eigenvalues(m.entries);
    return shifted(m, -ev(pick.index(m.n())));
  };
  auto least_shift = [](const PatternMatrix& m) {
    if (m.n() == 0) return m;
    return shifted(m, -eigenvalues(m.entries)(0));
  };
  if (rule == Rule::Standard) {
    switch (trial % 4) {
      case 0: return eigen_shift(sample_pattern_matrix(g, s));
      case 1: return eigen_shift(unit_laplacian(g));
      case 2: return eigen_shift(weighted_laplacian(g, s));
      default: return eigen_shift(adjacency_matrix(g));
    }
  }
  switch (trial % 5) {
    case 0: return weighted_laplacian(g, s);
    case 1: return unit_laplacian(g);
    case 2: {
      PatternMatrix l = weighted_laplacian(g, s);
      const double top = g.order() == 0 ? 0.0 : eigenvalues(l.entries)(g.order() - 1);
      l.entries = top * Eigen::MatrixXd::Identity(g.order(), g.order()) - l.entries;
      l.psd = is_numerically_psd(l.entries);
      return l;
    }
    case 3: return least_shift(adjacency_matrix(g));
    default: return least_shift(sample_pattern_matrix(g, s));
  }
}

void write_dense(std::ostream& out, const Eigen::MatrixXd& a) {
  std::ostringstream buf;
  buf << std::setprecision(17);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      if (j) buf << ' ';
      buf << a(i, j);
    }
    buf << '\n';
  }
  out << buf.str();
}

}  // namespace forcekit
