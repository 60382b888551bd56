#include "sgpd/mixing.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace sgpd {

MixingMatrix::MixingMatrix(int n, const std::vector<Eigen::Triplet<double>>& entries,
                           Digraph support)
    : n_(n), w_(n, n), support_(std::move(support)) {
  w_.setFromTriplets(entries.begin(), entries.end());
  w_.makeCompressed();

  Eigen::VectorXd colsum = Eigen::VectorXd::Zero(n);
  for (int j = 0; j < w_.outerSize(); ++j) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(w_, j); it; ++it) {
      if (it.value() < 0.0) throw Error("negative mixing weight");
      colsum[j] += it.value();
    }
  }
  for (int j = 0; j < n; ++j) {
    if (std::abs(colsum[j] - 1.0) > 1e-12) {
      throw Error("column " + std::to_string(j) + " sums to " +
                  std::to_string(colsum[j]) + ", not 1");
    }
    if (w_.coeff(j, j) <= 0.0) {
      throw Error("zero diagonal at node " + std::to_string(j));
    }
  }
}

bool MixingMatrix::is_symmetric(double tol) const {
  Eigen::SparseMatrix<double> diff = Eigen::SparseMatrix<double>(w_.transpose()) - w_;
  for (int j = 0; j < diff.outerSize(); ++j) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(diff, j); it; ++it) {
      if (std::abs(it.value()) > tol) return false;
    }
  }
  return true;
}

MixingMatrix uniform_column_stochastic(const Digraph& g_a) {
  int n = g_a.node_count();
  std::vector<Eigen::Triplet<double>> entries;
  entries.reserve(g_a.link_count() + n);
  for (NodeId j = 0; j < n; ++j) {
    double w = 1.0 / (g_a.out_degree(j) + 1);
    entries.emplace_back(j, j, w);
    for (NodeId i : g_a.out_neighbors(j)) entries.emplace_back(i, j, w);
  }
  return MixingMatrix(n, entries, g_a);
}

MixingMatrix metropolis_hastings(const BaseTopology& base) {
  const UndirectedGraph& g = base.undirected();
  int n = g.node_count();
  std::vector<double> diag(n, 1.0);
  std::vector<Eigen::Triplet<double>> entries;
  for (const auto& [u, v] : g.edges()) {
    double w = 1.0 / (1.0 + std::max(g.degree(u), g.degree(v)));
    entries.emplace_back(u, v, w);
    entries.emplace_back(v, u, w);
    diag[u] -= w;
    diag[v] -= w;
  }
  for (int j = 0; j < n; ++j) entries.emplace_back(j, j, diag[j]);
  return MixingMatrix(n, entries, base.full_digraph());
}

double min_weight(const Eigen::SparseMatrix<double>& w) {
  double mn = 2.0;
  for (int j = 0; j < w.outerSize(); ++j) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(w, j); it; ++it) {
      if (it.value() > 0.0) mn = std::min(mn, it.value());
    }
  }
  if (mn > 1.5) throw Error("mixing matrix has no positive entries");
  return mn;
}

double min_weight(const MixingMatrix& w) { return min_weight(w.matrix()); }

double spectral_gap_param(const MixingMatrix& w) {
  if (!w.is_symmetric()) {
    throw AsymmetricError("spectral gap parameter is defined for symmetric mixing only");
  }
  int n = w.size();
  Eigen::MatrixXd centered =
      w.dense() - Eigen::MatrixXd::Constant(n, n, 1.0 / n);

  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v[i] = (i % 2 == 0) ? 1.0 : -1.0;
  v.normalize();

  double est = 0.0;
  for (int iter = 0; iter < 10000; ++iter) {
    Eigen::VectorXd u = centered * v;
    double norm = u.norm();
    if (norm < 1e-300) return 0.0;
    if (iter > 0 && std::abs(norm - est) <= 1e-9 * std::max(est, 1.0)) return norm;
    est = norm;
    v = u / norm;
  }
  return est;
}

}  // namespace sgpd
