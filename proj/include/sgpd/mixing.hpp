#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "sgpd/graph.hpp"

namespace sgpd {

// Column-stochastic aggregation weights. Row i = receiver, column j =
// transmitter: W(i,j) != 0 requires link (j,i) or i == j. Stored column-major
// sparse, mirroring the per-transmitter broadcast structure. Immutable.
class MixingMatrix {
 public:
  MixingMatrix(int n, const std::vector<Eigen::Triplet<double>>& entries, Digraph support);

  int size() const { return n_; }
  const Eigen::SparseMatrix<double>& matrix() const { return w_; }
  const Digraph& support() const { return support_; }
  Eigen::MatrixXd dense() const { return Eigen::MatrixXd(w_); }
  bool is_symmetric(double tol = 1e-12) const;

 private:
  int n_ = 0;
  Eigen::SparseMatrix<double> w_;
  Digraph support_;
};

// Each transmitter splits unit weight evenly over its out-links and itself:
// column j holds out_degree(j) + 1 entries of 1 / (out_degree(j) + 1). This
// maximizes the minimum weight for the given activated graph. An empty graph
// yields the identity.
MixingMatrix uniform_column_stochastic(const Digraph& g_a);

// Metropolis-Hastings weights on the base topology: symmetric and doubly
// stochastic, W(i,j) = 1 / (1 + max(deg_i, deg_j)) on edges, diagonal absorbs
// the remainder. The standard baseline for symmetric-mixing algorithms.
MixingMatrix metropolis_hastings(const BaseTopology& base);

// Smallest strictly positive entry, diagonals included.
// Throws on an all-zero matrix.
double min_weight(const Eigen::SparseMatrix<double>& w);
double min_weight(const MixingMatrix& w);

// rho = max(|lambda_2|, |lambda_n|) of a symmetric mixing matrix, computed by
// power iteration on the mean-centered matrix (tolerance 1e-9, deterministic
// alternating-sign start). Throws AsymmetricError on asymmetric input.
double spectral_gap_param(const MixingMatrix& w);

}  // namespace sgpd
