#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "sgpd/mixing.hpp"
#include "sgpd/theory.hpp"

namespace sgpd {

// A node's local objective. Quadratic: f(x) = 0.5 |A x - b|^2, the workhorse
// with closed-form optimum and constants. Logistic: mean log-loss over a
// synthetic sample plus ridge; no exact constants, simulation only.
struct LocalProblem {
  enum class Kind { quadratic, logistic };
  Kind kind = Kind::quadratic;

  Eigen::MatrixXd quad_a;  // d x d
  Eigen::VectorXd quad_b;  // d

  Eigen::MatrixXd feat;    // samples x d
  Eigen::VectorXd label;   // +-1
  double reg = 0.0;

  double noise_sigma = 0.0;  // gradient noise scale, E|xi|^2 = sigma^2

  int dim() const;
  double value(const Eigen::VectorXd& x) const;
  Eigen::VectorXd gradient(const Eigen::VectorXd& x) const;
};

// Shared knobs for synthetic problem generation.
struct ProblemSpec {
  std::string kind = "quadratic";  // quadratic | logistic
  int d = 10;
  double noise_sigma = 0.0;
  double zeta_scale = 1.0;   // per-node target offset magnitude (heterogeneity)
  double b_scale = 1.0;      // shared target magnitude
  double a_spread = 0.0;     // quadratic only: diagonal spread of A away from I
  double x0_scale = 1.0;     // initial parameter magnitude
  int samples = 32;          // logistic only: samples per node
};

std::vector<LocalProblem> make_problems(int n, const ProblemSpec& spec, uint64_t seed);
Eigen::MatrixXd make_initial_state(int n, int d, double x0_scale, uint64_t seed);

double global_value(const std::vector<LocalProblem>& problems, const Eigen::VectorXd& x);
Eigen::VectorXd global_gradient(const std::vector<LocalProblem>& problems,
                                const Eigen::VectorXd& x);

// Gradient sample: exact local gradient plus counter-seeded Gaussian noise,
// reproducible from (seed, node, t).
Eigen::VectorXd sampled_gradient(const LocalProblem& p, int node, const Eigen::VectorXd& x,
                                 long t, uint64_t seed);

// Gradient-push state: row i of x is node i's parameter vector, w the
// push-sum scalars (start at 1; mass sum stays n under column-stochastic
// mixing).
struct SgpState {
  Eigen::MatrixXd x;  // n x d
  Eigen::VectorXd w;  // n
  long t = 0;
};

// De-biased parameters z_i = x_i / w_i. Throws on non-positive w.
Eigen::MatrixXd debias(const SgpState& state);

// One gradient-push round: gradients at the de-biased parameters, descent,
// then column-stochastic mixing of both x and w.
SgpState sgp_step(const SgpState& state, const MixingMatrix& w_mat,
                  const std::vector<LocalProblem>& problems, double eta, uint64_t seed);

// One symmetric-mixing round (gradients at the raw parameters).
// Throws AsymmetricError when w_mat is not symmetric doubly stochastic.
Eigen::MatrixXd dpsgd_step(const Eigen::MatrixXd& x, const MixingMatrix& w_mat,
                           const std::vector<LocalProblem>& problems, double eta, long t,
                           uint64_t seed);

struct TraceRecord {
  long iter = 0;
  long long slots = 0;            // cumulative: (iter + 1) * tau
  double grad_norm_sq = 0.0;      // |grad f(xbar)|^2 at the start of the iteration
  double running_avg = 0.0;       // running average of grad_norm_sq
  double consensus_err = 0.0;     // max_i |z_i - xbar|
  double loss = 0.0;              // f(xbar)
};

struct Trace {
  std::vector<TraceRecord> records;
  int tau = 1;
  bool converged = false;
};

// Numerical blowup (loss above 1e12) surfaces as a typed error carrying
// everything recorded so far.
struct DivergedError : Error {
  Trace partial;
  explicit DivergedError(Trace t)
      : Error("simulation diverged (loss exceeded 1e12)"), partial(std::move(t)) {}
};

enum class Algorithm { sgp, dpsgd };

// Runs until the running average of squared gradient norms falls to eps or
// max_iters is hit. Deterministic in seed. tau only scales slot accounting.
Trace run_loop(Algorithm algo, const MixingMatrix& w_mat,
               const std::vector<LocalProblem>& problems, const Eigen::MatrixXd& x0,
               double eta, double eps, long max_iters, uint64_t seed, int tau);

// Exact constants for quadratic problems: smoothness from the largest Hessian
// eigenvalue, f*/f0 in closed form, heterogeneity as the max sampled gradient
// dispersion (an estimate, not a certified bound).
ProblemConstants measure_constants(const std::vector<LocalProblem>& problems,
                                   const Eigen::MatrixXd& x0, int sample_points,
                                   uint64_t seed);

}  // namespace sgpd
