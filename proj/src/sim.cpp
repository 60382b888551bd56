#include "sgpd/sim.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <string>

#include "sgpd/rng.hpp"

namespace sgpd {

namespace {

// Independent stream tags so problem data, initial state, noise, and probe
// points never share counters.
constexpr uint64_t kStreamCommonTarget = 101;
constexpr uint64_t kStreamNodeTarget = 102;
constexpr uint64_t kStreamCurvature = 103;
constexpr uint64_t kStreamInit = 104;
constexpr uint64_t kStreamNoise = 105;
constexpr uint64_t kStreamProbe = 106;
constexpr uint64_t kStreamFeatures = 107;
constexpr uint64_t kStreamTruth = 108;

constexpr double kDivergenceLoss = 1e12;

}  // namespace

int LocalProblem::dim() const {
  return kind == Kind::quadratic ? static_cast<int>(quad_b.size())
                                 : static_cast<int>(feat.cols());
}

double LocalProblem::value(const Eigen::VectorXd& x) const {
  if (kind == Kind::quadratic) {
    return 0.5 * (quad_a * x - quad_b).squaredNorm();
  }
  double acc = 0.0;
  Eigen::VectorXd margins = feat * x;
  for (int s = 0; s < margins.size(); ++s) {
    double m = -label[s] * margins[s];
    // log(1 + exp(m)) without overflow
    acc += m > 30.0 ? m : std::log1p(std::exp(m));
  }
  return acc / margins.size() + 0.5 * reg * x.squaredNorm();
}

Eigen::VectorXd LocalProblem::gradient(const Eigen::VectorXd& x) const {
  if (kind == Kind::quadratic) {
    return quad_a.transpose() * (quad_a * x - quad_b);
  }
  Eigen::VectorXd g = reg * x;
  Eigen::VectorXd margins = feat * x;
  for (int s = 0; s < margins.size(); ++s) {
    double m = -label[s] * margins[s];
    double sig = m > 30.0 ? 1.0 : std::exp(m) / (1.0 + std::exp(m));
    g -= (label[s] * sig / margins.size()) * feat.row(s).transpose();
  }
  return g;
}

std::vector<LocalProblem> make_problems(int n, const ProblemSpec& spec, uint64_t seed) {
  if (n < 1 || spec.d < 1) throw Error("problem generation needs n >= 1, d >= 1");
  std::vector<LocalProblem> out(n);
  int d = spec.d;

  if (spec.kind == "quadratic") {
    Eigen::VectorXd common(d);
    for (int c = 0; c < d; ++c) {
      common[c] = spec.b_scale * counter_gaussian(seed, kStreamCommonTarget, 0, c);
    }
    for (int i = 0; i < n; ++i) {
      LocalProblem& p = out[i];
      p.kind = LocalProblem::Kind::quadratic;
      p.noise_sigma = spec.noise_sigma;
      p.quad_a = Eigen::MatrixXd::Identity(d, d);
      if (spec.a_spread > 0.0) {
        for (int c = 0; c < d; ++c) {
          p.quad_a(c, c) += spec.a_spread * counter_uniform(seed, kStreamCurvature, i, c);
        }
      }
      p.quad_b = common;
      for (int c = 0; c < d; ++c) {
        p.quad_b[c] += spec.zeta_scale * counter_gaussian(seed, kStreamNodeTarget, i, c);
      }
    }
  } else if (spec.kind == "logistic") {
    Eigen::VectorXd truth(d);
    for (int c = 0; c < d; ++c) truth[c] = counter_gaussian(seed, kStreamTruth, 0, c);
    for (int i = 0; i < n; ++i) {
      LocalProblem& p = out[i];
      p.kind = LocalProblem::Kind::logistic;
      p.noise_sigma = spec.noise_sigma;
      p.reg = 0.01;
      Eigen::VectorXd local_truth = truth;
      for (int c = 0; c < d; ++c) {
        local_truth[c] += spec.zeta_scale * counter_gaussian(seed, kStreamNodeTarget, i, c);
      }
      p.feat.resize(spec.samples, d);
      p.label.resize(spec.samples);
      for (int s = 0; s < spec.samples; ++s) {
        for (int c = 0; c < d; ++c) {
          p.feat(s, c) =
              counter_gaussian(seed, kStreamFeatures, i * 100003ULL + s, c);
        }
        double margin = p.feat.row(s).dot(local_truth);
        p.label[s] = margin >= 0.0 ? 1.0 : -1.0;
      }
    }
  } else {
    throw ConfigError("unknown problem kind '" + spec.kind + "'");
  }
  return out;
}

Eigen::MatrixXd make_initial_state(int n, int d, double x0_scale, uint64_t seed) {
  Eigen::MatrixXd x0(n, d);
  for (int i = 0; i < n; ++i) {
    for (int c = 0; c < d; ++c) {
      x0(i, c) = x0_scale * counter_gaussian(seed, kStreamInit, i, c);
    }
  }
  return x0;
}

double global_value(const std::vector<LocalProblem>& problems, const Eigen::VectorXd& x) {
  double acc = 0.0;
  for (const auto& p : problems) acc += p.value(x);
  return acc / problems.size();
}

Eigen::VectorXd global_gradient(const std::vector<LocalProblem>& problems,
                                const Eigen::VectorXd& x) {
  Eigen::VectorXd g = Eigen::VectorXd::Zero(x.size());
  for (const auto& p : problems) g += p.gradient(x);
  return g / problems.size();
}

Eigen::VectorXd sampled_gradient(const LocalProblem& p, int node, const Eigen::VectorXd& x,
                                 long t, uint64_t seed) {
  Eigen::VectorXd g = p.gradient(x);
  if (p.noise_sigma > 0.0) {
    double scale = p.noise_sigma / std::sqrt(static_cast<double>(x.size()));
    uint64_t noise_seed = hash_combine(seed, kStreamNoise);
    for (int c = 0; c < x.size(); ++c) {
      g[c] += scale * counter_gaussian(noise_seed, static_cast<uint64_t>(node),
                                       static_cast<uint64_t>(t), c);
    }
  }
  return g;
}

Eigen::MatrixXd debias(const SgpState& state) {
  for (int i = 0; i < state.w.size(); ++i) {
    if (!(state.w[i] > 0.0)) {
      throw Error("non-positive push-sum weight at node " + std::to_string(i));
    }
  }
  return state.x.array().colwise() / state.w.array();
}

SgpState sgp_step(const SgpState& state, const MixingMatrix& w_mat,
                  const std::vector<LocalProblem>& problems, double eta, uint64_t seed) {
  const int n = static_cast<int>(state.x.rows());
  if (w_mat.size() != n || static_cast<int>(problems.size()) != n) {
    throw Error("state, mixing matrix, and problem list disagree on node count");
  }
  if (eta < 0.0) throw Error("negative learning rate");

  Eigen::MatrixXd z = debias(state);
  Eigen::MatrixXd u = state.x;
  for (int i = 0; i < n; ++i) {
    u.row(i) -= eta * sampled_gradient(problems[i], i, z.row(i).transpose(), state.t, seed)
                          .transpose();
  }
  SgpState next;
  next.x = w_mat.matrix() * u;
  next.w = w_mat.matrix() * state.w;
  next.t = state.t + 1;
  return next;
}

Eigen::MatrixXd dpsgd_step(const Eigen::MatrixXd& x, const MixingMatrix& w_mat,
                           const std::vector<LocalProblem>& problems, double eta, long t,
                           uint64_t seed) {
  if (!w_mat.is_symmetric()) {
    throw AsymmetricError("symmetric doubly stochastic mixing required");
  }
  const int n = static_cast<int>(x.rows());
  Eigen::MatrixXd u = x;
  for (int i = 0; i < n; ++i) {
    u.row(i) -= eta * sampled_gradient(problems[i], i, x.row(i).transpose(), t, seed)
                          .transpose();
  }
  return w_mat.matrix() * u;
}

Trace run_loop(Algorithm algo, const MixingMatrix& w_mat,
               const std::vector<LocalProblem>& problems, const Eigen::MatrixXd& x0,
               double eta, double eps, long max_iters, uint64_t seed, int tau) {
  if (!(eps > 0.0)) throw Error("eps must be positive");
  if (max_iters < 1) throw Error("max_iters must be positive");
  if (tau < 1) throw Error("slot count must be positive");

  const int n = static_cast<int>(x0.rows());
  SgpState state{x0, Eigen::VectorXd::Ones(n), 0};

  Trace trace;
  trace.tau = tau;
  double grad_sum = 0.0;
  for (long t = 0; t < max_iters; ++t) {
    Eigen::MatrixXd z = algo == Algorithm::sgp ? debias(state) : state.x;
    Eigen::VectorXd xbar = state.x.colwise().mean();

    TraceRecord rec;
    rec.iter = t;
    rec.slots = static_cast<long long>(t + 1) * tau;
    rec.grad_norm_sq = global_gradient(problems, xbar).squaredNorm();
    grad_sum += rec.grad_norm_sq;
    rec.running_avg = grad_sum / (t + 1);
    double consensus = 0.0;
    for (int i = 0; i < n; ++i) {
      consensus = std::max(consensus, (z.row(i).transpose() - xbar).norm());
    }
    rec.consensus_err = consensus;
    rec.loss = global_value(problems, xbar);
    trace.records.push_back(rec);

    if (!std::isfinite(rec.loss) || rec.loss > kDivergenceLoss) {
      throw DivergedError(std::move(trace));
    }
    if (rec.running_avg <= eps) {
      trace.converged = true;
      break;
    }

    if (algo == Algorithm::sgp) {
      state = sgp_step(state, w_mat, problems, eta, seed);
    } else {
      state.x = dpsgd_step(state.x, w_mat, problems, eta, state.t, seed);
      state.t += 1;
    }
  }
  return trace;
}

ProblemConstants measure_constants(const std::vector<LocalProblem>& problems,
                                   const Eigen::MatrixXd& x0, int sample_points,
                                   uint64_t seed) {
  if (problems.empty()) throw Error("no problems");
  for (const auto& p : problems) {
    if (p.kind != LocalProblem::Kind::quadratic) {
      throw Error("exact constants require quadratic problems");
    }
  }
  const int n = static_cast<int>(problems.size());
  const int d = problems.front().dim();

  ProblemConstants pc;
  pc.nodes = n;
  pc.noise_var = problems.front().noise_sigma * problems.front().noise_sigma;

  // L: largest eigenvalue of any A^T A.
  double l = 0.0;
  Eigen::MatrixXd hessian_sum = Eigen::MatrixXd::Zero(d, d);
  Eigen::VectorXd rhs_sum = Eigen::VectorXd::Zero(d);
  for (const auto& p : problems) {
    Eigen::MatrixXd h = p.quad_a.transpose() * p.quad_a;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    l = std::max(l, es.eigenvalues().maxCoeff());
    hessian_sum += h;
    rhs_sum += p.quad_a.transpose() * p.quad_b;
  }
  pc.smoothness = l;

  // Global minimizer in closed form.
  Eigen::VectorXd x_star = hessian_sum.ldlt().solve(rhs_sum);
  pc.f_star = global_value(problems, x_star);
  Eigen::VectorXd xbar0 = x0.colwise().mean();
  pc.f0 = global_value(problems, xbar0);
  double mx = 0.0;
  for (int i = 0; i < x0.rows(); ++i) mx = std::max(mx, x0.row(i).norm());
  pc.x0_max_norm = mx;

  // Heterogeneity: max sampled dispersion of local gradients around the
  // global gradient, probed at random points plus 0 and x*.
  auto dispersion = [&](const Eigen::VectorXd& x) {
    Eigen::VectorXd g = global_gradient(problems, x);
    double acc = 0.0;
    for (const auto& p : problems) acc += (p.gradient(x) - g).squaredNorm();
    return acc / n;
  };
  double zeta2 = std::max(dispersion(Eigen::VectorXd::Zero(d)), dispersion(x_star));
  uint64_t probe_seed = hash_combine(seed, kStreamProbe);
  for (int s = 0; s < sample_points; ++s) {
    Eigen::VectorXd x(d);
    for (int c = 0; c < d; ++c) x[c] = counter_gaussian(probe_seed, s, 0, c);
    zeta2 = std::max(zeta2, dispersion(x));
  }
  pc.heterogeneity = zeta2;
  return pc;
}

}  // namespace sgpd
