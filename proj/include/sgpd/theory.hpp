#pragma once

namespace sgpd {

// Problem-side constants of the convergence analysis, measured or configured
// for the synthetic objectives.
struct ProblemConstants {
  double smoothness = 1.0;       // L: Lipschitz constant of the local gradients
  double noise_var = 0.0;        // sigma^2: gradient noise variance bound
  double heterogeneity = 0.0;    // zeta^2: cross-node gradient dispersion bound
  int nodes = 1;                 // n
  double f0 = 0.0;               // objective value at the initial average
  double f_star = 0.0;           // optimal objective value
  double x0_max_norm = 0.0;      // max_i |x_i(0)|

  // A = 2 f0 - 2 f* + L sigma^2
  double a_const() const {
    return 2.0 * f0 - 2.0 * f_star + smoothness * noise_var;
  }
  // S = x0_max_norm^2 + n^2 sigma^2 + 3 n^2 zeta^2
  double s_const() const {
    double n2 = static_cast<double>(nodes) * nodes;
    return x0_max_norm * x0_max_norm + n2 * noise_var + 3.0 * n2 * heterogeneity;
  }
};

// The only two mixing-dependent convergence parameters:
//   C = 4 / delta^(diam * period),   q = (1 - delta^(diam * period))^(1 / (diam * period)).
// Carried with log_c and one_minus_q so they stay usable when delta^(diam*period)
// underflows (log C = log 4 - diam*period*log delta; 1-q via expm1/log1p).
struct ConvergenceConstants {
  double c = 4.0;
  double log_c = 0.0;
  double q = 0.0;
  double one_minus_q = 1.0;
};

ConvergenceConstants convergence_constants(double delta, int diam, int period);

// Iteration count guaranteeing eps-convergence of the running-average squared
// gradient norm: T = 24 L^2 C^2 S / ((1-q)^2 eps), plus the four-term maximum
// the analysis actually requires; inside the feasible eps window both agree.
struct IterationBound {
  double log_t_lower = 0.0;
  double t_lower = 0.0;              // linear rendering, may be +inf
  double log_four_term_max = 0.0;
  double four_term_max = 0.0;
  bool fourth_term_dominates = true;
};

IterationBound iteration_lower_bound(const ProblemConstants& pc,
                                     const ConvergenceConstants& cc, double eps);

// The eps interval on which the simple bound is the binding one:
//   2 (1-q)^2 A^2 / (3 L^2 C^2 n S)  <=  eps  <=  min{ 4S/(3n^2), 24 L^2 C^2 S / (n (1-q)^2) }.
struct EpsilonWindow {
  double lo = 0.0;
  double hi = 0.0;
  bool nonempty = false;
  bool degenerate = false;  // n < 2 or S == 0: formulas evaluated but flagged
};

EpsilonWindow epsilon_window(const ProblemConstants& pc, const ConvergenceConstants& cc);

// Slot cost of running to convergence: T * tau, in log space plus a linear
// rendering.
struct SlotPrediction {
  double log_total_slots = 0.0;
  double total_slots = 0.0;
};

SlotPrediction predicted_total_slots(const IterationBound& bound, int tau);

}  // namespace sgpd
