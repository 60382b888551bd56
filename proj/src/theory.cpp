#include "sgpd/theory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sgpd/errors.hpp"

namespace sgpd {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double capped_exp(double lv) {
  if (lv > 709.0) return kInf;
  return std::exp(lv);
}

}  // namespace

ConvergenceConstants convergence_constants(double delta, int diam, int period) {
  if (!(delta > 0.0) || delta > 1.0) throw Error("delta must lie in (0, 1]");
  if (diam < 1 || period < 1) throw Error("diameter and period must be positive");

  double db = static_cast<double>(diam) * period;
  double log_x = db * std::log(delta);  // x = delta^(diam*period), log_x <= 0

  ConvergenceConstants cc;
  cc.log_c = std::log(4.0) - log_x;
  cc.c = capped_exp(cc.log_c);
  if (log_x == 0.0) {  // delta == 1
    cc.q = 0.0;
    cc.one_minus_q = 1.0;
  } else {
    double x = std::exp(log_x);
    double log_q = std::log1p(-x) / db;
    cc.q = std::exp(log_q);
    cc.one_minus_q = -std::expm1(log_q);  // precise for x near 0
  }
  return cc;
}

IterationBound iteration_lower_bound(const ProblemConstants& pc,
                                     const ConvergenceConstants& cc, double eps) {
  if (!(eps > 0.0)) throw Error("eps must be positive");
  if (!(pc.smoothness > 0.0)) throw Error("smoothness constant must be positive");
  if (!(cc.one_minus_q > 0.0)) throw Error("q must be below 1");

  double log_l = std::log(pc.smoothness);
  double log_1mq = std::log(cc.one_minus_q);
  double log_s = pc.s_const() > 0.0 ? std::log(pc.s_const()) : -kInf;
  double log_a = pc.a_const() > 0.0 ? std::log(pc.a_const()) : -kInf;
  double log_n = std::log(static_cast<double>(pc.nodes));
  double log_eps = std::log(eps);

  IterationBound b;
  b.log_t_lower =
      std::log(24.0) + 2.0 * log_l + 2.0 * cc.log_c + log_s - 2.0 * log_1mq - log_eps;
  b.t_lower = capped_exp(b.log_t_lower);

  double t1 = log_n;
  double t2 = std::log(18.0) + 2.0 * cc.log_c + 2.0 * log_l + 2.0 * log_n - 2.0 * log_1mq;
  double t3 = std::log(16.0) + 2.0 * log_a - log_n - 2.0 * log_eps;
  double t4 = b.log_t_lower;
  b.log_four_term_max = std::max({t1, t2, t3, t4});
  b.four_term_max = capped_exp(b.log_four_term_max);
  b.fourth_term_dominates = t4 >= t1 && t4 >= t2 && t4 >= t3;
  return b;
}

EpsilonWindow epsilon_window(const ProblemConstants& pc, const ConvergenceConstants& cc) {
  EpsilonWindow w;
  w.degenerate = pc.nodes < 2 || pc.s_const() <= 0.0;

  double a = pc.a_const();
  double s = pc.s_const();
  double n = static_cast<double>(pc.nodes);
  double l = pc.smoothness;

  if (s <= 0.0) {
    w.lo = kInf;
    w.hi = 0.0;
    w.nonempty = false;
    return w;
  }
  if (a <= 0.0) {
    w.lo = 0.0;
  } else {
    double log_lo = std::log(2.0) + 2.0 * std::log(cc.one_minus_q) + 2.0 * std::log(a) -
                    (std::log(3.0) + 2.0 * std::log(l) + 2.0 * cc.log_c + std::log(n) +
                     std::log(s));
    w.lo = capped_exp(log_lo);
  }
  double hi1 = 4.0 * s / (3.0 * n * n);
  double log_hi2 = std::log(24.0) + 2.0 * std::log(l) + 2.0 * cc.log_c + std::log(s) -
                   std::log(n) - 2.0 * std::log(cc.one_minus_q);
  w.hi = std::min(hi1, capped_exp(log_hi2));
  w.nonempty = w.lo <= w.hi;
  return w;
}

SlotPrediction predicted_total_slots(const IterationBound& bound, int tau) {
  if (tau < 1) throw Error("slot count must be positive");
  SlotPrediction p;
  p.log_total_slots = bound.log_t_lower + std::log(static_cast<double>(tau));
  p.total_slots = capped_exp(p.log_total_slots);
  return p;
}

}  // namespace sgpd
