#pragma once

#include <utility>
#include <vector>

#include "tsgpr/gpr.hpp"

namespace tsgpr {

struct ConstraintConfig {
  int n_constraint_points = 30;
  double range_lo = 0.8;  // multiples of W_peak
  double range_hi = 1.7;
  double lambda_nn = 1e3;
  double lambda_mono = 1e3;
  double augment_lo = 1.3;  // multiples of W_peak
  double augment_hi = 2.6;
  int augment_count = 10;
  double tolerance = 1e-3;  // post-training feasibility tolerance
};

struct WChiPoint {
  double w;
  double chi;
};

/// Appends `augment_count` chi = 0 anchors uniformly spaced over
/// [augment_lo, augment_hi] * W_peak; W_peak is the maximum W of the
/// incoming data and is recorded before augmentation.
std::vector<WChiPoint> augment_failure_points(const std::vector<WChiPoint>& data,
                                              const ConstraintConfig& config);

/// Uniformly spaced constraint inputs over [range_lo, range_hi] * W_peak.
std::vector<double> constraint_points(double w_peak, const ConstraintConfig& config);

double penalty_nn(const GprModel& model, const std::vector<double>& wc, double lambda);
double penalty_mono(const GprModel& model, const std::vector<double>& wc, double lambda);

struct DamageModel {
  GprModel gpr;
  double w_peak = 0.0;
  ConstraintConfig config;
  bool constraints_satisfied = true;  // false => ConstraintViolation warning
  double final_lambda = 0.0;          // penalty weight at which training converged

  double chi(double w) const { return gpr.predict_scalar(w); }
  double dchi_dw(double w) const { return gpr.predict_derivative(w); }
};

/// Stage-II training: penalized NLML over log hyperparameters. If the
/// optimum at the configured penalty weight violates the non-negativity
/// or monotonicity tolerances at the constraint points, the weights are
/// escalated tenfold (warm-started) until they hold or 1e7 is reached;
/// the result then carries the warning flag instead.
DamageModel train_damage_model(const std::vector<WChiPoint>& data, const ConstraintConfig& config,
                               double nugget, const OptimizeOptions& opts = {});

}  // namespace tsgpr
