#include "tsgpr/constrained.hpp"

#include <algorithm>
#include <cmath>

namespace tsgpr {

std::vector<WChiPoint> augment_failure_points(const std::vector<WChiPoint>& data,
                                              const ConstraintConfig& config) {
  if (data.empty()) throw EmptyDataset("augment_failure_points");
  double w_peak = 0.0;
  for (const auto& p : data) w_peak = std::max(w_peak, p.w);
  std::vector<WChiPoint> out = data;
  const int n = config.augment_count;
  for (int i = 0; i < n; ++i) {
    const double t = n > 1 ? static_cast<double>(i) / (n - 1) : 0.0;
    out.push_back({(config.augment_lo + (config.augment_hi - config.augment_lo) * t) * w_peak, 0.0});
  }
  return out;
}

std::vector<double> constraint_points(double w_peak, const ConstraintConfig& config) {
  std::vector<double> wc(config.n_constraint_points);
  for (int i = 0; i < config.n_constraint_points; ++i) {
    const double t =
        config.n_constraint_points > 1 ? static_cast<double>(i) / (config.n_constraint_points - 1) : 0.0;
    wc[i] = (config.range_lo + (config.range_hi - config.range_lo) * t) * w_peak;
  }
  return wc;
}

double penalty_nn(const GprModel& model, const std::vector<double>& wc, double lambda) {
  double acc = 0.0;
  for (double w : wc) {
    const double v = std::min(0.0, model.predict_scalar(w));
    acc += v * v;
  }
  return lambda * acc;
}

double penalty_mono(const GprModel& model, const std::vector<double>& wc, double lambda) {
  double acc = 0.0;
  for (double w : wc) {
    const double v = std::min(0.0, -model.predict_derivative(w));
    acc += v * v;
  }
  return lambda * acc;
}

namespace {

bool feasible(const GprModel& model, const std::vector<double>& wc, double tol) {
  for (double w : wc) {
    if (model.predict_scalar(w) < -tol) return false;
    if (model.predict_derivative(w) > tol) return false;
  }
  return true;
}

}  // namespace

DamageModel train_damage_model(const std::vector<WChiPoint>& data, const ConstraintConfig& config,
                               double nugget, const OptimizeOptions& opts) {
  if (data.size() < 3) throw TooFewPoints("stage-II training needs at least 3 (W, chi) pairs");
  double w_lo = data.front().w, w_hi = data.front().w;
  for (const auto& p : data) {
    w_lo = std::min(w_lo, p.w);
    w_hi = std::max(w_hi, p.w);
  }
  if (!(w_hi > w_lo)) throw EmptyDataset("all W values identical; length scale unidentifiable");

  DamageModel dm;
  dm.w_peak = w_hi;
  dm.config = config;

  const std::vector<WChiPoint> aug = augment_failure_points(data, config);
  Eigen::MatrixXd Z(aug.size(), 1), Y(aug.size(), 1);
  for (size_t i = 0; i < aug.size(); ++i) {
    Z(i, 0) = aug[i].w;
    Y(i, 0) = aug[i].chi;
  }
  const Eigen::VectorXd nuggets = Eigen::VectorXd::Constant(Z.rows(), nugget);
  const std::vector<double> wc = constraint_points(dm.w_peak, config);

  double lambda_nn = config.lambda_nn, lambda_mono = config.lambda_mono;
  const auto penalty = [&](const GprModel& m) {
    return penalty_nn(m, wc, lambda_nn) + penalty_mono(m, wc, lambda_mono);
  };
  const bool penalized = lambda_nn > 0.0 || lambda_mono > 0.0;

  OptimizeOptions o = opts;
  dm.gpr = optimize(Z, Y, nuggets, o, penalized ? PenaltyFn(penalty) : PenaltyFn());
  dm.final_lambda = std::max(lambda_nn, lambda_mono);

  if (penalized) {
    // quadratic-penalty continuation: escalate until the posterior
    // satisfies the constraint tolerances at the constraint points
    while (!feasible(dm.gpr, wc, config.tolerance) && std::max(lambda_nn, lambda_mono) < 1e7) {
      lambda_nn *= 10.0;
      lambda_mono *= 10.0;
      o.init = dm.gpr.hp;  // warm start
      o.restarts = 1;
      dm.gpr = optimize(Z, Y, nuggets, o, PenaltyFn(penalty));
      dm.final_lambda = std::max(lambda_nn, lambda_mono);
    }
    dm.constraints_satisfied = feasible(dm.gpr, wc, config.tolerance);
  }
  return dm;
}

}  // namespace tsgpr
