#pragma once

#include <functional>
#include <limits>

#include <Eigen/Cholesky>
#include <Eigen/Dense>

#include "tsgpr/error.hpp"
#include "tsgpr/lbfgs.hpp"

namespace tsgpr {

struct Hyperparameters {
  double signal_variance = 0.0;  // sigma_f^2
  double length_scale = 0.0;     // ell
};

/// Matern 5/2 covariance at distance r (nugget handled by gram()).
double matern52(double r, const Hyperparameters& hp);

/// d k(z, z') / d z' for scalar inputs (Eq.-33 form).
double matern52_dz2(double z, double z2, const Hyperparameters& hp);

/// K[i][j] = k(z_i, z_j) + alpha_i * delta_ij.
Eigen::MatrixXd gram(const Eigen::MatrixXd& Z, const Hyperparameters& hp,
                     const Eigen::VectorXd& nuggets);

/// Cholesky with a single jitter escalation (1e-10 * trace/n) on failure.
Eigen::LLT<Eigen::MatrixXd> cholesky_with_jitter(Eigen::MatrixXd K);

struct Prediction {
  Eigen::VectorXd mean;
  double variance = 0.0;
};

/// Trained zero-mean Matern-5/2 Gaussian-process regressor with
/// per-point nuggets. Immutable once trained; predict is const.
class GprModel {
 public:
  Eigen::MatrixXd inputs;   // n x d_in
  Eigen::MatrixXd outputs;  // n x d_out
  Hyperparameters hp;
  Eigen::VectorXd nuggets;  // n

  /// Rebuild the Cholesky factor and K^-1 Y for the current fields.
  void refactorize();

  /// Negative marginal log-likelihood, matrix form: the quadratic term
  /// is summed over output columns, log det K enters once.
  double nlml() const;

  Prediction predict(const Eigen::VectorXd& z) const;
  double predict_scalar(double z) const {
    Eigen::VectorXd q(1);
    q << z;
    return predict(q).mean[0];
  }

  /// Posterior mean of d f / d z at z for scalar-input models,
  /// assembled from the analytic kernel derivative.
  double predict_derivative(double z) const;

  const Eigen::MatrixXd& kinv_y() const { return alpha_; }

 private:
  Eigen::LLT<Eigen::MatrixXd> llt_;
  Eigen::MatrixXd alpha_;  // K^-1 Y
};

/// Extra objective term evaluated on the current model state (used by
/// the constrained stage-II training).
using PenaltyFn = std::function<double(const GprModel&)>;

struct OptimizeOptions {
  int restarts = 5;
  unsigned long long seed = 42;
  double fd_step = 1e-6;  // central-difference step in log-space
  LbfgsOptions lbfgs;
  Hyperparameters init;  // zero => data-driven default
};

/// sigma_f = std(Y), ell = median pairwise input distance.
Hyperparameters default_init(const Eigen::MatrixXd& Z, const Eigen::MatrixXd& Y);

/// Multi-start quasi-Newton NLML minimization over log hyperparameters.
/// Deterministic for a fixed seed; restart selection is by objective
/// with ties broken by restart index.
GprModel optimize(const Eigen::MatrixXd& Z, const Eigen::MatrixXd& Y,
                  const Eigen::VectorXd& nuggets, const OptimizeOptions& opts = {},
                  const PenaltyFn& penalty = nullptr);

}  // namespace tsgpr
