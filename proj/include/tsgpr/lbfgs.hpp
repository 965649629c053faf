#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace tsgpr {

struct LbfgsOptions {
  int max_iterations = 200;
  int history = 8;
  double grad_tolerance = 1e-7;
  double step_tolerance = 1e-12;
  double c1 = 1e-4;  // Armijo
  double c2 = 0.9;   // curvature
};

struct LbfgsResult {
  Eigen::VectorXd x;
  double f = 0.0;
  int iterations = 0;
  bool line_search_failed_at_start = false;
};

/// Limited-memory BFGS with a strong-Wolfe line search. The objective
/// supplies values only; gradients are taken by central differences so
/// the objective stays pluggable.
LbfgsResult lbfgs_minimize(const std::function<double(const Eigen::VectorXd&)>& f,
                           const Eigen::VectorXd& x0, const LbfgsOptions& opts = {},
                           double fd_step = 1e-6);

/// Central-difference gradient used by the optimizer; exposed for the
/// gradient-consistency checks.
Eigen::VectorXd fd_gradient(const std::function<double(const Eigen::VectorXd&)>& f,
                            const Eigen::VectorXd& x, double step = 1e-6);

}  // namespace tsgpr
