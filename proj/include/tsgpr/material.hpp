#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tsgpr/constrained.hpp"
#include "tsgpr/stage1.hpp"
#include "tsgpr/stage2.hpp"

namespace tsgpr {

struct TrainingMetadata {
  double cutoff = 1.25;
  PathMode path_mode = PathMode::UniaxialTension;
  double nu = 0.49;
  unsigned long long seed = 42;
  int restarts = 5;
};

/// The compiled two-stage constitutive model: Stage-I intact response
/// plus the constrained Stage-II stress-reduction factor.
struct TwoStageModel {
  Stage1Models stage1;
  DamageModel damage;
  TrainingMetadata meta;

  bool incompressible() const { return stage1.incompressible; }
};

struct PathPrediction {
  std::vector<SymTensor3> stress;   // total stress chi~ * S~_intact
  std::vector<SymTensor3> intact;   // S~_intact
  std::vector<double> w;            // intact energy trace
  std::vector<double> psi;          // total energy trace
  std::vector<double> chi;          // chi~ along the path
};

/// Evaluates the model along a loading path anchored at C = I. W is
/// accumulated by the trapezoidal rule over the supplied path, so the
/// whole history must be passed, not a single state.
PathPrediction predict_path(const TwoStageModel& model, const std::vector<SymTensor3>& path);

std::vector<SymTensor3> predict_stress(const TwoStageModel& model,
                                       const std::vector<SymTensor3>& path);

struct FailureEnergyEstimate {
  double psi_f = 0.0;
  bool converged = false;
  double plateau_lo = 0.0;  // parameter window used for the plateau check
  double plateau_hi = 0.0;
};

/// Extends the training deformation mode out to `max_parameter`,
/// integrates the total energy and reports the terminal plateau value.
/// Convergence means the relative change of psi over the final 10% of
/// the extension stays below 1e-3.
FailureEnergyEstimate estimate_failure_energy(const TwoStageModel& model, double max_parameter,
                                              int n_points = 201);

/// Material tangent stiffness 2 dS/dC at a state with accumulated
/// intact energy w. Response-function derivatives come from central
/// finite differences of the Stage-I posterior means; dchi/dW uses the
/// analytic kernel-derivative posterior.
Tensor4 tangent_stiffness(const TwoStageModel& model, const SymTensor3& C, double w);

/// Push-forward c_ijkl = J^-1 F_ip F_jq F_kr F_ls C_pqrs.
Tensor4 spatial_stiffness(const Tensor4& material, const double F[3][3]);

}  // namespace tsgpr
