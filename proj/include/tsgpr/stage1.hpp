#pragma once

#include <optional>
#include <vector>

#include "tsgpr/dataset.hpp"
#include "tsgpr/gpr.hpp"

namespace tsgpr {

struct IntactCutoff {
  double value = 1.25;
};

/// States with |parameter - anchor| <= |cutoff - anchor|; the reference
/// is always retained. Works for increasing and decreasing paths.
Dataset apply_cutoff(const Dataset& data, const IntactCutoff& cutoff);

struct ResponseSample {
  Invariants inv;
  double zeta = 0.0;
  double gamma1 = 0.0;
  double gamma2 = 0.0;
  int rank = 3;  // numerical rank of the per-state linear system
};

/// Per-state minimum-norm least-squares solve of the 9x3 tensor-basis
/// system (Eq.-21 form). Uniaxial states are structurally rank-2
/// (Dev(Cbar) is parallel to Dev(I) for C = diag(a, b, b)), so the
/// isochoric pair is only identifiable up to the null direction; this
/// overload returns the minimum-norm representative. The reference
/// state returns (0, 0, 0) by convention.
ResponseSample extract_response_functions(const State& state);

/// Incompressible variant: 9x2 solve against the Lagrange-multiplier-
/// eliminated basis columns. Same null-space caveat (rank 1 on
/// uniaxial paths); minimum-norm representative, (0, 0) at lambda = 1.
ResponseSample extract_response_functions_incompressible(const State& state);

/// Dataset-wide extraction that resolves the uniaxial null space with a
/// shared affine anchor: gamma1 ~ p + q*I1bar, gamma2 ~ r, fitted to the
/// identifiable components of every state and projected back onto each
/// state's solution manifold, so every per-state fit is preserved
/// exactly. Full-rank states are untouched and also inform the anchor.
/// The reference state keeps zeta = 0 and takes anchored gammas.
std::vector<ResponseSample> extract_response_functions_anchored(const Dataset& data);

/// GPR with column-mean centering and a single shared output scale;
/// nuggets act on the normalized scale.
class OutputScaledGpr {
 public:
  OutputScaledGpr() = default;
  OutputScaledGpr(Eigen::VectorXd offset, double scale, GprModel gpr)
      : offset_(std::move(offset)), scale_(scale), gpr_(std::move(gpr)) {}

  static OutputScaledGpr train(const Eigen::MatrixXd& Z, const Eigen::MatrixXd& Y,
                               const Eigen::VectorXd& nuggets, const OptimizeOptions& opts = {});

  Eigen::VectorXd predict_mean(const Eigen::VectorXd& z) const;
  double predict_scalar(double z) const;
  /// Predictive variance on the raw output scale.
  double predict_variance(const Eigen::VectorXd& z) const;

  const GprModel& gpr() const { return gpr_; }
  const Eigen::VectorXd& offset() const { return offset_; }
  double scale() const { return scale_; }

 private:
  Eigen::VectorXd offset_;
  double scale_ = 1.0;
  GprModel gpr_;
};

struct NuggetPair {
  double reference;
  double bulk;
};

struct Stage1NuggetPolicy {
  NuggetPair m_vol{1e-5, 1e-2};
  NuggetPair m_iso{1.0, 1.0};
};

struct Stage1Models {
  std::optional<OutputScaledGpr> m_vol;  // absent in incompressible mode
  OutputScaledGpr m_iso;
  bool incompressible = false;
};

/// Trains M_vol on (J -> zeta) and M_iso on ((I1bar, I2bar) ->
/// (gamma1, gamma2)) from the intact subset; incompressible datasets
/// train only M_iso.
Stage1Models train_stage1(const Dataset& data, const IntactCutoff& cutoff,
                          const Stage1NuggetPolicy& nuggets, const OptimizeOptions& opts = {});

}  // namespace tsgpr
