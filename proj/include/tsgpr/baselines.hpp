#pragma once

#include "tsgpr/dataset.hpp"
#include "tsgpr/stage1.hpp"

namespace tsgpr {

/// The calibrated analytical reference model: neo-Hookean volumetric
/// part, two-parameter Yeoh isochoric part, Volokh reduced damage.
/// W has a closed form, so no path integration is required.
struct AnalyticalBenchmark {
  double kappa = 99.28;
  double c1 = 1.73;
  double c2 = -0.55;
  double phi = 3.05;
};

SymTensor3 analytical_stress(const AnalyticalBenchmark& bench, const SymTensor3& C);

/// GPR from vec(C) to vec(S), no invariant structure.
struct BlackBoxModel {
  OutputScaledGpr gpr;
  SymTensor3 predict(const SymTensor3& C) const;
};

BlackBoxModel train_blackbox(const Dataset& data, double nugget,
                             const OptimizeOptions& opts = {});

/// Single-stage mappings J -> chi*zeta and (I1bar, I2bar) ->
/// (chi*gamma1, chi*gamma2), fitted to the full (intact + damaged)
/// dataset in one step.
struct DirectModel {
  OutputScaledGpr m_vol;
  OutputScaledGpr m_iso;
  SymTensor3 predict(const SymTensor3& C) const;
};

DirectModel train_direct(const Dataset& data, const Stage1NuggetPolicy& nuggets,
                         const OptimizeOptions& opts = {});

}  // namespace tsgpr
