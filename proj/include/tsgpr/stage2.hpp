#pragma once

#include <vector>

#include "tsgpr/constrained.hpp"
#include "tsgpr/dataset.hpp"
#include "tsgpr/stage1.hpp"

namespace tsgpr {

struct EnergyTracePoint {
  double parameter = 0.0;
  double w = 0.0;    // intact strain energy density
  double chi = 1.0;  // extracted stress-reduction factor
};

struct EnergyTrace {
  std::vector<EnergyTracePoint> points;
  double w_peak = 0.0;
};

/// Stage-I intact stress reconstruction at one state.
SymTensor3 predict_intact_stress(const Stage1Models& models, const SymTensor3& C);

/// Cumulative trapezoidal evaluation of the intact work integral
/// S : dC/2 along the path; the path must start at the reference.
/// Incompressible paths use the scalar axial form S11 d(lambda).
std::vector<double> integrate_energy(const std::vector<SymTensor3>& path,
                                     const std::vector<SymTensor3>& intact_stress,
                                     bool incompressible);

/// Scalar least-squares solution of S = chi * S_intact; returns 1 when
/// both stresses vanish (reference convention).
double extract_chi(const SymTensor3& S, const SymTensor3& S_intact);

/// Runs the full Stage-II data assembly over every state of the
/// dataset: intact predictions, W integration, pointwise chi.
EnergyTrace build_stage2_dataset(const Dataset& data, const Stage1Models& models);

std::vector<WChiPoint> trace_to_points(const EnergyTrace& trace);

void save_trace_csv(const EnergyTrace& trace, const std::string& path);

}  // namespace tsgpr
