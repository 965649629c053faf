#pragma once

#include <string>
#include <vector>

#include "tsgpr/catalog.hpp"
#include "tsgpr/tensor.hpp"

namespace tsgpr {

struct State {
  double parameter = 0.0;  // lambda or gamma
  SymTensor3 C;
  SymTensor3 S;
};

/// Ordered sequence of deformation states along one loading path.
/// The first state is always the stress-free reference.
struct Dataset {
  std::vector<State> states;
  PathMode mode = PathMode::UniaxialTension;
  bool incompressible = false;

  std::size_t size() const { return states.size(); }

  /// Anchor parameter of the reference state for this mode (1 for
  /// stretch-driven paths, 0 for shear).
  double anchor_parameter() const { return mode == PathMode::SimpleShear ? 0.0 : 1.0; }

  /// Sorts states by distance from the reference, inserts the reference
  /// state if missing, and validates strict monotonicity.
  void canonicalize();
};

Dataset dataset_from_generated(const std::vector<GeneratedState>& gen, PathMode mode);

/// CSV schema: lambda_or_gamma,C11,C22,C33,C12,C13,C23,S11,S22,S33,S12,S13,S23
void save_dataset_csv(const Dataset& data, const std::string& path);
Dataset load_dataset_csv(const std::string& path, PathMode mode = PathMode::UniaxialTension,
                         bool incompressible = false);

/// 17-significant-digit float formatting used for all CSV output.
std::string format_double(double v);

}  // namespace tsgpr
