#pragma once

#include <string>

#include "tsgpr/metrics.hpp"
#include "tsgpr/serialize.hpp"

namespace tsgpr {

struct FitReport {
  double nlml_vol = 0.0;
  double nlml_iso = 0.0;
  double nlml_dam = 0.0;
  double penalty_nn = 0.0;
  double penalty_mono = 0.0;
  double w_peak = 0.0;
  bool constraints_satisfied = true;
  double final_lambda = 0.0;
  EnergyTrace trace;
};

struct FitResult {
  TwoStageModel model;
  FitReport report;
};

Dataset resolve_dataset(const RunConfig& config);

/// Full two-stage training pipeline for a run configuration.
FitResult fit_two_stage(const Dataset& data, const RunConfig& config);

Json fit_report_json(const FitReport& r);

struct BenchmarkRow {
  std::string model;
  ErrorReport tension;
};

struct BenchmarkResult {
  std::vector<BenchmarkRow> rows;  // proposed, analytical, black-box, direct
  ErrorReport compression_proposed;
  ErrorReport shear_proposed;
  std::string text_table;
};

/// Trains all four models on the configured tension dataset and
/// evaluates them in-distribution, plus the proposed model on the
/// out-of-sample compression and shear grids. Writes per-point error
/// CSVs under config.output_dir.
BenchmarkResult run_benchmark(const RunConfig& config);

/// Per-point CSV along a path: parameter, stress components, energies
/// and the stress-reduction factor.
std::string predict_csv(const TwoStageModel& model, const DeformationPath& path);

}  // namespace tsgpr
