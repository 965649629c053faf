#pragma once

#include <string>
#include <vector>

#include "tsgpr/tensor.hpp"

namespace tsgpr {

struct PointError {
  int index;
  double parameter;
  double error_percent;
};

struct ErrorReport {
  std::vector<PointError> points;  // reference state excluded
  double mean = 0.0;
  double max = 0.0;
  int argmax = -1;
  int excluded = 0;  // states skipped because the true stress vanishes
};

/// 100 * ||pred - truth||_F / ||truth||_F.
double relative_error_percent(const SymTensor3& pred, const SymTensor3& truth);

/// Per-point relative errors over a path; points with vanishing true
/// stress (the reference state in particular) are excluded and counted.
ErrorReport error_report(const std::vector<SymTensor3>& pred,
                         const std::vector<SymTensor3>& truth,
                         const std::vector<double>& parameters);

void save_error_csv(const ErrorReport& report, const std::string& path);

}  // namespace tsgpr
