#include "tsgpr/metrics.hpp"

#include <fstream>

#include "tsgpr/dataset.hpp"

namespace tsgpr {

double relative_error_percent(const SymTensor3& pred, const SymTensor3& truth) {
  const double denom = truth.norm();
  if (denom == 0.0) throw DomainError("relative error undefined for zero reference stress");
  return 100.0 * (pred - truth).norm() / denom;
}

ErrorReport error_report(const std::vector<SymTensor3>& pred,
                         const std::vector<SymTensor3>& truth,
                         const std::vector<double>& parameters) {
  if (pred.size() != truth.size() || pred.size() != parameters.size())
    throw ConfigError("error_report size mismatch");
  ErrorReport r;
  double sum = 0.0;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    if (truth[i].norm() == 0.0) {
      ++r.excluded;
      continue;
    }
    const double e = relative_error_percent(pred[i], truth[i]);
    r.points.push_back({static_cast<int>(i), parameters[i], e});
    sum += e;
    if (e > r.max) {
      r.max = e;
      r.argmax = static_cast<int>(i);
    }
  }
  if (!r.points.empty()) r.mean = sum / static_cast<double>(r.points.size());
  return r;
}

void save_error_csv(const ErrorReport& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << "index,parameter,error_percent\n";
  for (const auto& p : report.points)
    out << p.index << ',' << format_double(p.parameter) << ',' << format_double(p.error_percent)
        << '\n';
}

}  // namespace tsgpr
