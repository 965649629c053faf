#include "tsgpr/stage2.hpp"

#include <cmath>
#include <fstream>

namespace tsgpr {

SymTensor3 predict_intact_stress(const Stage1Models& models, const SymTensor3& C) {
  const Invariants inv = invariants(C);
  const TensorBasis tb = tensor_basis(C);
  Eigen::VectorXd ziso(2);
  ziso << inv.I1bar, inv.I2bar;
  const Eigen::VectorXd g = models.m_iso.predict_mean(ziso);
  if (models.incompressible) {
    const double r22 = tb.g1(1, 1);
    const SymTensor3 b2 = tb.g2 - (tb.g2(1, 1) / r22) * tb.g1;
    const SymTensor3 b3 = tb.g3 - (tb.g3(1, 1) / r22) * tb.g1;
    return g[0] * b2 + g[1] * b3;
  }
  const double zeta = models.m_vol->predict_scalar(inv.J);
  const double s = std::pow(inv.J, -2.0 / 3.0);
  return zeta * tb.g1 + s * (g[0] * tb.g2 + g[1] * tb.g3);
}

std::vector<double> integrate_energy(const std::vector<SymTensor3>& path,
                                     const std::vector<SymTensor3>& intact_stress,
                                     bool incompressible) {
  if (path.empty()) throw EmptyDataset("integrate_energy");
  if ((path.front() - SymTensor3::identity()).norm() > 1e-9) throw PathNotAnchored();
  std::vector<double> W(path.size(), 0.0);
  for (std::size_t i = 1; i < path.size(); ++i) {
    double dw;
    if (incompressible) {
      const double l1 = std::sqrt(path[i - 1](0, 0));
      const double l2 = std::sqrt(path[i](0, 0));
      dw = 0.5 * (intact_stress[i - 1](0, 0) + intact_stress[i](0, 0)) * (l2 - l1);
    } else {
      const SymTensor3 dC = path[i] - path[i - 1];
      dw = (0.5 * (intact_stress[i - 1] + intact_stress[i])).ddot(0.5 * dC);
    }
    W[i] = W[i - 1] + dw;
  }
  return W;
}

double extract_chi(const SymTensor3& S, const SymTensor3& S_intact) {
  const double denom = S_intact.ddot(S_intact);
  if (denom == 0.0) return S.norm() == 0.0 ? 1.0 : 0.0;
  return S_intact.ddot(S) / denom;
}

EnergyTrace build_stage2_dataset(const Dataset& data, const Stage1Models& models) {
  Dataset canon = data;
  canon.canonicalize();
  std::vector<SymTensor3> path, intact;
  path.reserve(canon.size());
  intact.reserve(canon.size());
  for (const auto& s : canon.states) {
    path.push_back(s.C);
    intact.push_back(predict_intact_stress(models, s.C));
  }
  const std::vector<double> W = integrate_energy(path, intact, canon.incompressible);
  EnergyTrace trace;
  trace.points.reserve(canon.size());
  for (std::size_t i = 0; i < canon.size(); ++i) {
    EnergyTracePoint p;
    p.parameter = canon.states[i].parameter;
    p.w = W[i];
    p.chi = i == 0 ? 1.0 : extract_chi(canon.states[i].S, intact[i]);
    trace.points.push_back(p);
    trace.w_peak = std::max(trace.w_peak, p.w);
  }
  return trace;
}

std::vector<WChiPoint> trace_to_points(const EnergyTrace& trace) {
  std::vector<WChiPoint> out;
  out.reserve(trace.points.size());
  for (const auto& p : trace.points) out.push_back({p.w, p.chi});
  return out;
}

void save_trace_csv(const EnergyTrace& trace, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << "index,parameter,W,chi\n";
  for (std::size_t i = 0; i < trace.points.size(); ++i)
    out << i << ',' << format_double(trace.points[i].parameter) << ','
        << format_double(trace.points[i].w) << ',' << format_double(trace.points[i].chi) << '\n';
}

}  // namespace tsgpr
