#include "tsgpr/baselines.hpp"

#include <cmath>

namespace tsgpr {

SymTensor3 analytical_stress(const AnalyticalBenchmark& bench, const SymTensor3& C) {
  const Invariants inv = invariants(C);
  const TensorBasis tb = tensor_basis(C);
  const double x = inv.I1bar - 3.0;
  const double W = bench.kappa / 2.0 * (inv.J - 1.0) * (inv.J - 1.0) + bench.c1 * x +
                   bench.c2 * x * x;
  const double chi = std::exp(-W / bench.phi);
  const double zeta = bench.kappa * inv.J * (inv.J - 1.0);
  const double gamma1 = 2.0 * bench.c1 + 4.0 * bench.c2 * x;
  return chi * (zeta * tb.g1 + std::pow(inv.J, -2.0 / 3.0) * gamma1 * tb.g2);
}

SymTensor3 BlackBoxModel::predict(const SymTensor3& C) const {
  const auto v = C.vectorize();
  const Eigen::VectorXd z = Eigen::Map<const Eigen::VectorXd>(v.data(), 9);
  const Eigen::VectorXd y = gpr.predict_mean(z);
  std::array<double, 9> out;
  for (int k = 0; k < 9; ++k) out[k] = y[k];
  return SymTensor3::devectorize(out);
}

BlackBoxModel train_blackbox(const Dataset& data, double nugget, const OptimizeOptions& opts) {
  if (data.size() < 3) throw TooFewPoints("black-box training needs N >= 3");
  const Eigen::Index n = static_cast<Eigen::Index>(data.size());
  Eigen::MatrixXd Z(n, 9), Y(n, 9);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto vc = data.states[i].C.vectorize();
    const auto vs = data.states[i].S.vectorize();
    for (int k = 0; k < 9; ++k) {
      Z(i, k) = vc[k];
      Y(i, k) = vs[k];
    }
  }
  BlackBoxModel m;
  m.gpr = OutputScaledGpr::train(Z, Y, Eigen::VectorXd::Constant(n, nugget), opts);
  return m;
}

SymTensor3 DirectModel::predict(const SymTensor3& C) const {
  const Invariants inv = invariants(C);
  const TensorBasis tb = tensor_basis(C);
  Eigen::VectorXd z(2);
  z << inv.I1bar, inv.I2bar;
  const Eigen::VectorXd g = m_iso.predict_mean(z);
  const double zeta = m_vol.predict_scalar(inv.J);
  return zeta * tb.g1 + std::pow(inv.J, -2.0 / 3.0) * (g[0] * tb.g2 + g[1] * tb.g3);
}

DirectModel train_direct(const Dataset& data, const Stage1NuggetPolicy& nuggets,
                         const OptimizeOptions& opts) {
  if (data.size() < 3) throw TooFewPoints("direct training needs N >= 3");
  Dataset canon = data;
  canon.canonicalize();
  const auto samples = extract_response_functions_anchored(canon);
  const Eigen::Index n = static_cast<Eigen::Index>(samples.size());
  Eigen::MatrixXd Zvol(n, 1), Yvol(n, 1), Ziso(n, 2), Yiso(n, 2);
  for (Eigen::Index i = 0; i < n; ++i) {
    Zvol(i, 0) = samples[i].inv.J;
    Yvol(i, 0) = samples[i].zeta;
    Ziso(i, 0) = samples[i].inv.I1bar;
    Ziso(i, 1) = samples[i].inv.I2bar;
    Yiso(i, 0) = samples[i].gamma1;
    Yiso(i, 1) = samples[i].gamma2;
  }
  Eigen::VectorXd nug_vol = Eigen::VectorXd::Constant(n, nuggets.m_vol.bulk);
  nug_vol[0] = nuggets.m_vol.reference;
  Eigen::VectorXd nug_iso = Eigen::VectorXd::Constant(n, nuggets.m_iso.bulk);
  nug_iso[0] = nuggets.m_iso.reference;
  DirectModel m;
  m.m_vol = OutputScaledGpr::train(Zvol, Yvol, nug_vol, opts);
  m.m_iso = OutputScaledGpr::train(Ziso, Yiso, nug_iso, opts);
  return m;
}

}  // namespace tsgpr
