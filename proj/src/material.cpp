#include "tsgpr/material.hpp"

#include <cmath>

namespace tsgpr {

PathPrediction predict_path(const TwoStageModel& model, const std::vector<SymTensor3>& path) {
  if (path.empty()) throw EmptyDataset("predict_path");
  if ((path.front() - SymTensor3::identity()).norm() > 1e-9) throw PathNotAnchored();
  PathPrediction out;
  out.intact.reserve(path.size());
  for (const auto& C : path) out.intact.push_back(predict_intact_stress(model.stage1, C));
  out.w = integrate_energy(path, out.intact, model.incompressible());
  out.chi.reserve(path.size());
  out.stress.reserve(path.size());
  for (std::size_t i = 0; i < path.size(); ++i) {
    out.chi.push_back(model.damage.chi(out.w[i]));
    out.stress.push_back(out.chi.back() * out.intact[i]);
  }
  out.psi = integrate_energy(path, out.stress, model.incompressible());
  return out;
}

std::vector<SymTensor3> predict_stress(const TwoStageModel& model,
                                       const std::vector<SymTensor3>& path) {
  return predict_path(model, path).stress;
}

FailureEnergyEstimate estimate_failure_energy(const TwoStageModel& model, double max_parameter,
                                              int n_points) {
  DeformationPath ext;
  ext.mode = model.meta.path_mode;
  ext.start = model.meta.path_mode == PathMode::SimpleShear ? 0.0 : 1.0;
  ext.stop = max_parameter;
  ext.n_points = n_points;
  ext.nu = model.meta.nu;
  const std::vector<SymTensor3> path = generate_path(ext);
  const PathPrediction pred = predict_path(model, path);

  FailureEnergyEstimate est;
  est.psi_f = pred.psi.back();
  const int window = std::max(2, n_points / 10);
  est.plateau_lo = path_parameters(ext)[n_points - window];
  est.plateau_hi = max_parameter;
  double lo = pred.psi[n_points - window], hi = lo;
  for (int i = n_points - window; i < n_points; ++i) {
    lo = std::min(lo, pred.psi[i]);
    hi = std::max(hi, pred.psi[i]);
  }
  est.converged = std::abs(est.psi_f) > 0.0 && (hi - lo) / std::abs(est.psi_f) <= 1e-3;
  return est;
}

namespace {

struct ResponseDerivatives {
  double zeta, dzeta_dJ;
  double g1, g2;          // gamma1, gamma2
  double dg1_di1, dg1_di2, dg2_di1, dg2_di2;
};

// Central finite differences of the Stage-I posterior means,
// relative step 1e-6.
ResponseDerivatives stage1_derivatives(const Stage1Models& m, const Invariants& inv) {
  ResponseDerivatives d{};
  const double hJ = 1e-6 * std::max(1.0, std::abs(inv.J));
  if (!m.incompressible) {
    d.zeta = m.m_vol->predict_scalar(inv.J);
    d.dzeta_dJ = (m.m_vol->predict_scalar(inv.J + hJ) - m.m_vol->predict_scalar(inv.J - hJ)) /
                 (2.0 * hJ);
  }
  Eigen::VectorXd z(2);
  z << inv.I1bar, inv.I2bar;
  const Eigen::VectorXd g = m.m_iso.predict_mean(z);
  d.g1 = g[0];
  d.g2 = g[1];
  const double h1 = 1e-6 * std::max(1.0, std::abs(inv.I1bar));
  const double h2 = 1e-6 * std::max(1.0, std::abs(inv.I2bar));
  Eigen::VectorXd zp = z, zm = z;
  zp[0] += h1;
  zm[0] -= h1;
  const Eigen::VectorXd gi1 = (m.m_iso.predict_mean(zp) - m.m_iso.predict_mean(zm)) / (2.0 * h1);
  zp = z;
  zm = z;
  zp[1] += h2;
  zm[1] -= h2;
  const Eigen::VectorXd gi2 = (m.m_iso.predict_mean(zp) - m.m_iso.predict_mean(zm)) / (2.0 * h2);
  d.dg1_di1 = gi1[0];
  d.dg2_di1 = gi1[1];
  d.dg1_di2 = gi2[0];
  d.dg2_di2 = gi2[1];
  return d;
}

}  // namespace

Tensor4 tangent_stiffness(const TwoStageModel& model, const SymTensor3& C, double w) {
  if (model.incompressible())
    throw ConfigError("tangent stiffness is assembled for the compressible formulation");
  const Invariants inv = invariants(C);
  const TensorBasis tb = tensor_basis(C);
  const SymTensor3 Cinv = tb.g1;
  const SymTensor3 I = SymTensor3::identity();
  const double J = inv.J;
  const double s = std::pow(J, -2.0 / 3.0);  // J^(-2/3)
  const double trC = C.trace();
  const double trC2 = C.trace_sq();

  const ResponseDerivatives rf = stage1_derivatives(model.stage1, inv);
  const double chi = model.damage.chi(w);
  const double dchi = model.damage.dchi_dw(w);

  const SymTensor3 S_intact = rf.zeta * tb.g1 + s * (rf.g1 * tb.g2 + rf.g2 * tb.g3);

  // closed-form derivative tensors
  const SymTensor3 dJ_dC = 0.5 * J * Cinv;
  const Tensor4 cici = Tensor4::odot(Cinv, Cinv);
  Tensor4 dG1_dC = cici * -1.0;
  const SymTensor3 dI1_dC = s * (I - (trC / 3.0) * Cinv);
  const SymTensor3 dI2_dC =
      (s * s) * ((trC * I) - C - (1.0 / 3.0) * ((trC * trC - trC2) * Cinv));
  Tensor4 dG2_dC = (Tensor4::dyad(Cinv, I) + cici * (-trC)) * (-1.0 / 3.0);
  Tensor4 dG3_dC = Tensor4::sym_identity();
  dG3_dC += Tensor4::dyad(Cinv, C) * (-2.0 / 3.0);
  dG3_dC += cici * (trC2 / 3.0);
  dG3_dC += Tensor4::dyad(C, Cinv) * (-1.0 / 3.0);
  dG3_dC += Tensor4::dyad(Cinv, Cinv) * (trC2 / 9.0);
  dG3_dC = dG3_dC * s;

  const SymTensor3 dG1coef = rf.dzeta_dJ * dJ_dC;
  const SymTensor3 dgamma1 = rf.dg1_di1 * dI1_dC + rf.dg1_di2 * dI2_dC;
  const SymTensor3 dgamma2 = rf.dg2_di1 * dI1_dC + rf.dg2_di2 * dI2_dC;
  const SymTensor3 ds_dC = (-2.0 / 3.0) * std::pow(J, -5.0 / 3.0) * dJ_dC;

  Tensor4 elastic = Tensor4::dyad(tb.g1, dG1coef);
  elastic += dG1_dC * rf.zeta;
  elastic += Tensor4::dyad(tb.g2, rf.g1 * ds_dC + s * dgamma1);
  elastic += dG2_dC * (s * rf.g1);
  elastic += Tensor4::dyad(tb.g3, rf.g2 * ds_dC + s * dgamma2);
  elastic += dG3_dC * (s * rf.g2);

  Tensor4 total = Tensor4::dyad(S_intact, S_intact) * dchi;
  total += elastic * (2.0 * chi);
  return total;
}

Tensor4 spatial_stiffness(const Tensor4& material, const double F[3][3]) {
  double det = F[0][0] * (F[1][1] * F[2][2] - F[1][2] * F[2][1]) -
               F[0][1] * (F[1][0] * F[2][2] - F[1][2] * F[2][0]) +
               F[0][2] * (F[1][0] * F[2][1] - F[1][1] * F[2][0]);
  if (!(det > 0.0)) throw NonPositiveDeterminant(det);
  Tensor4 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          double acc = 0.0;
          for (int p = 0; p < 3; ++p)
            for (int q = 0; q < 3; ++q)
              for (int r = 0; r < 3; ++r)
                for (int t = 0; t < 3; ++t)
                  acc += F[i][p] * F[j][q] * F[k][r] * F[l][t] * material(p, q, r, t);
          out(i, j, k, l) = acc / det;
        }
  return out;
}

}  // namespace tsgpr
