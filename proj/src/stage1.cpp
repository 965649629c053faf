#include "tsgpr/stage1.hpp"

#include <cmath>

#include <Eigen/SVD>

namespace tsgpr {

namespace {

constexpr double kRankTol = 1e-10;

bool is_reference(const State& s) { return (s.C - SymTensor3::identity()).norm() < 1e-9; }

Eigen::VectorXd vec9(const SymTensor3& a) {
  const auto v = a.vectorize();
  return Eigen::Map<const Eigen::VectorXd>(v.data(), 9);
}

struct LocalSolve {
  Eigen::VectorXd x;         // minimum-norm solution
  Eigen::MatrixXd null;      // null-space basis (columns), may be empty
  int rank = 0;
};

LocalSolve minnorm_solve(const Eigen::MatrixXd& A, const Eigen::VectorXd& b) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv[i] > sv[0] * kRankTol) ++rank;
  const Eigen::MatrixXd V = svd.matrixV();
  Eigen::VectorXd x = Eigen::VectorXd::Zero(A.cols());
  for (int i = 0; i < rank; ++i)
    x += V.col(i) * (svd.matrixU().col(i).dot(b) / sv[i]);
  LocalSolve out;
  out.x = x;
  out.rank = rank;
  out.null = V.rightCols(A.cols() - rank);
  return out;
}

// Columns of the compressible Eq.-21 system.
Eigen::MatrixXd basis_matrix(const SymTensor3& C) {
  const Invariants inv = invariants(C);
  const TensorBasis tb = tensor_basis(C);
  const double s = std::pow(inv.J, -2.0 / 3.0);
  Eigen::MatrixXd A(9, 3);
  A.col(0) = vec9(tb.g1);
  A.col(1) = s * vec9(tb.g2);
  A.col(2) = s * vec9(tb.g3);
  return A;
}

// Columns of the incompressible p-eliminated system.
Eigen::MatrixXd basis_matrix_incompressible(const SymTensor3& C) {
  const double d = C.det();
  if (std::abs(d - 1.0) > 1e-8) throw NotIsochoric(d);
  const TensorBasis tb = tensor_basis(C);
  const double r22 = tb.g1(1, 1);
  if (r22 == 0.0) throw Error("zero pivot in incompressible basis");  // impossible for det C > 0
  Eigen::MatrixXd A(9, 2);
  A.col(0) = vec9(tb.g2 - (tb.g2(1, 1) / r22) * tb.g1);
  A.col(1) = vec9(tb.g3 - (tb.g3(1, 1) / r22) * tb.g1);
  return A;
}

struct ExtractionScratch {
  ResponseSample sample;
  LocalSolve solve;
  bool reference = false;
  int gamma_offset = 0;  // index of gamma1 within the solution vector
};

// Fits the affine anchor (gamma1 ~ p + q*I1bar, gamma2 ~ r) to the
// identifiable content of every state and projects each deficient
// solution onto its manifold toward the anchor.
void apply_anchor(std::vector<ExtractionScratch>& pts) {
  std::vector<Eigen::RowVector3d> rows;
  std::vector<double> rhs;
  for (const auto& p : pts) {
    if (p.reference) continue;
    const int off = p.gamma_offset;
    const Eigen::Vector2d g(p.solve.x[off], p.solve.x[off + 1]);
    const int nullity = static_cast<int>(p.solve.null.cols());
    if (nullity == 0) {
      rows.push_back({1.0, p.sample.inv.I1bar, 0.0});
      rhs.push_back(g[0]);
      rows.push_back({0.0, 0.0, 1.0});
      rhs.push_back(g[1]);
    } else if (nullity == 1) {
      const Eigen::Vector2d n(p.solve.null(off, 0), p.solve.null(off + 1, 0));
      if (n.norm() < 1e-14) continue;
      const Eigen::Vector2d u = Eigen::Vector2d(-n[1], n[0]).normalized();
      rows.push_back({u[0], u[0] * p.sample.inv.I1bar, u[1]});
      rhs.push_back(u.dot(g));
    }
    // nullity >= 2: no identifiable gamma content
  }
  if (rows.empty()) return;
  Eigen::MatrixXd R(rows.size(), 3);
  Eigen::VectorXd c(rows.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    R.row(i) = rows[i];
    c[i] = rhs[i];
  }
  const Eigen::Vector3d pqr = R.completeOrthogonalDecomposition().solve(c);

  for (auto& p : pts) {
    const int off = p.gamma_offset;
    const Eigen::Vector2d model(pqr[0] + pqr[1] * p.sample.inv.I1bar, pqr[2]);
    if (p.reference) {
      p.solve.x = Eigen::VectorXd::Zero(off + 2);
      p.solve.x[off] = model[0];
      p.solve.x[off + 1] = model[1];
      continue;
    }
    const int nullity = static_cast<int>(p.solve.null.cols());
    if (nullity == 0) continue;
    // project the anchor point onto {x + null * t} in gamma coordinates
    const Eigen::MatrixXd Ng = p.solve.null.middleRows(off, 2);
    const Eigen::Vector2d g(p.solve.x[off], p.solve.x[off + 1]);
    const Eigen::VectorXd t =
        (Ng.transpose() * Ng).ldlt().solve(Ng.transpose() * (model - g));
    p.solve.x += p.solve.null * t;
  }
}

ResponseSample finish_sample(const ExtractionScratch& p, bool incompressible) {
  ResponseSample s = p.sample;
  if (incompressible) {
    s.zeta = 0.0;
    s.gamma1 = p.solve.x[0];
    s.gamma2 = p.solve.x[1];
  } else {
    s.zeta = p.solve.x[0];
    s.gamma1 = p.solve.x[1];
    s.gamma2 = p.solve.x[2];
  }
  s.rank = p.solve.rank;
  return s;
}

ExtractionScratch extract_one(const State& state, bool incompressible) {
  ExtractionScratch p;
  p.sample.inv = invariants(state.C);
  p.gamma_offset = incompressible ? 0 : 1;
  if (is_reference(state)) {
    p.reference = true;
    p.solve.x = Eigen::VectorXd::Zero(incompressible ? 2 : 3);
    p.solve.rank = 0;
    return p;
  }
  const Eigen::MatrixXd A =
      incompressible ? basis_matrix_incompressible(state.C) : basis_matrix(state.C);
  p.solve = minnorm_solve(A, vec9(state.S));
  return p;
}

}  // namespace

Dataset apply_cutoff(const Dataset& data, const IntactCutoff& cutoff) {
  if (data.states.empty()) throw EmptyDataset("apply_cutoff");
  const double anchor = data.anchor_parameter();
  double max_excursion = 0.0;
  for (const auto& s : data.states)
    max_excursion = std::max(max_excursion, std::abs(s.parameter - anchor));
  const double reach = std::abs(cutoff.value - anchor);
  if (reach > max_excursion * (1.0 + 1e-12))
    throw CutoffOutOfRange("cutoff " + std::to_string(cutoff.value) + " beyond data range");
  Dataset out;
  out.mode = data.mode;
  out.incompressible = data.incompressible;
  for (const auto& s : data.states)
    if (std::abs(s.parameter - anchor) <= reach * (1.0 + 1e-12) ||
        (s.C - SymTensor3::identity()).norm() < 1e-9)
      out.states.push_back(s);
  return out;
}

ResponseSample extract_response_functions(const State& state) {
  auto p = extract_one(state, false);
  return finish_sample(p, false);
}

ResponseSample extract_response_functions_incompressible(const State& state) {
  auto p = extract_one(state, true);
  return finish_sample(p, true);
}

std::vector<ResponseSample> extract_response_functions_anchored(const Dataset& data) {
  std::vector<ExtractionScratch> pts;
  pts.reserve(data.states.size());
  for (const auto& s : data.states) pts.push_back(extract_one(s, data.incompressible));
  apply_anchor(pts);
  std::vector<ResponseSample> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(finish_sample(p, data.incompressible));
  return out;
}

OutputScaledGpr OutputScaledGpr::train(const Eigen::MatrixXd& Z, const Eigen::MatrixXd& Y,
                                       const Eigen::VectorXd& nuggets,
                                       const OptimizeOptions& opts) {
  OutputScaledGpr m;
  m.offset_ = Y.colwise().mean();
  Eigen::MatrixXd Yc = Y.rowwise() - m.offset_.transpose();
  const double rms = std::sqrt(Yc.array().square().mean());
  m.scale_ = rms > 1e-12 * std::max(1.0, Y.array().abs().maxCoeff()) ? rms : 1.0;
  m.gpr_ = optimize(Z, Yc / m.scale_, nuggets, opts);
  return m;
}

Eigen::VectorXd OutputScaledGpr::predict_mean(const Eigen::VectorXd& z) const {
  return offset_ + scale_ * gpr_.predict(z).mean;
}

double OutputScaledGpr::predict_scalar(double z) const {
  Eigen::VectorXd q(1);
  q << z;
  return predict_mean(q)[0];
}

double OutputScaledGpr::predict_variance(const Eigen::VectorXd& z) const {
  return scale_ * scale_ * gpr_.predict(z).variance;
}

Stage1Models train_stage1(const Dataset& data, const IntactCutoff& cutoff,
                          const Stage1NuggetPolicy& nuggets, const OptimizeOptions& opts) {
  const Dataset intact = apply_cutoff(data, cutoff);
  if (intact.size() < 4) throw TooFewPoints("need >= 3 intact states beyond the reference");
  const auto samples = extract_response_functions_anchored(intact);
  const Eigen::Index n = static_cast<Eigen::Index>(samples.size());

  Eigen::MatrixXd Ziso(n, 2), Yiso(n, 2);
  for (Eigen::Index i = 0; i < n; ++i) {
    Ziso(i, 0) = samples[i].inv.I1bar;
    Ziso(i, 1) = samples[i].inv.I2bar;
    Yiso(i, 0) = samples[i].gamma1;
    Yiso(i, 1) = samples[i].gamma2;
  }
  Eigen::VectorXd nug_iso = Eigen::VectorXd::Constant(n, nuggets.m_iso.bulk);
  nug_iso[0] = nuggets.m_iso.reference;  // reference is first after canonicalize

  Stage1Models out;
  out.incompressible = data.incompressible;
  out.m_iso = OutputScaledGpr::train(Ziso, Yiso, nug_iso, opts);

  if (!data.incompressible) {
    Eigen::MatrixXd Zvol(n, 1), Yvol(n, 1);
    for (Eigen::Index i = 0; i < n; ++i) {
      Zvol(i, 0) = samples[i].inv.J;
      Yvol(i, 0) = samples[i].zeta;
    }
    Eigen::VectorXd nug_vol = Eigen::VectorXd::Constant(n, nuggets.m_vol.bulk);
    nug_vol[0] = nuggets.m_vol.reference;
    out.m_vol = OutputScaledGpr::train(Zvol, Yvol, nug_vol, opts);
  }
  return out;
}

}  // namespace tsgpr
