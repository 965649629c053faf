#include "tsgpr/tensor.hpp"

namespace tsgpr {

Invariants invariants(const SymTensor3& C) {
  const double d = C.det();
  if (!(d > 0.0)) throw NonPositiveDeterminant(d);
  const double J = std::sqrt(d);
  const double s = std::pow(J, -2.0 / 3.0);
  const SymTensor3 Cbar = C * s;
  const double t = Cbar.trace();
  return {J, t, 0.5 * (t * t - Cbar.trace_sq())};
}

SymTensor3 deviatoric(const SymTensor3& A, const SymTensor3& C) {
  return A - (A.ddot(C) / 3.0) * C.inverse();
}

TensorBasis tensor_basis(const SymTensor3& C) {
  const double d = C.det();
  if (!(d > 0.0)) throw NonPositiveDeterminant(d);
  const double J = std::sqrt(d);
  const SymTensor3 Cbar = C * std::pow(J, -2.0 / 3.0);
  return {C.inverse(), deviatoric(SymTensor3::identity(), C), deviatoric(Cbar, C)};
}

double frobenius_norm(const SymTensor3& A) { return A.norm(); }

double Tensor4::minor_symmetry_defect() const {
  double defect = 0.0;
  const Tensor4& t = *this;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          defect = std::max(defect, std::abs(t(i, j, k, l) - t(j, i, k, l)));
          defect = std::max(defect, std::abs(t(i, j, k, l) - t(i, j, l, k)));
        }
  return defect;
}

Tensor4 Tensor4::dyad(const SymTensor3& a, const SymTensor3& b) {
  Tensor4 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) r(i, j, k, l) = a(i, j) * b(k, l);
  return r;
}

Tensor4 Tensor4::odot(const SymTensor3& a, const SymTensor3& b) {
  Tensor4 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
          r(i, j, k, l) = 0.5 * (a(i, k) * b(j, l) + a(i, l) * b(j, k));
  return r;
}

Tensor4 Tensor4::sym_identity() {
  Tensor4 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
          r(i, j, k, l) = 0.5 * ((i == k && j == l ? 1.0 : 0.0) + (i == l && j == k ? 1.0 : 0.0));
  return r;
}

}  // namespace tsgpr
