#pragma once

#include <array>
#include <cmath>

#include "tsgpr/error.hpp"

namespace tsgpr {

/// Symmetric second-order tensor in 3D, stored as the six unique
/// components (11, 22, 33, 12, 13, 23). Used for both deformation
/// measures (C, Cbar) and stresses (S).
class SymTensor3 {
 public:
  SymTensor3() : c_{} {}
  SymTensor3(double a11, double a22, double a33, double a12, double a13, double a23)
      : c_{a11, a22, a33, a12, a13, a23} {}

  static SymTensor3 identity() { return {1.0, 1.0, 1.0, 0.0, 0.0, 0.0}; }
  static SymTensor3 diagonal(double a, double b, double c) { return {a, b, c, 0.0, 0.0, 0.0}; }

  double operator()(int i, int j) const {
    if (i == j) return c_[i];
    return c_[off_index(i, j)];
  }
  void set(int i, int j, double v) {
    if (i == j)
      c_[i] = v;
    else
      c_[off_index(i, j)] = v;
  }

  double& comp(int k) { return c_[k]; }
  double comp(int k) const { return c_[k]; }

  double trace() const { return c_[0] + c_[1] + c_[2]; }

  double det() const {
    return c_[0] * (c_[1] * c_[2] - c_[5] * c_[5]) - c_[3] * (c_[3] * c_[2] - c_[5] * c_[4]) +
           c_[4] * (c_[3] * c_[5] - c_[1] * c_[4]);
  }

  /// Closed-form adjugate inverse; throws if det <= 0 (all tensors
  /// inverted here are deformation measures, which must be SPD).
  SymTensor3 inverse() const {
    const double d = det();
    if (!(d > 0.0)) throw NonPositiveDeterminant(d);
    SymTensor3 inv(c_[1] * c_[2] - c_[5] * c_[5], c_[0] * c_[2] - c_[4] * c_[4],
                   c_[0] * c_[1] - c_[3] * c_[3], c_[4] * c_[5] - c_[3] * c_[2],
                   c_[3] * c_[5] - c_[4] * c_[1], c_[3] * c_[4] - c_[0] * c_[5]);
    for (int k = 0; k < 6; ++k) inv.c_[k] /= d;
    return inv;
  }

  /// Full double contraction A : B (off-diagonals counted twice).
  double ddot(const SymTensor3& b) const {
    return c_[0] * b.c_[0] + c_[1] * b.c_[1] + c_[2] * b.c_[2] +
           2.0 * (c_[3] * b.c_[3] + c_[4] * b.c_[4] + c_[5] * b.c_[5]);
  }

  /// Frobenius norm of the full 3x3 expansion.
  double norm() const { return std::sqrt(ddot(*this)); }

  /// Row-major 9-vector of the full 3x3 expansion.
  std::array<double, 9> vectorize() const {
    return {c_[0], c_[3], c_[4], c_[3], c_[1], c_[5], c_[4], c_[5], c_[2]};
  }
  static SymTensor3 devectorize(const std::array<double, 9>& v) {
    return {v[0], v[4], v[8], v[1], v[2], v[5]};
  }

  SymTensor3 operator+(const SymTensor3& b) const {
    SymTensor3 r;
    for (int k = 0; k < 6; ++k) r.c_[k] = c_[k] + b.c_[k];
    return r;
  }
  SymTensor3 operator-(const SymTensor3& b) const {
    SymTensor3 r;
    for (int k = 0; k < 6; ++k) r.c_[k] = c_[k] - b.c_[k];
    return r;
  }
  SymTensor3 operator*(double s) const {
    SymTensor3 r;
    for (int k = 0; k < 6; ++k) r.c_[k] = c_[k] * s;
    return r;
  }
  friend SymTensor3 operator*(double s, const SymTensor3& a) { return a * s; }
  SymTensor3& operator+=(const SymTensor3& b) {
    for (int k = 0; k < 6; ++k) c_[k] += b.c_[k];
    return *this;
  }

  double trace_sq() const {  // tr(A^2) for symmetric A
    return c_[0] * c_[0] + c_[1] * c_[1] + c_[2] * c_[2] +
           2.0 * (c_[3] * c_[3] + c_[4] * c_[4] + c_[5] * c_[5]);
  }

 private:
  static int off_index(int i, int j) {
    const int a = i < j ? i : j, b = i < j ? j : i;
    if (a == 0 && b == 1) return 3;
    if (a == 0 && b == 2) return 4;
    return 5;
  }
  std::array<double, 6> c_;  // 11, 22, 33, 12, 13, 23
};

struct Invariants {
  double J;      // sqrt(det C)
  double I1bar;  // tr(Cbar)
  double I2bar;  // (tr(Cbar)^2 - tr(Cbar^2)) / 2
};

struct TensorBasis {
  SymTensor3 g1;  // C^-1
  SymTensor3 g2;  // Dev(I)
  SymTensor3 g3;  // Dev(Cbar)
};

Invariants invariants(const SymTensor3& C);
SymTensor3 deviatoric(const SymTensor3& A, const SymTensor3& C);
TensorBasis tensor_basis(const SymTensor3& C);
double frobenius_norm(const SymTensor3& A);

/// Fourth-order tensor with full 81-component storage.
class Tensor4 {
 public:
  Tensor4() : v_{} {}
  double& operator()(int i, int j, int k, int l) { return v_[((i * 3 + j) * 3 + k) * 3 + l]; }
  double operator()(int i, int j, int k, int l) const { return v_[((i * 3 + j) * 3 + k) * 3 + l]; }

  Tensor4& operator+=(const Tensor4& b) {
    for (int n = 0; n < 81; ++n) v_[n] += b.v_[n];
    return *this;
  }
  Tensor4 operator*(double s) const {
    Tensor4 r;
    for (int n = 0; n < 81; ++n) r.v_[n] = v_[n] * s;
    return r;
  }
  friend Tensor4 operator*(double s, const Tensor4& a) { return a * s; }

  double norm() const {
    double s = 0.0;
    for (double x : v_) s += x * x;
    return std::sqrt(s);
  }

  /// Largest relative minor-symmetry defect max|C_ijkl - C_jikl|, |C_ijkl - C_ijlk|.
  double minor_symmetry_defect() const;

  /// (A (x) B)_ijkl = A_ij B_kl
  static Tensor4 dyad(const SymTensor3& a, const SymTensor3& b);
  /// (A (.) B)_ijkl = (A_ik B_jl + A_il B_jk) / 2
  static Tensor4 odot(const SymTensor3& a, const SymTensor3& b);
  /// Symmetrized fourth-order identity (d_ik d_jl + d_il d_jk) / 2.
  static Tensor4 sym_identity();

 private:
  std::array<double, 81> v_;
};

}  // namespace tsgpr
