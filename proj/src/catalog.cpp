#include "tsgpr/catalog.hpp"

#include <cmath>

namespace tsgpr {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double gent_guard(double i1b, double jm) {
  const double x = i1b - 3.0;
  if (x >= jm) throw GentDomainViolation();
  return x;
}

}  // namespace

double volumetric_energy(const VolumetricModel& m, double J) {
  return std::visit(
      overloaded{
          [&](const SimoMiehe& v) { return v.kappa / 2.0 * ((J * J - 1.0) / 2.0 - std::log(J)); },
          [&](const VolNeoHookean& v) { return v.kappa / 2.0 * (J - 1.0) * (J - 1.0); },
          [&](const VolOgden& v) {
            return v.kappa / (v.beta * v.beta) *
                   (std::pow(J, -v.beta) - 1.0 + v.beta * std::log(J));
          }},
      m);
}

double isochoric_energy(const IsochoricModel& m, double i1b, double i2b) {
  return std::visit(
      overloaded{
          [&](const NeoHookean& v) { return v.a10 * (i1b - 3.0); },
          [&](const MooneyRivlin& v) { return v.a10 * (i1b - 3.0) + v.a01 * (i2b - 3.0); },
          [&](const Yeoh& v) {
            return v.c1 * (i1b - 3.0) + v.c2 * (i1b - 3.0) * (i1b - 3.0);
          },
          [&](const Gent& v) {
            return -v.mu * v.jm / 2.0 * std::log(1.0 - gent_guard(i1b, v.jm) / v.jm);
          },
          [&](const GentGent& v) {
            return -v.mu * v.jm / 2.0 * std::log(1.0 - gent_guard(i1b, v.jm) / v.jm) +
                   1.5 * v.c2 * std::log(i2b / 3.0);
          }},
      m);
}

ResponseFunctions response_functions(const VolumetricModel& vol, const IsochoricModel& iso,
                                     const Invariants& inv) {
  const double J = inv.J, i1b = inv.I1bar, i2b = inv.I2bar;
  const double zeta = std::visit(
      overloaded{[&](const SimoMiehe& v) { return v.kappa / 2.0 * (J * J - 1.0); },
                 [&](const VolNeoHookean& v) { return v.kappa * J * (J - 1.0); },
                 [&](const VolOgden& v) {
                   return v.kappa / v.beta * (1.0 - std::pow(J, -v.beta));
                 }},
      vol);
  double gamma1 = 0.0, gamma2 = 0.0;
  std::visit(overloaded{[&](const NeoHookean& v) { gamma1 = 2.0 * v.a10; },
                        [&](const MooneyRivlin& v) {
                          gamma1 = 2.0 * (v.a10 + i1b * v.a01);
                          gamma2 = -2.0 * v.a01;
                        },
                        [&](const Yeoh& v) { gamma1 = 2.0 * v.c1 + 4.0 * v.c2 * (i1b - 3.0); },
                        [&](const Gent& v) {
                          gamma1 = v.mu / (1.0 - gent_guard(i1b, v.jm) / v.jm);
                        },
                        [&](const GentGent& v) {
                          gamma1 = v.mu / (1.0 - gent_guard(i1b, v.jm) / v.jm) +
                                   3.0 * v.c2 * i1b / i2b;
                          gamma2 = -3.0 * v.c2 / i2b;
                        }},
             iso);
  return {zeta, gamma1, gamma2};
}

double stress_reduction(const DamageLaw& law, double W) {
  return std::visit(
      overloaded{[&](const NoDamage&) { return 1.0; },
                 [&](const VolokhReduced& v) { return std::exp(-W / v.phi); },
                 [&](const VolokhUniversal& v) { return std::exp(-std::pow(W / v.phi, v.m)); },
                 [&](const ChandrashekarUpadhyay& v) {
                   return v.beta * std::exp(-std::pow(W / v.phi_plus, v.m_plus)) +
                          (1.0 - v.beta) * std::exp(-std::pow(W / v.phi_minus, v.m_minus));
                 }},
      law);
}

double total_energy(const DamageLaw& law, double W) {
  const auto universal_psi = [](double phi, double m, double W) {
    return phi / m *
           (upper_incomplete_gamma(1.0 / m, 0.0) -
            upper_incomplete_gamma(1.0 / m, std::pow(W / phi, m)));
  };
  return std::visit(
      overloaded{[&](const NoDamage&) { return W; },
                 [&](const VolokhReduced& v) { return v.phi - v.phi * std::exp(-W / v.phi); },
                 [&](const VolokhUniversal& v) { return universal_psi(v.phi, v.m, W); },
                 [&](const ChandrashekarUpadhyay& v) {
                   const double psi_minus = universal_psi(v.phi_minus, v.m_minus, W);
                   const double psi_plus = universal_psi(v.phi_plus, v.m_plus, W);
                   return psi_minus + v.beta * (psi_plus - psi_minus);
                 }},
      law);
}

std::vector<double> path_parameters(const DeformationPath& path) {
  if (path.n_points < 2) throw ConfigError("path needs n_points >= 2");
  std::vector<double> p(path.n_points);
  for (int i = 0; i < path.n_points; ++i)
    p[i] = path.start + (path.stop - path.start) * i / (path.n_points - 1);
  return p;
}

SymTensor3 path_tensor(const DeformationPath& path, double t) {
  switch (path.mode) {
    case PathMode::UniaxialTension:
    case PathMode::UniaxialCompression:
      return SymTensor3::diagonal(t * t, std::pow(t, -2.0 * path.nu), std::pow(t, -2.0 * path.nu));
    case PathMode::IncompressibleUniaxial:
      return SymTensor3::diagonal(t * t, 1.0 / t, 1.0 / t);
    case PathMode::SimpleShear:
      // C = F^T F with F = [[1, g, 0], [0, 1, 0], [0, 0, 1]]
      return {1.0, 1.0 + t * t, 1.0, t, 0.0, 0.0};
  }
  throw ConfigError("unknown path mode");
}

std::vector<SymTensor3> generate_path(const DeformationPath& path) {
  std::vector<SymTensor3> out;
  out.reserve(path.n_points);
  for (double t : path_parameters(path)) out.push_back(path_tensor(path, t));
  return out;
}

SymTensor3 intact_stress(const VolumetricModel& vol, const IsochoricModel& iso,
                         const SymTensor3& C) {
  const Invariants inv = invariants(C);
  const TensorBasis b = tensor_basis(C);
  const ResponseFunctions rf = response_functions(vol, iso, inv);
  const double s = std::pow(inv.J, -2.0 / 3.0);
  return rf.zeta * b.g1 + s * (rf.gamma1 * b.g2 + rf.gamma2 * b.g3);
}

SymTensor3 incompressible_intact_stress(const IsochoricModel& iso, const SymTensor3& C) {
  const double d = C.det();
  if (std::abs(d - 1.0) > 1e-8) throw NotIsochoric(d);
  const Invariants inv = invariants(C);
  const TensorBasis b = tensor_basis(C);
  const ResponseFunctions rf = response_functions(SimoMiehe{1.0}, iso, inv);
  const double r22 = b.g1(1, 1);
  const SymTensor3 b2 = b.g2 - (b.g2(1, 1) / r22) * b.g1;
  const SymTensor3 b3 = b.g3 - (b.g3(1, 1) / r22) * b.g1;
  return rf.gamma1 * b2 + rf.gamma2 * b3;
}

std::vector<GeneratedState> generate_dataset(const GeneratorConfig& config) {
  std::vector<GeneratedState> out;
  const auto params = path_parameters(config.path);
  const bool incompressible = config.path.mode == PathMode::IncompressibleUniaxial;
  for (double t : params) {
    const SymTensor3 C = path_tensor(config.path, t);
    const Invariants inv = invariants(C);
    const double W = incompressible
                         ? isochoric_energy(config.isochoric, inv.I1bar, inv.I2bar)
                         : volumetric_energy(config.volumetric, inv.J) +
                               isochoric_energy(config.isochoric, inv.I1bar, inv.I2bar);
    const double chi = stress_reduction(config.damage, W);
    const SymTensor3 Si = incompressible
                              ? incompressible_intact_stress(config.isochoric, C)
                              : intact_stress(config.volumetric, config.isochoric, C);
    out.push_back({t, C, chi * Si, W, chi});
  }
  return out;
}

GeneratorConfig paper_synthetic_config() {
  GeneratorConfig cfg;
  cfg.volumetric = SimoMiehe{100.0};
  cfg.isochoric = MooneyRivlin{1.0, 0.5};
  cfg.damage = VolokhUniversal{0.75, 10.0};
  cfg.path = {PathMode::UniaxialTension, 1.0, 1.5, 51, 0.49};
  return cfg;
}

}  // namespace tsgpr
