#pragma once

#include <string>
#include <variant>
#include <vector>

#include "tsgpr/tensor.hpp"

namespace tsgpr {

/// Upper incomplete gamma integral over [x, inf), not regularized.
/// Series expansion for x < s + 1, Lentz continued fraction above.
double upper_incomplete_gamma(double s, double x);

// ---- volumetric energy catalog ----

struct SimoMiehe {
  double kappa;
};
struct VolNeoHookean {
  double kappa;
};
struct VolOgden {
  double kappa;
  double beta;
};
using VolumetricModel = std::variant<SimoMiehe, VolNeoHookean, VolOgden>;

// ---- isochoric energy catalog ----

struct NeoHookean {
  double a10;
};
struct MooneyRivlin {
  double a10;
  double a01;
};
struct Yeoh {
  double c1;
  double c2;
};
struct Gent {
  double mu;
  double jm;
};
struct GentGent {
  double mu;
  double jm;
  double c2;
};
using IsochoricModel = std::variant<NeoHookean, MooneyRivlin, Yeoh, Gent, GentGent>;

// ---- stress-reduction factor catalog ----

struct NoDamage {};
struct VolokhReduced {
  double phi;
};
struct VolokhUniversal {
  double phi;
  double m;
};
/// Two-branch model; beta is exposed as a constant weighting scalar.
struct ChandrashekarUpadhyay {
  double phi_plus;
  double m_plus;
  double phi_minus;
  double m_minus;
  double beta;
};
using DamageLaw = std::variant<NoDamage, VolokhReduced, VolokhUniversal, ChandrashekarUpadhyay>;

struct ResponseFunctions {
  double zeta;
  double gamma1;
  double gamma2;
};

double volumetric_energy(const VolumetricModel& m, double J);
double isochoric_energy(const IsochoricModel& m, double i1b, double i2b);
ResponseFunctions response_functions(const VolumetricModel& vol, const IsochoricModel& iso,
                                     const Invariants& inv);
/// chi(W) per catalog row; NoDamage returns 1.
double stress_reduction(const DamageLaw& law, double W);
/// Total strain energy density psi(W) per catalog row.
double total_energy(const DamageLaw& law, double W);

// ---- deformation paths ----

enum class PathMode { UniaxialTension, UniaxialCompression, SimpleShear, IncompressibleUniaxial };

struct DeformationPath {
  PathMode mode = PathMode::UniaxialTension;
  double start = 1.0;  // lambda or gamma at the first grid point
  double stop = 1.5;
  int n_points = 51;
  double nu = 0.49;  // lateral exponent for the compressible uniaxial modes
};

/// Uniform parameter grid for the path.
std::vector<double> path_parameters(const DeformationPath& path);
/// C at a single parameter value.
SymTensor3 path_tensor(const DeformationPath& path, double parameter);
std::vector<SymTensor3> generate_path(const DeformationPath& path);

// ---- ground-truth dataset generation ----

struct GeneratorConfig {
  VolumetricModel volumetric = SimoMiehe{100.0};
  IsochoricModel isochoric = MooneyRivlin{1.0, 0.5};
  DamageLaw damage = VolokhUniversal{0.75, 10.0};
  DeformationPath path;
};

struct GeneratedState {
  double parameter;
  SymTensor3 C;
  SymTensor3 S;
  double W;    // intact energy, closed form
  double chi;  // stress-reduction factor at W
};

/// Intact stress assembled from the catalog response functions.
SymTensor3 intact_stress(const VolumetricModel& vol, const IsochoricModel& iso,
                         const SymTensor3& C);
/// Incompressible uniaxial intact stress with the Lagrange multiplier
/// eliminated through the traction-free lateral condition.
SymTensor3 incompressible_intact_stress(const IsochoricModel& iso, const SymTensor3& C);

std::vector<GeneratedState> generate_dataset(const GeneratorConfig& config);

/// The §4.1 synthetic benchmark configuration.
GeneratorConfig paper_synthetic_config();

}  // namespace tsgpr
