#include "tsgpr/serialize.hpp"

#include <cmath>
#include <fstream>

namespace tsgpr {

namespace {

Json matrix_to_json(const Eigen::MatrixXd& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

Eigen::MatrixXd matrix_from_json(const Json& j) {
  const auto rows = j.size();
  if (rows == 0) return {};
  const auto cols = j[0].size();
  Eigen::MatrixXd m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = j[i][k].get<double>();
  return m;
}

Json vector_to_json(const Eigen::VectorXd& v) {
  Json arr = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

Eigen::VectorXd vector_from_json(const Json& j) {
  Eigen::VectorXd v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[i] = j[i].get<double>();
  return v;
}

}  // namespace

Json to_json(const GprModel& m) {
  return Json{{"kernel", "matern52"},
              {"inputs", matrix_to_json(m.inputs)},
              {"outputs", matrix_to_json(m.outputs)},
              {"log_hyperparameters",
               Json::array({0.5 * std::log(m.hp.signal_variance), std::log(m.hp.length_scale)})},
              {"nuggets", vector_to_json(m.nuggets)}};
}

GprModel gpr_from_json(const Json& j) {
  if (j.at("kernel").get<std::string>() != "matern52")
    throw ConfigError("unsupported kernel: " + j.at("kernel").get<std::string>());
  GprModel m;
  m.inputs = matrix_from_json(j.at("inputs"));
  m.outputs = matrix_from_json(j.at("outputs"));
  const auto lh = j.at("log_hyperparameters");
  m.hp.signal_variance = std::exp(2.0 * lh[0].get<double>());
  m.hp.length_scale = std::exp(lh[1].get<double>());
  m.nuggets = vector_from_json(j.at("nuggets"));
  m.refactorize();  // Cholesky factor is never stored
  return m;
}

Json to_json(const OutputScaledGpr& m) {
  Json j = to_json(m.gpr());
  j["output_offset"] = vector_to_json(m.offset());
  j["output_scale"] = m.scale();
  return j;
}

OutputScaledGpr scaled_gpr_from_json(const Json& j) {
  return {vector_from_json(j.at("output_offset")), j.at("output_scale").get<double>(),
          gpr_from_json(j)};
}

namespace {

Json to_json(const ConstraintConfig& c) {
  return Json{{"n_constraint_points", c.n_constraint_points},
              {"range", Json::array({c.range_lo, c.range_hi})},
              {"lambda_nn", c.lambda_nn},
              {"lambda_mono", c.lambda_mono},
              {"augment_range", Json::array({c.augment_lo, c.augment_hi})},
              {"augment_count", c.augment_count},
              {"tolerance", c.tolerance}};
}

ConstraintConfig constraint_config_from_json(const Json& j) {
  ConstraintConfig c;
  c.n_constraint_points = j.value("n_constraint_points", c.n_constraint_points);
  if (j.contains("range")) {
    c.range_lo = j["range"][0].get<double>();
    c.range_hi = j["range"][1].get<double>();
  }
  c.lambda_nn = j.value("lambda_nn", c.lambda_nn);
  c.lambda_mono = j.value("lambda_mono", c.lambda_mono);
  if (j.contains("augment_range")) {
    c.augment_lo = j["augment_range"][0].get<double>();
    c.augment_hi = j["augment_range"][1].get<double>();
  }
  c.augment_count = j.value("augment_count", c.augment_count);
  c.tolerance = j.value("tolerance", c.tolerance);
  return c;
}

}  // namespace

Json to_json(const DamageModel& m) {
  return Json{{"gpr", to_json(m.gpr)},
              {"w_peak", m.w_peak},
              {"constraint_config", to_json(m.config)},
              {"constraints_satisfied", m.constraints_satisfied},
              {"final_lambda", m.final_lambda}};
}

DamageModel damage_from_json(const Json& j) {
  DamageModel m;
  m.gpr = gpr_from_json(j.at("gpr"));
  m.w_peak = j.at("w_peak").get<double>();
  m.config = constraint_config_from_json(j.at("constraint_config"));
  m.constraints_satisfied = j.value("constraints_satisfied", true);
  m.final_lambda = j.value("final_lambda", 0.0);
  return m;
}

std::string to_string(PathMode m) {
  switch (m) {
    case PathMode::UniaxialTension: return "uniaxial_tension";
    case PathMode::UniaxialCompression: return "uniaxial_compression";
    case PathMode::SimpleShear: return "simple_shear";
    case PathMode::IncompressibleUniaxial: return "incompressible_uniaxial";
  }
  throw ConfigError("bad path mode");
}

PathMode path_mode_from_string(const std::string& s) {
  if (s == "uniaxial_tension") return PathMode::UniaxialTension;
  if (s == "uniaxial_compression") return PathMode::UniaxialCompression;
  if (s == "simple_shear") return PathMode::SimpleShear;
  if (s == "incompressible_uniaxial") return PathMode::IncompressibleUniaxial;
  throw ConfigError("unknown path mode: " + s);
}

Json to_json(const TwoStageModel& m) {
  Json j{{"version", "tsm-1"},
         {"mode", m.incompressible() ? "incompressible" : "compressible"},
         {"m_iso", to_json(m.stage1.m_iso)},
         {"m_dam", to_json(m.damage)},
         {"metadata",
          Json{{"cutoff", m.meta.cutoff},
               {"path_mode", to_string(m.meta.path_mode)},
               {"nu", m.meta.nu},
               {"seed", m.meta.seed},
               {"restarts", m.meta.restarts}}}};
  if (m.stage1.m_vol) j["m_vol"] = to_json(*m.stage1.m_vol);
  return j;
}

TwoStageModel two_stage_from_json(const Json& j) {
  if (j.at("version").get<std::string>() != "tsm-1")
    throw ConfigError("unsupported model version: " + j.at("version").get<std::string>());
  TwoStageModel m;
  m.stage1.incompressible = j.at("mode").get<std::string>() == "incompressible";
  m.stage1.m_iso = scaled_gpr_from_json(j.at("m_iso"));
  if (j.contains("m_vol")) m.stage1.m_vol = scaled_gpr_from_json(j.at("m_vol"));
  m.damage = damage_from_json(j.at("m_dam"));
  const Json& meta = j.at("metadata");
  m.meta.cutoff = meta.at("cutoff").get<double>();
  m.meta.path_mode = path_mode_from_string(meta.at("path_mode").get<std::string>());
  m.meta.nu = meta.at("nu").get<double>();
  m.meta.seed = meta.at("seed").get<unsigned long long>();
  m.meta.restarts = meta.at("restarts").get<int>();
  return m;
}

Json to_json(const BlackBoxModel& m) {
  return Json{{"kind", "black_box"}, {"gpr", to_json(m.gpr)}};
}

BlackBoxModel blackbox_from_json(const Json& j) {
  if (j.at("kind").get<std::string>() != "black_box") throw ConfigError("not a black_box model");
  return {scaled_gpr_from_json(j.at("gpr"))};
}

Json to_json(const DirectModel& m) {
  return Json{{"kind", "direct"}, {"m_vol", to_json(m.m_vol)}, {"m_iso", to_json(m.m_iso)}};
}

DirectModel direct_from_json(const Json& j) {
  if (j.at("kind").get<std::string>() != "direct") throw ConfigError("not a direct model");
  return {scaled_gpr_from_json(j.at("m_vol")), scaled_gpr_from_json(j.at("m_iso"))};
}

void save_model(const TwoStageModel& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << to_json(m).dump(2) << '\n';
}

TwoStageModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open model file: " + path);
  Json j;
  in >> j;
  return two_stage_from_json(j);
}

// ---- configs ----

Json to_json(const GeneratorConfig& g) {
  Json vol, iso, dam;
  if (const auto* v = std::get_if<SimoMiehe>(&g.volumetric))
    vol = Json{{"type", "simo_miehe"}, {"kappa", v->kappa}};
  else if (const auto* v = std::get_if<VolNeoHookean>(&g.volumetric))
    vol = Json{{"type", "vol_neo_hookean"}, {"kappa", v->kappa}};
  else if (const auto* v = std::get_if<VolOgden>(&g.volumetric))
    vol = Json{{"type", "vol_ogden"}, {"kappa", v->kappa}, {"beta", v->beta}};
  if (const auto* v = std::get_if<NeoHookean>(&g.isochoric))
    iso = Json{{"type", "neo_hookean"}, {"a10", v->a10}};
  else if (const auto* v = std::get_if<MooneyRivlin>(&g.isochoric))
    iso = Json{{"type", "mooney_rivlin"}, {"a10", v->a10}, {"a01", v->a01}};
  else if (const auto* v = std::get_if<Yeoh>(&g.isochoric))
    iso = Json{{"type", "yeoh"}, {"c1", v->c1}, {"c2", v->c2}};
  else if (const auto* v = std::get_if<Gent>(&g.isochoric))
    iso = Json{{"type", "gent"}, {"mu", v->mu}, {"jm", v->jm}};
  else if (const auto* v = std::get_if<GentGent>(&g.isochoric))
    iso = Json{{"type", "gent_gent"}, {"mu", v->mu}, {"jm", v->jm}, {"c2", v->c2}};
  if (std::get_if<NoDamage>(&g.damage))
    dam = Json{{"type", "none"}};
  else if (const auto* v = std::get_if<VolokhReduced>(&g.damage))
    dam = Json{{"type", "volokh_reduced"}, {"phi", v->phi}};
  else if (const auto* v = std::get_if<VolokhUniversal>(&g.damage))
    dam = Json{{"type", "volokh_universal"}, {"phi", v->phi}, {"m", v->m}};
  else if (const auto* v = std::get_if<ChandrashekarUpadhyay>(&g.damage))
    dam = Json{{"type", "chandrashekar_upadhyay"}, {"phi_plus", v->phi_plus},
               {"m_plus", v->m_plus},  {"phi_minus", v->phi_minus},
               {"m_minus", v->m_minus}, {"beta", v->beta}};
  return Json{{"volumetric", vol},
              {"isochoric", iso},
              {"damage", dam},
              {"path", Json{{"mode", to_string(g.path.mode)},
                            {"range", Json::array({g.path.start, g.path.stop})},
                            {"n_points", g.path.n_points},
                            {"nu", g.path.nu}}}};
}

GeneratorConfig generator_from_json(const Json& j) {
  GeneratorConfig g;
  if (j.contains("volumetric")) {
    const Json& v = j["volumetric"];
    const std::string t = v.at("type").get<std::string>();
    if (t == "simo_miehe")
      g.volumetric = SimoMiehe{v.at("kappa").get<double>()};
    else if (t == "vol_neo_hookean")
      g.volumetric = VolNeoHookean{v.at("kappa").get<double>()};
    else if (t == "vol_ogden")
      g.volumetric = VolOgden{v.at("kappa").get<double>(), v.at("beta").get<double>()};
    else
      throw ConfigError("unknown volumetric model: " + t);
  }
  if (j.contains("isochoric")) {
    const Json& v = j["isochoric"];
    const std::string t = v.at("type").get<std::string>();
    if (t == "neo_hookean")
      g.isochoric = NeoHookean{v.at("a10").get<double>()};
    else if (t == "mooney_rivlin")
      g.isochoric = MooneyRivlin{v.at("a10").get<double>(), v.at("a01").get<double>()};
    else if (t == "yeoh")
      g.isochoric = Yeoh{v.at("c1").get<double>(), v.at("c2").get<double>()};
    else if (t == "gent")
      g.isochoric = Gent{v.at("mu").get<double>(), v.at("jm").get<double>()};
    else if (t == "gent_gent")
      g.isochoric = GentGent{v.at("mu").get<double>(), v.at("jm").get<double>(),
                             v.at("c2").get<double>()};
    else
      throw ConfigError("unknown isochoric model: " + t);
  }
  if (j.contains("damage")) {
    const Json& v = j["damage"];
    const std::string t = v.at("type").get<std::string>();
    if (t == "none")
      g.damage = NoDamage{};
    else if (t == "volokh_reduced")
      g.damage = VolokhReduced{v.at("phi").get<double>()};
    else if (t == "volokh_universal")
      g.damage = VolokhUniversal{v.at("phi").get<double>(), v.at("m").get<double>()};
    else if (t == "chandrashekar_upadhyay")
      g.damage = ChandrashekarUpadhyay{v.at("phi_plus").get<double>(), v.at("m_plus").get<double>(),
                                       v.at("phi_minus").get<double>(),
                                       v.at("m_minus").get<double>(), v.at("beta").get<double>()};
    else
      throw ConfigError("unknown damage law: " + t);
  }
  if (j.contains("path")) {
    const Json& p = j["path"];
    g.path.mode = path_mode_from_string(p.value("mode", std::string("uniaxial_tension")));
    if (p.contains("range")) {
      g.path.start = p["range"][0].get<double>();
      g.path.stop = p["range"][1].get<double>();
    }
    g.path.n_points = p.value("n_points", g.path.n_points);
    g.path.nu = p.value("nu", g.path.nu);
    if (g.path.nu < 0.0 || g.path.nu >= 0.5)
      throw ConfigError("nu must lie in [0, 0.5)");
    if (g.path.start <= 0.0 && g.path.mode != PathMode::SimpleShear)
      throw ConfigError("stretch range must be positive");
  }
  return g;
}

RunConfig run_config_from_json(const Json& j) {
  RunConfig c;
  if (j.contains("dataset_csv")) {
    c.dataset_csv = j["dataset_csv"].get<std::string>();
    c.use_generator = false;
  }
  if (j.contains("generator")) {
    c.generator = generator_from_json(j["generator"]);
    c.use_generator = c.dataset_csv.empty();
  }
  c.cutoff = j.value("cutoff", c.cutoff);
  if (j.contains("nuggets")) {
    const Json& n = j["nuggets"];
    const auto pair = [](const Json& p, NuggetPair d) {
      return NuggetPair{p.value("reference", d.reference), p.value("default", d.bulk)};
    };
    if (n.contains("m_vol")) c.stage1_nuggets.m_vol = pair(n["m_vol"], c.stage1_nuggets.m_vol);
    if (n.contains("m_iso")) c.stage1_nuggets.m_iso = pair(n["m_iso"], c.stage1_nuggets.m_iso);
    if (n.contains("m_dam")) c.dam_nugget = n["m_dam"].value("default", c.dam_nugget);
    if (n.contains("black_box")) c.blackbox_nugget = n["black_box"].value("default", c.blackbox_nugget);
  }
  if (j.contains("constraints")) c.constraints = constraint_config_from_json(j["constraints"]);
  c.seed = j.value("seed", c.seed);
  c.restarts = j.value("restarts", c.restarts);
  c.output_dir = j.value("output_dir", c.output_dir);
  return c;
}

}  // namespace tsgpr
