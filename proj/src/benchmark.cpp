#include "tsgpr/benchmark.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace tsgpr {

Dataset resolve_dataset(const RunConfig& config) {
  if (!config.use_generator)
    return load_dataset_csv(config.dataset_csv, config.generator.path.mode,
                            config.generator.path.mode == PathMode::IncompressibleUniaxial);
  return dataset_from_generated(generate_dataset(config.generator), config.generator.path.mode);
}

FitResult fit_two_stage(const Dataset& data, const RunConfig& config) {
  OptimizeOptions opts;
  opts.seed = config.seed;
  opts.restarts = config.restarts;

  FitResult out;
  out.model.stage1 = train_stage1(data, {config.cutoff}, config.stage1_nuggets, opts);
  out.model.meta.cutoff = config.cutoff;
  out.model.meta.path_mode = data.mode;
  out.model.meta.nu = config.generator.path.nu;
  out.model.meta.seed = config.seed;
  out.model.meta.restarts = config.restarts;

  out.report.trace = build_stage2_dataset(data, out.model.stage1);
  out.report.w_peak = out.report.trace.w_peak;

  OptimizeOptions dam_opts = opts;
  dam_opts.restarts = std::max(config.restarts, 8);
  out.model.damage = train_damage_model(trace_to_points(out.report.trace), config.constraints,
                                        config.dam_nugget, dam_opts);

  out.report.nlml_iso = out.model.stage1.m_iso.gpr().nlml();
  if (out.model.stage1.m_vol) out.report.nlml_vol = out.model.stage1.m_vol->gpr().nlml();
  out.report.nlml_dam = out.model.damage.gpr.nlml();
  const auto wc = constraint_points(out.model.damage.w_peak, config.constraints);
  out.report.penalty_nn = penalty_nn(out.model.damage.gpr, wc, config.constraints.lambda_nn);
  out.report.penalty_mono = penalty_mono(out.model.damage.gpr, wc, config.constraints.lambda_mono);
  out.report.constraints_satisfied = out.model.damage.constraints_satisfied;
  out.report.final_lambda = out.model.damage.final_lambda;
  return out;
}

Json fit_report_json(const FitReport& r) {
  Json trace = Json::array();
  for (const auto& p : r.trace.points)
    trace.push_back(Json{{"parameter", p.parameter}, {"W", p.w}, {"chi", p.chi}});
  return Json{{"nlml", Json{{"m_vol", r.nlml_vol}, {"m_iso", r.nlml_iso}, {"m_dam", r.nlml_dam}}},
              {"penalties", Json{{"nn", r.penalty_nn}, {"mono", r.penalty_mono}}},
              {"w_peak", r.w_peak},
              {"constraints_satisfied", r.constraints_satisfied},
              {"final_lambda", r.final_lambda},
              {"stage2_trace", trace}};
}

namespace {

std::vector<double> path_params_of(const Dataset& d) {
  std::vector<double> p;
  p.reserve(d.size());
  for (const auto& s : d.states) p.push_back(s.parameter);
  return p;
}

std::vector<SymTensor3> truth_of(const Dataset& d) {
  std::vector<SymTensor3> s;
  s.reserve(d.size());
  for (const auto& st : d.states) s.push_back(st.S);
  return s;
}

std::vector<SymTensor3> path_of(const Dataset& d) {
  std::vector<SymTensor3> c;
  c.reserve(d.size());
  for (const auto& st : d.states) c.push_back(st.C);
  return c;
}

}  // namespace

BenchmarkResult run_benchmark(const RunConfig& config) {
  namespace fs = std::filesystem;
  fs::create_directories(config.output_dir);

  const Dataset tension = resolve_dataset(config);
  const auto params = path_params_of(tension);
  const auto truth = truth_of(tension);
  const auto Cs = path_of(tension);

  OptimizeOptions opts;
  opts.seed = config.seed;
  opts.restarts = config.restarts;

  // proposed two-stage model
  const FitResult fit = fit_two_stage(tension, config);
  const PathPrediction proposed = predict_path(fit.model, Cs);

  // analytical reference (calibrated constants, closed form)
  const AnalyticalBenchmark bench;
  std::vector<SymTensor3> s_analytical;
  s_analytical.reserve(Cs.size());
  for (const auto& C : Cs) s_analytical.push_back(analytical_stress(bench, C));

  // black-box and single-stage baselines
  const BlackBoxModel bb = train_blackbox(tension, config.blackbox_nugget, opts);
  std::vector<SymTensor3> s_bb;
  s_bb.reserve(Cs.size());
  for (const auto& C : Cs) s_bb.push_back(bb.predict(C));

  const DirectModel direct = train_direct(tension, config.stage1_nuggets, opts);
  std::vector<SymTensor3> s_direct;
  s_direct.reserve(Cs.size());
  for (const auto& C : Cs) s_direct.push_back(direct.predict(C));

  BenchmarkResult result;
  result.rows.push_back({"two_stage", error_report(proposed.stress, truth, params)});
  result.rows.push_back({"analytical", error_report(s_analytical, truth, params)});
  result.rows.push_back({"black_box", error_report(s_bb, truth, params)});
  result.rows.push_back({"direct", error_report(s_direct, truth, params)});

  // out-of-sample grids against the same generator ground truth
  GeneratorConfig gen = config.generator;
  gen.path.mode = PathMode::UniaxialCompression;
  gen.path.start = 1.0;
  gen.path.stop = 0.5;
  const Dataset comp = dataset_from_generated(generate_dataset(gen), gen.path.mode);
  const PathPrediction comp_pred = predict_path(fit.model, path_of(comp));
  result.compression_proposed = error_report(comp_pred.stress, truth_of(comp), path_params_of(comp));

  gen.path.mode = PathMode::SimpleShear;
  gen.path.start = 0.0;
  gen.path.stop = 0.8;
  const Dataset shear = dataset_from_generated(generate_dataset(gen), gen.path.mode);
  const PathPrediction shear_pred = predict_path(fit.model, path_of(shear));
  result.shear_proposed = error_report(shear_pred.stress, truth_of(shear), path_params_of(shear));

  for (const auto& row : result.rows)
    save_error_csv(row.tension, config.output_dir + "/errors_tension_" + row.model + ".csv");
  save_error_csv(result.compression_proposed, config.output_dir + "/errors_compression_two_stage.csv");
  save_error_csv(result.shear_proposed, config.output_dir + "/errors_shear_two_stage.csv");

  std::ostringstream table;
  table << "In-distribution relative stress error, uniaxial tension\n";
  table << "(reference state excluded; mean / max over " << result.rows[0].tension.points.size()
        << " states)\n\n";
  char buf[128];
  std::snprintf(buf, sizeof buf, "%-12s %12s %12s\n", "model", "mean [%]", "max [%]");
  table << buf;
  for (const auto& row : result.rows) {
    std::snprintf(buf, sizeof buf, "%-12s %12.2f %12.2f\n", row.model.c_str(), row.tension.mean,
                  row.tension.max);
    table << buf;
  }
  result.text_table = table.str();
  return result;
}

std::string predict_csv(const TwoStageModel& model, const DeformationPath& path) {
  const std::vector<double> params = path_parameters(path);
  const std::vector<SymTensor3> Cs = generate_path(path);
  const PathPrediction pred = predict_path(model, Cs);
  std::ostringstream out;
  out << "parameter,S11,S22,S33,S12,S13,S23,W,psi,chi\n";
  for (std::size_t i = 0; i < Cs.size(); ++i) {
    out << format_double(params[i]);
    for (int k = 0; k < 6; ++k) out << ',' << format_double(pred.stress[i].comp(k));
    out << ',' << format_double(pred.w[i]) << ',' << format_double(pred.psi[i]) << ','
        << format_double(pred.chi[i]) << '\n';
  }
  return out.str();
}

}  // namespace tsgpr
