#include "tsgpr/tsgpr_c.h"

#include <cstring>
#include <string>

#include "tsgpr/benchmark.hpp"

using tsgpr::Json;

struct tsgpr_model {
  tsgpr::TwoStageModel impl;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int classify(const std::exception& e) {
  g_last_error = e.what();
  if (dynamic_cast<const tsgpr::IoError*>(&e)) return TSGPR_ERR_IO;
  if (dynamic_cast<const tsgpr::ConfigError*>(&e)) return TSGPR_ERR_CONFIG;
  if (dynamic_cast<const tsgpr::Error*>(&e)) return TSGPR_ERR_NUMERIC;
  return TSGPR_ERR_INTERNAL;
}

}  // namespace

extern "C" {

const char* tsgpr_version(void) { return "tsgpr 1.0.0 (model format tsm-1)"; }

const char* tsgpr_last_error(void) { return g_last_error.c_str(); }

void tsgpr_string_free(char* s) { std::free(s); }

int tsgpr_generate(const char* config_json, const char* out_csv_path) {
  if (!config_json || !out_csv_path) {
    g_last_error = "null argument";
    return TSGPR_ERR_INVALID_ARGUMENT;
  }
  try {
    const Json j = Json::parse(config_json);
    const tsgpr::GeneratorConfig gen =
        tsgpr::generator_from_json(j.contains("generator") ? j["generator"] : j);
    const tsgpr::Dataset data =
        tsgpr::dataset_from_generated(tsgpr::generate_dataset(gen), gen.path.mode);
    tsgpr::save_dataset_csv(data, out_csv_path);
    return TSGPR_OK;
  } catch (const std::exception& e) {
    return classify(e);
  }
}

tsgpr_model* tsgpr_fit(const char* config_json, char** report_json_out) {
  if (!config_json) {
    g_last_error = "null config";
    return nullptr;
  }
  try {
    const tsgpr::RunConfig config = tsgpr::run_config_from_json(Json::parse(config_json));
    const tsgpr::Dataset data = tsgpr::resolve_dataset(config);
    tsgpr::FitResult fit = tsgpr::fit_two_stage(data, config);
    if (report_json_out) *report_json_out = dup_string(tsgpr::fit_report_json(fit.report).dump(2));
    return new tsgpr_model{std::move(fit.model)};
  } catch (const std::exception& e) {
    classify(e);
    return nullptr;
  }
}

int tsgpr_model_save(const tsgpr_model* model, const char* path) {
  if (!model || !path) {
    g_last_error = "null argument";
    return TSGPR_ERR_INVALID_ARGUMENT;
  }
  try {
    tsgpr::save_model(model->impl, path);
    return TSGPR_OK;
  } catch (const std::exception& e) {
    return classify(e);
  }
}

tsgpr_model* tsgpr_model_load(const char* path) {
  if (!path) {
    g_last_error = "null path";
    return nullptr;
  }
  try {
    return new tsgpr_model{tsgpr::load_model(path)};
  } catch (const std::exception& e) {
    classify(e);
    return nullptr;
  }
}

void tsgpr_model_free(tsgpr_model* model) { delete model; }

char* tsgpr_predict_csv(const tsgpr_model* model, const char* path_spec_json) {
  if (!model || !path_spec_json) {
    g_last_error = "null argument";
    return nullptr;
  }
  try {
    const Json j = Json::parse(path_spec_json);
    tsgpr::DeformationPath path;
    path.mode = tsgpr::path_mode_from_string(j.value("mode", std::string("uniaxial_tension")));
    if (j.contains("range")) {
      path.start = j["range"][0].get<double>();
      path.stop = j["range"][1].get<double>();
    } else {
      path.start = path.mode == tsgpr::PathMode::SimpleShear ? 0.0 : 1.0;
    }
    path.n_points = j.value("n_points", 51);
    path.nu = j.value("nu", model->impl.meta.nu);
    return dup_string(tsgpr::predict_csv(model->impl, path));
  } catch (const std::exception& e) {
    classify(e);
    return nullptr;
  }
}

char* tsgpr_export_trace_csv(const tsgpr_model* model, const char* dataset_csv_path) {
  if (!model || !dataset_csv_path) {
    g_last_error = "null argument";
    return nullptr;
  }
  try {
    const tsgpr::Dataset data = tsgpr::load_dataset_csv(
        dataset_csv_path, model->impl.meta.path_mode, model->impl.incompressible());
    const tsgpr::EnergyTrace trace = tsgpr::build_stage2_dataset(data, model->impl.stage1);
    std::string out = "index,parameter,W,chi\n";
    for (std::size_t i = 0; i < trace.points.size(); ++i)
      out += std::to_string(i) + ',' + tsgpr::format_double(trace.points[i].parameter) + ',' +
             tsgpr::format_double(trace.points[i].w) + ',' +
             tsgpr::format_double(trace.points[i].chi) + '\n';
    return dup_string(out);
  } catch (const std::exception& e) {
    classify(e);
    return nullptr;
  }
}

int tsgpr_failure_energy(const tsgpr_model* model, double max_parameter, double* psi_f_out,
                         int* converged_out) {
  if (!model || !psi_f_out) {
    g_last_error = "null argument";
    return TSGPR_ERR_INVALID_ARGUMENT;
  }
  try {
    const tsgpr::FailureEnergyEstimate est =
        tsgpr::estimate_failure_energy(model->impl, max_parameter);
    *psi_f_out = est.psi_f;
    if (converged_out) *converged_out = est.converged ? 1 : 0;
    return TSGPR_OK;
  } catch (const std::exception& e) {
    return classify(e);
  }
}

char* tsgpr_benchmark(const char* config_json) {
  if (!config_json) {
    g_last_error = "null config";
    return nullptr;
  }
  try {
    const tsgpr::RunConfig config = tsgpr::run_config_from_json(Json::parse(config_json));
    const tsgpr::BenchmarkResult res = tsgpr::run_benchmark(config);
    Json rows = Json::array();
    for (const auto& row : res.rows)
      rows.push_back(Json{{"model", row.model},
                          {"mean_percent", row.tension.mean},
                          {"max_percent", row.tension.max}});
    const Json out{{"tension", rows},
                   {"compression_two_stage",
                    Json{{"mean_percent", res.compression_proposed.mean},
                         {"max_percent", res.compression_proposed.max}}},
                   {"shear_two_stage",
                    Json{{"mean_percent", res.shear_proposed.mean},
                         {"max_percent", res.shear_proposed.max}}},
                   {"table", res.text_table}};
    return dup_string(out.dump(2));
  } catch (const std::exception& e) {
    classify(e);
    return nullptr;
  }
}

}  // extern "C"
