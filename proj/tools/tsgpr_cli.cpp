// Command-line front end for the two-stage constitutive model library.
// Talks to the core exclusively through the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tsgpr/tsgpr_c.h"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    std::exit(2);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    std::exit(2);
  }
  out << content;
}

int fail_with_last_error() {
  std::cerr << "error: " << tsgpr_last_error() << "\n";
  return 1;
}

struct OwnedString {
  char* p = nullptr;
  ~OwnedString() { tsgpr_string_free(p); }
};

std::string path_spec_json(const std::string& mode, double lo, double hi, int n, double nu) {
  std::ostringstream ss;
  ss << "{\"mode\":\"" << mode << "\",\"range\":[" << lo << "," << hi << "],\"n_points\":" << n
     << ",\"nu\":" << nu << "}";
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-stage GPR constitutive modeling for hyperelastic materials with damage"};
  app.set_version_flag("--version", std::string(tsgpr_version()));
  app.require_subcommand(1);

  // generate
  std::string gen_config, gen_out = "dataset.csv";
  auto* generate = app.add_subcommand("generate", "Generate a synthetic ground-truth dataset CSV");
  generate->add_option("-c,--config", gen_config, "Generator config JSON file")->required();
  generate->add_option("-o,--output", gen_out, "Output CSV path");

  // fit
  std::string fit_config, fit_model_out = "model.json", fit_report_out;
  auto* fit = app.add_subcommand("fit", "Train the two-stage model");
  fit->add_option("-c,--config", fit_config, "Run config JSON file")->required();
  fit->add_option("-o,--output", fit_model_out, "Output model file (tsm-1 JSON)");
  fit->add_option("-r,--report", fit_report_out, "Optional training-report JSON path");

  // predict
  std::string pred_model, pred_mode = "uniaxial_tension", pred_out;
  double pred_lo = 1.0, pred_hi = 1.5, pred_nu = -1.0;
  int pred_n = 51;
  auto* predict = app.add_subcommand("predict", "Evaluate a trained model along a path");
  predict->add_option("-m,--model", pred_model, "Model file")->required();
  predict->add_option("--mode", pred_mode,
                      "uniaxial_tension|uniaxial_compression|simple_shear|incompressible_uniaxial");
  predict->add_option("--from", pred_lo, "Path start (lambda or gamma)");
  predict->add_option("--to", pred_hi, "Path end")->required();
  predict->add_option("-n,--points", pred_n, "Grid points");
  predict->add_option("--nu", pred_nu, "Lateral exponent (defaults to the training value)");
  predict->add_option("-o,--output", pred_out, "Output CSV (stdout if omitted)");

  // benchmark
  std::string bench_config, bench_out;
  auto* benchmark = app.add_subcommand("benchmark", "Compare the four models on synthetic data");
  benchmark->add_option("-c,--config", bench_config, "Run config JSON file")->required();
  benchmark->add_option("-o,--output", bench_out, "Optional JSON report path");

  // export
  std::string exp_model, exp_dataset, exp_out;
  auto* exp = app.add_subcommand("export", "Export the stage-II energy trace for a dataset");
  exp->add_option("-m,--model", exp_model, "Model file")->required();
  exp->add_option("-d,--dataset", exp_dataset, "Dataset CSV")->required();
  exp->add_option("-o,--output", exp_out, "Output CSV (stdout if omitted)");

  CLI11_PARSE(app, argc, argv);

  if (*generate) {
    if (tsgpr_generate(read_file(gen_config).c_str(), gen_out.c_str()) != TSGPR_OK)
      return fail_with_last_error();
    std::cout << "wrote " << gen_out << "\n";
    return 0;
  }

  if (*fit) {
    OwnedString report;
    tsgpr_model* model = tsgpr_fit(read_file(fit_config).c_str(), &report.p);
    if (!model) return fail_with_last_error();
    const int rc = tsgpr_model_save(model, fit_model_out.c_str());
    tsgpr_model_free(model);
    if (rc != TSGPR_OK) return fail_with_last_error();
    if (!fit_report_out.empty() && report.p) write_file(fit_report_out, report.p);
    std::cout << "wrote " << fit_model_out << "\n";
    return 0;
  }

  if (*predict) {
    tsgpr_model* model = tsgpr_model_load(pred_model.c_str());
    if (!model) return fail_with_last_error();
    if (pred_mode == "simple_shear" && pred_lo == 1.0) pred_lo = 0.0;
    OwnedString csv;
    csv.p = tsgpr_predict_csv(model,
                              path_spec_json(pred_mode, pred_lo, pred_hi, pred_n,
                                             pred_nu < 0.0 ? 0.49 : pred_nu)
                                  .c_str());
    tsgpr_model_free(model);
    if (!csv.p) return fail_with_last_error();
    if (pred_out.empty())
      std::cout << csv.p;
    else
      write_file(pred_out, csv.p);
    return 0;
  }

  if (*benchmark) {
    OwnedString report;
    report.p = tsgpr_benchmark(read_file(bench_config).c_str());
    if (!report.p) return fail_with_last_error();
    if (!bench_out.empty()) write_file(bench_out, report.p);
    // print the human-readable table embedded in the report
    const std::string s = report.p;
    const auto key = s.find("\"table\"");
    if (key != std::string::npos) {
      std::istringstream stream(s.substr(key));
      std::string line;
      std::getline(stream, line);
      std::string table = line.substr(line.find(':') + 1);
      // unescape the JSON string value
      std::string outtext;
      bool esc = false;
      for (char c : table) {
        if (esc) {
          outtext += c == 'n' ? '\n' : c;
          esc = false;
        } else if (c == '\\')
          esc = true;
        else if (c != '"')
          outtext += c;
      }
      std::cout << outtext;
    }
    return 0;
  }

  if (*exp) {
    tsgpr_model* model = tsgpr_model_load(exp_model.c_str());
    if (!model) return fail_with_last_error();
    OwnedString csv;
    csv.p = tsgpr_export_trace_csv(model, exp_dataset.c_str());
    tsgpr_model_free(model);
    if (!csv.p) return fail_with_last_error();
    if (exp_out.empty())
      std::cout << csv.p;
    else
      write_file(exp_out, csv.p);
    return 0;
  }
  return 0;
}
