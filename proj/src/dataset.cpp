#include "tsgpr/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace tsgpr {

void Dataset::canonicalize() {
  const double anchor = anchor_parameter();
  std::stable_sort(states.begin(), states.end(), [&](const State& a, const State& b) {
    return std::abs(a.parameter - anchor) < std::abs(b.parameter - anchor);
  });
  const bool has_reference =
      !states.empty() && (states.front().C - SymTensor3::identity()).norm() < 1e-9;
  if (!has_reference) {
    State ref;
    ref.parameter = anchor;
    ref.C = SymTensor3::identity();
    states.insert(states.begin(), ref);
  }
  for (std::size_t i = 1; i + 1 < states.size(); ++i) {
    const double d0 = std::abs(states[i].parameter - anchor);
    const double d1 = std::abs(states[i + 1].parameter - anchor);
    if (!(d1 > d0)) throw ConfigError("path parameter not strictly monotone");
  }
}

Dataset dataset_from_generated(const std::vector<GeneratedState>& gen, PathMode mode) {
  Dataset d;
  d.mode = mode;
  d.incompressible = mode == PathMode::IncompressibleUniaxial;
  for (const auto& g : gen) d.states.push_back({g.parameter, g.C, g.S});
  d.canonicalize();
  return d;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void save_dataset_csv(const Dataset& data, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << "lambda_or_gamma,C11,C22,C33,C12,C13,C23,S11,S22,S33,S12,S13,S23\n";
  for (const auto& s : data.states) {
    out << format_double(s.parameter);
    for (int k = 0; k < 6; ++k) out << ',' << format_double(s.C.comp(k));
    for (int k = 0; k < 6; ++k) out << ',' << format_double(s.S.comp(k));
    out << '\n';
  }
}

Dataset load_dataset_csv(const std::string& path, PathMode mode, bool incompressible) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open dataset: " + path);
  Dataset d;
  d.mode = mode;
  d.incompressible = incompressible;
  std::string line;
  if (!std::getline(in, line)) throw IoError("empty dataset file: " + path);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    std::vector<double> row;
    while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
    if (row.size() != 13) throw IoError("expected 13 columns, got " + std::to_string(row.size()));
    State s;
    s.parameter = row[0];
    for (int k = 0; k < 6; ++k) s.C.comp(k) = row[1 + k];
    for (int k = 0; k < 6; ++k) s.S.comp(k) = row[7 + k];
    d.states.push_back(s);
  }
  if (d.states.empty()) throw EmptyDataset(path);
  d.canonicalize();
  return d;
}

}  // namespace tsgpr
