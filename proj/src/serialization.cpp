// Copyright 2026 The qcs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcs/serialization.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <vector>

#include "qcs/errors.hpp"

namespace qcs {

namespace {

double number_from_json(const nlohmann::json& j, const char* what) {
  if (!j.is_number()) {
    throw ParseError(std::string(what) + ": expected a number");
  }
  return j.get<double>();
}

std::string string_from_json(const nlohmann::json& j, const char* what) {
  if (!j.is_string()) {
    throw ParseError(std::string(what) + ": expected a string");
  }
  return j.get<std::string>();
}

std::size_t dim_from_json(const nlohmann::json& j, const char* what) {
  if (!j.is_number_unsigned() || j.get<std::size_t>() == 0) {
    throw ParseError(std::string(what) + ": expected a positive integer");
  }
  return j.get<std::size_t>();
}

}  // namespace

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) {
    throw ParseError("matrix: expected a nonempty array of rows");
  }
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  std::vector<Complex> entries;
  for (std::size_t r = 0; r < rows; ++r) {
    const nlohmann::json& row = j[r];
    if (!row.is_array() || row.empty()) {
      throw ParseError("matrix: row " + std::to_string(r) +
                       " is not a nonempty array");
    }
    if (r == 0) {
      cols = row.size();
      entries.reserve(rows * cols);
    } else if (row.size() != cols) {
      throw ParseError("matrix: row " + std::to_string(r) + " has " +
                       std::to_string(row.size()) + " entries, expected " +
                       std::to_string(cols));
    }
    for (const nlohmann::json& entry : row) {
      if (!entry.is_array() || entry.size() != 2) {
        throw ParseError("matrix: entries must be [re, im] pairs");
      }
      entries.emplace_back(number_from_json(entry[0], "matrix entry"),
                           number_from_json(entry[1], "matrix entry"));
    }
  }
  try {
    return ComplexMatrix(rows, cols, std::move(entries));
  } catch (const ValidationError& e) {
    throw ParseError(e.what());
  }
}

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      row.push_back({m(r, c).real(), m(r, c).imag()});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

RegionSpec region_spec_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("region: expected an object");
  RegionSpec spec;
  if (!j.contains("label")) throw ParseError("region: missing 'label'");
  spec.label = string_from_json(j.at("label"), "region label");
  if (!j.contains("dim")) throw ParseError("region: missing 'dim'");
  spec.dim = dim_from_json(j.at("dim"), "region dim");
  if (j.contains("kind")) {
    const std::string kind = string_from_json(j.at("kind"), "region kind");
    if (kind == "quantum") {
      spec.kind = RegionKind::Quantum;
    } else if (kind == "classical") {
      spec.kind = RegionKind::Classical;
    } else {
      throw ParseError("region kind must be 'quantum' or 'classical', got '" +
                       kind + "'");
    }
  }
  if (j.contains("basis_labels")) {
    const nlohmann::json& labels = j.at("basis_labels");
    if (!labels.is_array()) {
      throw ParseError("region basis_labels: expected an array");
    }
    for (const nlohmann::json& l : labels) {
      spec.basis_labels.push_back(string_from_json(l, "basis label"));
    }
  }
  try {
    spec.validate();
  } catch (const RegionError& e) {
    throw ParseError(e.what());
  }
  return spec;
}

nlohmann::json region_spec_to_json(const RegionSpec& spec) {
  nlohmann::json j;
  j["label"] = spec.label;
  j["dim"] = spec.dim;
  j["kind"] = spec.kind == RegionKind::Classical ? "classical" : "quantum";
  if (!spec.basis_labels.empty()) j["basis_labels"] = spec.basis_labels;
  return j;
}

ChoiState choi_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("channel state: expected an object");
  if (!j.contains("in_dim") || !j.contains("out_dim")) {
    throw ParseError("channel state: missing 'in_dim' or 'out_dim'");
  }
  const std::size_t in_dim = dim_from_json(j.at("in_dim"), "in_dim");
  const std::size_t out_dim = dim_from_json(j.at("out_dim"), "out_dim");

  ChoiConvention convention = ChoiConvention::Jamiolkowski;
  if (j.contains("convention")) {
    const std::string c = string_from_json(j.at("convention"), "convention");
    if (c == "jamiolkowski") {
      convention = ChoiConvention::Jamiolkowski;
    } else if (c == "choi") {
      convention = ChoiConvention::Choi;
    } else {
      throw ParseError(
          "convention must be 'jamiolkowski' or 'choi', got '" + c + "'");
    }
  }

  std::string in_label = "in";
  std::string out_label = "out";
  if (j.contains("in_label")) {
    in_label = string_from_json(j.at("in_label"), "in_label");
  }
  if (j.contains("out_label")) {
    out_label = string_from_json(j.at("out_label"), "out_label");
  }

  if (!j.contains("matrix")) throw ParseError("channel state: missing 'matrix'");
  ComplexMatrix m = matrix_from_json(j.at("matrix"));
  if (m.rows() != in_dim * out_dim || m.cols() != in_dim * out_dim) {
    throw ParseError("channel state: matrix is " + std::to_string(m.rows()) +
                     "x" + std::to_string(m.cols()) + " but in_dim*out_dim is " +
                     std::to_string(in_dim * out_dim));
  }
  RegionSpec in{in_label, in_dim, RegionKind::Quantum, {}};
  RegionSpec out{out_label, out_dim, RegionKind::Quantum, {}};
  try {
    return ChoiState(std::move(in), std::move(out), std::move(m), convention);
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

nlohmann::json choi_to_json(const ChoiState& state) {
  nlohmann::json j;
  j["in_dim"] = state.in_dim();
  j["out_dim"] = state.out_dim();
  j["in_label"] = state.in().label;
  j["out_label"] = state.out().label;
  j["convention"] = state.convention() == ChoiConvention::Jamiolkowski
                        ? "jamiolkowski"
                        : "choi";
  j["matrix"] = matrix_to_json(state.matrix());
  return j;
}

Povm povm_from_json(const nlohmann::json& j, const Tolerances& tol) {
  if (!j.is_object()) throw ParseError("POVM: expected an object");
  if (!j.contains("region")) throw ParseError("POVM: missing 'region'");
  RegionSpec region = region_spec_from_json(j.at("region"));
  if (!j.contains("elements") || !j.at("elements").is_array() ||
      j.at("elements").empty()) {
    throw ParseError("POVM: 'elements' must be a nonempty array");
  }
  std::vector<PovmElement> elements;
  for (const nlohmann::json& e : j.at("elements")) {
    if (!e.is_object() || !e.contains("label") || !e.contains("matrix")) {
      throw ParseError("POVM element: expected {label, matrix}");
    }
    elements.push_back(PovmElement{
        string_from_json(e.at("label"), "POVM element label"),
        matrix_from_json(e.at("matrix"))});
  }
  return Povm(std::move(region), std::move(elements), tol);
}

nlohmann::json labeled_operator_to_json(const LabeledOperator& op) {
  nlohmann::json j;
  j["factors"] = op.region.labels();
  j["matrix"] = matrix_to_json(op.matrix);
  return j;
}

nlohmann::json parse_json_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw ParseError("input is not valid JSON");
  }
  return j;
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open file '" + path + "'");
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json_text(buffer.str());
}

std::string format_complex(Complex z, int precision) {
  double re = z.real();
  double im = z.imag();
  if (re == 0.0) re = 0.0;  // normalize -0
  if (im == 0.0) im = 0.0;
  std::ostringstream out;
  out << std::defaultfloat << std::setprecision(precision) << re
      << (im < 0.0 ? "-" : "+") << std::abs(im) << "i";
  return out.str();
}

std::string format_matrix(const ComplexMatrix& m, int precision) {
  std::vector<std::string> cells;
  cells.reserve(m.rows() * m.cols());
  std::size_t width = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      cells.push_back(format_complex(m(r, c), precision));
      width = std::max(width, cells.back().size());
    }
  }
  std::ostringstream out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << "[ ";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const std::string& cell = cells[r * m.cols() + c];
      out << std::string(width - cell.size(), ' ') << cell;
      out << (c + 1 < m.cols() ? "  " : " ");
    }
    out << "]\n";
  }
  return out.str();
}

}  // namespace qcs
