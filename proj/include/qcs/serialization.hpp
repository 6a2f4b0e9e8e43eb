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

#pragma once

#include <string>

#include <json.hpp>

#include "qcs/channels.hpp"
#include "qcs/complex_matrix.hpp"
#include "qcs/measurement.hpp"
#include "qcs/regions.hpp"

namespace qcs {

/// Matrices travel as nested arrays, row major, each entry a two-element
/// [re, im] array.
ComplexMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const ComplexMatrix& m);

/// {"label": ..., "dim": ..., "kind": "quantum"|"classical",
///  "basis_labels": [...]} with kind defaulting to quantum and
/// basis_labels optional.
RegionSpec region_spec_from_json(const nlohmann::json& j);
nlohmann::json region_spec_to_json(const RegionSpec& spec);

/// {"in_dim": ..., "out_dim": ..., "convention": "jamiolkowski"|"choi",
///  "matrix": ..., "in_label"?: ..., "out_label"?: ...}. Labels default
/// to "in" and "out".
ChoiState choi_from_json(const nlohmann::json& j);
nlohmann::json choi_to_json(const ChoiState& state);

/// {"region": regionspec, "elements": [{"label": ..., "matrix": ...}]}
Povm povm_from_json(const nlohmann::json& j,
                    const Tolerances& tol = Tolerances{});

nlohmann::json labeled_operator_to_json(const LabeledOperator& op);

/// Parse a JSON document, mapping syntax errors to ParseError.
nlohmann::json parse_json_text(const std::string& text);
nlohmann::json load_json_file(const std::string& path);

/// "a+bi" with the given number of significant digits; negative zero is
/// normalized away.
std::string format_complex(Complex z, int precision);

/// All rows on separate lines, entries space padded to a common width.
std::string format_matrix(const ComplexMatrix& m, int precision);

}  // namespace qcs
