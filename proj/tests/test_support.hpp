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

#include <doctest.h>

#include <cstddef>
#include <string>
#include <vector>

#include "qcs/complex_matrix.hpp"
#include "qcs/random.hpp"
#include "qcs/regions.hpp"
#include "qcs/states.hpp"

namespace qcs_test {

inline qcs::RegionSpec quantum(const std::string& label, std::size_t dim) {
  return qcs::RegionSpec{label, dim, qcs::RegionKind::Quantum, {}};
}

inline qcs::RegionSpec classical(const std::string& label,
                                 std::vector<std::string> basis) {
  return qcs::RegionSpec{label, basis.size(), qcs::RegionKind::Classical,
                         std::move(basis)};
}

inline void check_close(const qcs::ComplexMatrix& actual,
                        const qcs::ComplexMatrix& expected, double tol) {
  REQUIRE(actual.rows() == expected.rows());
  REQUIRE(actual.cols() == expected.cols());
  const double diff = qcs::max_abs_diff(actual, expected);
  CAPTURE(diff);
  CHECK(diff <= tol);
}

/// Random full-rank density operator on the given region.
inline qcs::DensityOperator random_state(qcs::Prng& rng,
                                         const qcs::CompositeRegion& region) {
  return qcs::DensityOperator(
      qcs::LabeledOperator(region, qcs::random_density(rng, region.total_dim())));
}

/// Random diagonal (classical) density with strictly positive weights.
inline qcs::ComplexMatrix random_classical_matrix(qcs::Prng& rng,
                                                  std::size_t dim) {
  std::vector<qcs::Complex> diag(dim);
  double total = 0.0;
  std::vector<double> weights(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    weights[i] = 0.05 + rng.uniform();
    total += weights[i];
  }
  for (std::size_t i = 0; i < dim; ++i) {
    diag[i] = qcs::Complex(weights[i] / total, 0.0);
  }
  return qcs::ComplexMatrix::diagonal(diag);
}

}  // namespace qcs_test
